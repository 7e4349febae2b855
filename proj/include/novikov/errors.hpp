#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novikov {

/// Base class for every error raised by the library.
class NovikovError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal or file. `position` is a byte offset into the input.
class ParseError : public NovikovError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : NovikovError(what + " (at position " + std::to_string(position) + ")"),
        detail_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// A quantity that is needed is not determined at the available precision.
class PrecisionError : public NovikovError {
 public:
  using NovikovError::NovikovError;
};

/// Shapes or coefficient fields of operands do not agree.
class DimensionError : public NovikovError {
 public:
  using NovikovError::NovikovError;
};

}  // namespace novikov
