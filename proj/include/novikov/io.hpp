#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "novikov/complex.hpp"
#include "novikov/generators.hpp"

namespace novikov {

// File formats are documented in docs/formats.md. All parse failures raise
// ParseError with a byte offset into the given text.

std::string read_file(const std::string& path);

FilteredComplex parse_complex(std::string_view text);
FilteredComplex load_complex(const std::string& path);
std::string complex_to_json(const FilteredComplex& c);

/// Matrix file: a matrix given by columns, optionally with the weights,
/// target and precision of an approximation problem.
struct MatrixFile {
  Field field;
  ValuedMatrix a;
  std::optional<WeightVector> weights;
  std::optional<ValuedVector> target;
  std::optional<Exponent> precision;
  std::optional<long> denominator;
};

MatrixFile parse_matrix_file(std::string_view text);
MatrixFile load_matrix_file(const std::string& path);
std::string instance_to_json(const Instance& inst);
/// Requires weights, target and precision to be present.
Instance instance_from_matrix_file(const MatrixFile& m);

/// "[a, b, ...]" where each entry is a series literal, optionally quoted.
ValuedVector parse_vector_literal(std::string_view text, const Field& field);
/// "[0, 1/2, ...]" of rationals, optionally quoted.
WeightVector parse_weight_literal(std::string_view text);

}  // namespace novikov
