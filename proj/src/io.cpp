#include "novikov/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>
#include "novikov/errors.hpp"

namespace novikov {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NovikovError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what, 0); }

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string text_of(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  schema_error(where + ": expected a string or an integer");
}

Rational rational_of(const json& v, const std::string& where) {
  try {
    return parse_rational(text_of(v, where));
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.detail(), e.position());
  }
}

NovikovSeries series_of(const json& v, const Field& field, const std::string& where) {
  try {
    return parse_series(text_of(v, where), field);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.detail(), e.position());
  }
}

Field field_of(const json& obj) {
  if (!obj.contains("field")) return Field::rationals();
  try {
    return Field::parse(text_of(obj.at("field"), "field"));
  } catch (const ParseError&) {
    throw;
  } catch (const NovikovError& e) {
    schema_error(std::string("field: ") + e.what());
  }
}

std::vector<ValuedVector> columns_of(const json& cols, const Field& field, std::size_t rows,
                                     const std::string& where) {
  if (!cols.is_array()) schema_error(where + ": expected an array of columns");
  std::vector<ValuedVector> out;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const json& col = cols[j];
    if (!col.is_array() || col.size() != rows)
      schema_error(where + "[" + std::to_string(j) + "]: expected " + std::to_string(rows) +
                   " entries");
    std::vector<NovikovSeries> entries;
    for (std::size_t i = 0; i < rows; ++i)
      entries.push_back(
          series_of(col[i], field, where + "[" + std::to_string(j) + "][" + std::to_string(i) + "]"));
    out.emplace_back(field, std::move(entries));
  }
  return out;
}

json series_json(const NovikovSeries& s) { return s.str(); }

json matrix_columns_json(const ValuedMatrix& a) {
  json cols = json::array();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    json col = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) col.push_back(series_json(a.at(i, j)));
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

FilteredComplex parse_complex(std::string_view text) {
  const json doc = parse_json(text);
  const Field field = field_of(doc);
  const json& gens = member(doc, "generators");
  if (!gens.is_array()) schema_error("generators: expected an array");
  std::vector<Generator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    Generator gen;
    const json& label = member(g, "label");
    if (!label.is_string()) schema_error(where + ".label: expected a string");
    gen.label = label.get<std::string>();
    gen.action = Exponent(rational_of(member(g, "action"), where + ".action"));
    if (g.contains("degree")) {
      if (!g.at("degree").is_number_integer()) schema_error(where + ".degree: expected an integer");
      gen.degree = g.at("degree").get<int>();
    }
    generators.push_back(std::move(gen));
  }

  PeriodData period;
  if (doc.contains("period")) {
    const json& p = doc.at("period");
    const json& rank = member(p, "rank");
    if (!rank.is_number_unsigned()) schema_error("period.rank: expected a nonnegative integer");
    period.rank = rank.get<std::size_t>();
    if (p.contains("torsion")) {
      if (!p.at("torsion").is_array()) schema_error("period.torsion: expected an array");
      for (const auto& t : p.at("torsion")) {
        if (!t.is_number_integer()) schema_error("period.torsion: expected integers");
        period.torsion.emplace_back(t.get<long>());
      }
    }
    const json& weights = member(p, "weights");
    if (!weights.is_array()) schema_error("period.weights: expected an array");
    for (std::size_t k = 0; k < weights.size(); ++k)
      period.weights.push_back(rational_of(weights[k], "period.weights[" + std::to_string(k) + "]"));
  }

  const std::size_t n = generators.size();
  const auto cols = columns_of(member(doc, "boundary"), field, n, "boundary");
  if (cols.size() != n)
    schema_error("boundary: expected " + std::to_string(n) + " columns, got " + std::to_string(cols.size()));
  ValuedMatrix d = ValuedMatrix::from_columns(field, cols, n);
  try {
    return FilteredComplex(field, std::move(generators), std::move(period), std::move(d));
  } catch (const DimensionError& e) {
    schema_error(e.what());
  }
}

FilteredComplex load_complex(const std::string& path) { return parse_complex(read_file(path)); }

std::string complex_to_json(const FilteredComplex& c) {
  json doc;
  doc["field"] = c.field().name();
  json gens = json::array();
  for (const auto& g : c.generators()) {
    json item{{"label", g.label}, {"action", format_rational(g.action.value())}};
    if (g.degree) item["degree"] = *g.degree;
    gens.push_back(std::move(item));
  }
  doc["generators"] = std::move(gens);
  json weights = json::array();
  for (const auto& w : c.period().weights) weights.push_back(format_rational(w));
  json torsion = json::array();
  for (const auto& t : c.period().torsion) torsion.push_back(t.get_si());
  doc["period"] = {{"rank", c.period().rank}, {"torsion", torsion}, {"weights", weights}};
  doc["boundary"] = matrix_columns_json(c.boundary());
  return doc.dump(2) + "\n";
}

MatrixFile parse_matrix_file(std::string_view text) {
  const json doc = parse_json(text);
  MatrixFile out;
  out.field = field_of(doc);
  const json& cols = member(doc, "columns");
  std::size_t rows = 0;
  if (doc.contains("rows")) {
    if (!doc.at("rows").is_number_unsigned()) schema_error("rows: expected a nonnegative integer");
    rows = doc.at("rows").get<std::size_t>();
  } else if (cols.is_array() && !cols.empty() && cols[0].is_array()) {
    rows = cols[0].size();
  } else if (doc.contains("target") && doc.at("target").is_array()) {
    rows = doc.at("target").size();
  }
  const auto columns = columns_of(cols, out.field, rows, "columns");
  out.a = ValuedMatrix::from_columns(out.field, columns, rows);
  if (doc.contains("weights")) {
    const json& w = doc.at("weights");
    if (!w.is_array() || w.size() != rows)
      schema_error("weights: expected " + std::to_string(rows) + " entries");
    WeightVector t;
    for (std::size_t i = 0; i < rows; ++i)
      t.emplace_back(rational_of(w[i], "weights[" + std::to_string(i) + "]"));
    out.weights = std::move(t);
  }
  if (doc.contains("target")) {
    const json& w = doc.at("target");
    if (!w.is_array() || w.size() != rows)
      schema_error("target: expected " + std::to_string(rows) + " entries");
    std::vector<NovikovSeries> entries;
    for (std::size_t i = 0; i < rows; ++i)
      entries.push_back(series_of(w[i], out.field, "target[" + std::to_string(i) + "]"));
    out.target = ValuedVector(out.field, std::move(entries));
  }
  if (doc.contains("precision")) out.precision = Exponent(rational_of(doc.at("precision"), "precision"));
  if (doc.contains("denominator")) {
    if (!doc.at("denominator").is_number_integer()) schema_error("denominator: expected an integer");
    out.denominator = doc.at("denominator").get<long>();
  }
  return out;
}

MatrixFile load_matrix_file(const std::string& path) { return parse_matrix_file(read_file(path)); }

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["field"] = inst.field.name();
  doc["denominator"] = inst.denominator;
  doc["rows"] = inst.a.rows();
  doc["columns"] = matrix_columns_json(inst.a);
  json weights = json::array();
  for (const auto& t : inst.t) weights.push_back(format_rational(t.value()));
  doc["weights"] = std::move(weights);
  json target = json::array();
  for (const auto& e : inst.w.entries()) target.push_back(series_json(e));
  doc["target"] = std::move(target);
  doc["precision"] = format_rational(inst.precision.value());
  return doc.dump(2) + "\n";
}

Instance instance_from_matrix_file(const MatrixFile& m) {
  if (!m.weights || !m.target || !m.precision)
    schema_error("instance needs 'weights', 'target' and 'precision'");
  Instance inst;
  inst.field = m.field;
  inst.denominator = m.denominator.value_or(1);
  inst.a = m.a;
  inst.t = *m.weights;
  inst.w = *m.target;
  inst.precision = *m.precision;
  return inst;
}

namespace {

// Splits "[a, b]" into trimmed entries with their byte offsets.
std::vector<std::pair<std::string, std::size_t>> split_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  std::vector<std::pair<std::string, std::size_t>> out;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError("trailing characters after ']'", pos);
    return out;
  }
  for (;;) {
    skip();
    std::size_t start = pos;
    std::string item;
    if (pos < text.size() && text[pos] == '"') {
      const std::size_t close = text.find('"', pos + 1);
      if (close == std::string_view::npos) throw ParseError("unterminated quoted entry", pos);
      item = std::string(text.substr(pos + 1, close - pos - 1));
      start = pos + 1;
      pos = close + 1;
      skip();
    } else {
      while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
      std::size_t end = pos;
      while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
      item = std::string(text.substr(start, end - start));
    }
    if (item.empty()) throw ParseError("empty entry", start);
    out.emplace_back(std::move(item), start);
    if (pos >= text.size()) throw ParseError("expected ',' or ']'", pos);
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    if (text[pos] != ',') throw ParseError("expected ',' or ']'", pos);
    ++pos;
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters after ']'", pos);
  return out;
}

}  // namespace

ValuedVector parse_vector_literal(std::string_view text, const Field& field) {
  std::vector<NovikovSeries> entries;
  for (const auto& [item, offset] : split_list(text)) {
    try {
      entries.push_back(parse_series(item, field));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), offset + e.position());
    }
  }
  return ValuedVector(field, std::move(entries));
}

WeightVector parse_weight_literal(std::string_view text) {
  WeightVector out;
  for (const auto& [item, offset] : split_list(text)) {
    try {
      out.emplace_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), offset + e.position());
    }
  }
  return out;
}

}  // namespace novikov
