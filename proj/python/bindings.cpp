#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "novikov/complex.hpp"
#include "novikov/errors.hpp"
#include "novikov/generators.hpp"
#include "novikov/io.hpp"
#include "novikov/oracle.hpp"
#include "novikov/reduction.hpp"

namespace py = pybind11;
using namespace novikov;

namespace {

std::string rational_text(const Exponent& e) { return format_rational(e.value()); }

std::string valuation_text(const Valuation& v) {
  if (v.is_finite()) return rational_text(v.value());
  if (v.is_infinite()) return "inf";
  return ">=" + rational_text(v.value());
}

std::vector<std::string> strings(const ValuedVector& v) {
  std::vector<std::string> out;
  for (const auto& e : v.entries()) out.push_back(e.str());
  return out;
}

ValuedVector vector_of(const std::vector<std::string>& entries, const Field& f) {
  std::vector<NovikovSeries> out;
  for (const auto& e : entries) out.push_back(parse_series(e, f));
  return ValuedVector(f, std::move(out));
}

ValuedMatrix matrix_of(const std::vector<std::vector<std::string>>& columns, std::size_t rows,
                       const Field& f) {
  std::vector<ValuedVector> cols;
  for (const auto& c : columns) cols.push_back(vector_of(c, f));
  return ValuedMatrix::from_columns(f, cols, rows);
}

WeightVector weights_of(const std::vector<std::string>& w) {
  WeightVector out;
  for (const auto& s : w) out.emplace_back(parse_rational(s));
  return out;
}

py::dict approx(const std::vector<std::vector<std::string>>& columns,
                const std::vector<std::string>& weights, const std::vector<std::string>& target,
                const std::string& precision, const std::string& field) {
  const Field f = Field::parse(field);
  const ApproxResult r = best_approx(matrix_of(columns, target.size(), f), weights_of(weights),
                                     vector_of(target, f), Exponent(parse_rational(precision)));
  py::dict d;
  d["distance"] = valuation_text(r.distance);
  d["status"] = to_string(r.status);
  d["x0"] = strings(r.x0);
  d["residual"] = strings(r.residual);
  d["gamma"] = rational_text(r.gamma);
  d["gamma_bound_holds"] = r.gamma_certificate.holds;
  return d;
}

py::dict basis(const std::vector<std::vector<std::string>>& columns, std::size_t rows,
               const std::string& precision, const std::string& field) {
  const Field f = Field::parse(field);
  const AdaptedBasis b = adapted_basis(matrix_of(columns, rows, f), Exponent(parse_rational(precision)));
  std::vector<std::vector<std::string>> u, x;
  for (std::size_t i = 0; i < b.size(); ++i) {
    u.push_back(strings(b.basis[i]));
    x.push_back(strings(b.preimages[i]));
  }
  py::dict d;
  d["basis"] = u;
  d["preimages"] = x;
  d["gamma"] = rational_text(b.gamma);
  d["certified"] = b.certified;
  return d;
}

py::dict spectral(const std::string& complex_json, const std::string& cycle,
                  std::optional<std::string> precision) {
  const FilteredComplex c = parse_complex(complex_json);
  const Chain x = parse_vector_literal(cycle, c.field());
  std::optional<Exponent> p;
  if (precision) p = Exponent(parse_rational(*precision));
  const SpectralResult r = spectral_number(c, x, p);
  py::dict d;
  d["rho"] = r.rho.str();
  d["status"] = to_string(r.status);
  d["representative"] = strings(r.representative);
  d["in_spectrum"] = spectrality_check(c, r);
  if (r.witness) {
    d["witness"] = strings(r.witness->h);
    d["bound_holds"] = r.witness->bound_holds;
  }
  return d;
}

py::dict validate_json(const std::string& complex_json) {
  const ValidationReport r = validate(parse_complex(complex_json));
  py::dict d;
  d["valid"] = r.valid();
  d["message"] = r.str();
  return d;
}

py::object homology(const std::string& complex_json) {
  const HomologyRank h = homology_rank(parse_complex(complex_json));
  py::dict d;
  d["total"] = h.total ? py::object(py::int_(*h.total)) : py::object(py::none());
  py::dict by;
  for (const auto& [deg, r] : h.by_degree) by[py::int_(deg)] = r ? py::object(py::int_(*r)) : py::object(py::none());
  d["by_degree"] = by;
  return d;
}

std::string oracle_linear(const std::string& instance_json) {
  const Instance inst = instance_from_matrix_file(parse_matrix_file(instance_json));
  OracleConfig cfg;
  cfg.field = inst.field;
  cfg.denominator = inst.denominator;
  cfg.precision = inst.precision;
  return valuation_text(oracle_best_approx_linear(inst.a, inst.t, inst.w, cfg).value);
}

std::string random_instance_json(std::uint64_t seed) {
  InstanceGenerator gen(seed);
  return instance_to_json(random_instance(gen));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact best approximation over Novikov rings";

  // Translators run newest first, so the derived ParseError goes last.
  py::register_exception<NovikovError>(m, "NovikovError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("normalize_series", [](const std::string& s, const std::string& field) {
    return parse_series(s, Field::parse(field)).str();
  }, py::arg("literal"), py::arg("field") = "Q");
  m.def("valuation", [](const std::string& s, const std::string& field) {
    return valuation_text(parse_series(s, Field::parse(field)).valuation());
  }, py::arg("literal"), py::arg("field") = "Q");
  m.def("multiply", [](const std::string& a, const std::string& b, const std::string& field) {
    const Field f = Field::parse(field);
    return (parse_series(a, f) * parse_series(b, f)).str();
  }, py::arg("a"), py::arg("b"), py::arg("field") = "Q");
  m.def("invert", [](const std::string& s, const std::string& precision, const std::string& field) {
    return invert(parse_series(s, Field::parse(field)), Exponent(parse_rational(precision))).str();
  }, py::arg("literal"), py::arg("precision"), py::arg("field") = "Q");
  m.def("best_approx", &approx, py::arg("columns"), py::arg("weights"), py::arg("target"),
        py::arg("precision"), py::arg("field") = "Q");
  m.def("adapted_basis", &basis, py::arg("columns"), py::arg("rows"), py::arg("precision"),
        py::arg("field") = "Q");
  m.def("spectral_number", &spectral, py::arg("complex_json"), py::arg("cycle"),
        py::arg("precision") = py::none());
  m.def("validate", &validate_json, py::arg("complex_json"));
  m.def("homology_rank", &homology, py::arg("complex_json"));
  m.def("boundary_depth", [](const std::string& j) {
    return rational_text(boundary_depth(parse_complex(j)));
  }, py::arg("complex_json"));
  m.def("fixture", [](const std::string& name) { return complex_to_json(fixture(name)); },
        py::arg("name"));
  m.def("fixture_names", &fixture_names);
  m.def("oracle_best_approx", &oracle_linear, py::arg("instance_json"));
  m.def("random_instance", &random_instance_json, py::arg("seed"));
}
