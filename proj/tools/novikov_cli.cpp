// Command line front end: validation, spectral numbers, best approximation,
// adapted bases, boundary depth, homology ranks and the brute-force oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "novikov/complex.hpp"
#include "novikov/errors.hpp"
#include "novikov/generators.hpp"
#include "novikov/io.hpp"
#include "novikov/oracle.hpp"
#include "novikov/reduction.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace novikov;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kExhausted = 2;
constexpr int kParse = 3;
constexpr const char* kSchema = "novikov-cli/1";

std::string rational_text(const Exponent& e) { return format_rational(e.value()); }

std::string valuation_text(const Valuation& v) {
  if (v.is_finite()) return rational_text(v.value());
  if (v.is_infinite()) return "inf";
  return ">=" + rational_text(v.value());
}

json vector_json(const ValuedVector& v) {
  json out = json::array();
  for (const auto& e : v.entries()) out.push_back(e.str());
  return out;
}

json trace_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients) coeffs.push_back(format_rational(c));
    steps.push_back({{"level", rational_text(s.level)}, {"coefficients", coeffs}});
  }
  return steps;
}

Exponent parse_precision(const std::string& text) { return Exponent(parse_rational(text)); }

// 4 * spread + 1 over {0} and {e - t_i : T^e in row i of A or w}.
Exponent approx_default_precision(const ValuedMatrix& a, const WeightVector& t,
                                  const ValuedVector& w) {
  Exponent lo = 0, hi = 0;
  auto visit = [&](std::size_t i, const NovikovSeries& s) {
    for (const auto& term : s.terms()) {
      const Exponent e = term.exponent - t[i];
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  };
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) visit(i, a.at(i, j));
    visit(i, w[i]);
  }
  return Integer(4) * (hi - lo) + Exponent(1);
}

struct Options {
  bool json_out = false;
  std::string file;
  std::string cycle;
  std::string precision;
  std::string weights;
  std::string target;
  bool trace = false;
  std::size_t random = 0;
  std::optional<std::uint64_t> seed;
};

void emit(const Options& o, const json& doc, const std::string& human) {
  if (o.json_out) {
    json out = doc;
    out["schema"] = kSchema;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

int cmd_check(const Options& o) {
  const FilteredComplex c = load_complex(o.file);
  const ValidationReport r = validate(c);
  json doc{{"command", "check"}, {"valid", r.valid()}, {"notes", r.notes}};
  if (!r.valid())
    doc["violation"] = {{"kind", to_string(r.violation->kind)},
                        {"row", r.violation->row},
                        {"column", r.violation->column},
                        {"message", r.violation->message}};
  emit(o, doc, r.str() + "\n");
  return r.valid() ? kOk : kInvalid;
}

int require_valid(const Options& o, const FilteredComplex& c) {
  const ValidationReport r = validate(c);
  if (r.valid()) return kOk;
  std::cerr << "error: " << r.str() << "\n";
  if (o.json_out) std::cout << json{{"schema", kSchema}, {"valid", false}, {"message", r.str()}}.dump(2) << "\n";
  return kInvalid;
}

int cmd_spectral(const Options& o) {
  const FilteredComplex c = load_complex(o.file);
  if (int rc = require_valid(o, c)) return rc;
  const Chain x = parse_vector_literal(o.cycle, c.field());
  if (x.size() != c.size()) throw ParseError("cycle has " + std::to_string(x.size()) +
                                             " entries, expected " + std::to_string(c.size()), 0);
  const Tristate cyc = is_cycle(c, x);
  if (cyc == Tristate::no) {
    std::cerr << "error: the given chain is not a cycle\n";
    return kInvalid;
  }
  const Exponent p = o.precision.empty() ? default_precision(c, &x) : parse_precision(o.precision);
  const ComplexSolver solver(c, p);
  const SpectralResult r = solver.spectral(x);

  json doc{{"command", "spectral"},
           {"rho", r.rho.str()},
           {"status", to_string(r.status)},
           {"precision", rational_text(r.precision)},
           {"representative", vector_json(r.representative)},
           {"in_spectrum", r.rho.is_finite() ? json(spectrality_check(c, r)) : json(nullptr)}};
  std::string human = "rho = " + r.rho.str() + "\nstatus: " + to_string(r.status) +
                      "\nprecision: " + rational_text(r.precision) +
                      "\nrepresentative: " + r.representative.str() + "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    doc["witness"] = {{"h", vector_json(w.h)},
                      {"level_h", w.level_h.str()},
                      {"level_c", w.level_c.str()},
                      {"depth", rational_text(w.depth)},
                      {"bound_holds", w.bound_holds}};
    human += "witness h: " + w.h.str() + "\n  ell(h) = " + w.level_h.str() + ", ell(c) + M = " +
             (w.level_c.is_finite() ? format_rational((w.level_c.value() + w.depth).value())
                                    : w.level_c.str()) +
             (w.bound_holds ? " (bound holds)\n" : " (bound FAILS)\n");
  }
  if (o.trace) {
    doc["trace"] = trace_json(r.trace);
    human += r.trace.to_log();
  }
  emit(o, doc, human);
  return r.status == ApproxStatus::optimal ? kOk : kExhausted;
}

int cmd_approx(const Options& o) {
  const MatrixFile m = load_matrix_file(o.file);
  const WeightVector t = !o.weights.empty() ? parse_weight_literal(o.weights)
                         : m.weights        ? *m.weights
                                            : WeightVector(m.a.rows(), Exponent(0));
  if (o.target.empty() && !m.target) throw ParseError("no target given (--target)", 0);
  const ValuedVector w = !o.target.empty() ? parse_vector_literal(o.target, m.field) : *m.target;
  if (t.size() != m.a.rows() || w.size() != m.a.rows())
    throw ParseError("weights and target need " + std::to_string(m.a.rows()) + " entries", 0);
  const Exponent p = !o.precision.empty() ? parse_precision(o.precision)
                     : m.precision        ? *m.precision
                                          : approx_default_precision(m.a, t, w);
  const ApproxResult r = best_approx(m.a, t, w, p);
  const auto& g = r.gamma_certificate;
  json doc{{"command", "approx"},
           {"distance", valuation_text(r.distance)},
           {"status", to_string(r.status)},
           {"precision", rational_text(p)},
           {"x0", vector_json(r.x0)},
           {"residual", vector_json(r.residual)},
           {"gamma", rational_text(r.gamma)},
           {"membership_certified", r.membership_certified},
           {"gamma_certificate",
            {{"x0_valuation", valuation_text(g.x0_valuation)},
             {"bound", g.bound ? json(rational_text(*g.bound)) : json(nullptr)},
             {"holds", g.holds}}}};
  std::string human = "distance exponent = " + valuation_text(r.distance) +
                      "\nstatus: " + to_string(r.status) + "\nx0: " + r.x0.str() +
                      "\nresidual: " + r.residual.str() + "\ngamma = " + rational_text(r.gamma) +
                      "\ngamma bound: nu(x0) = " + valuation_text(g.x0_valuation) +
                      (g.bound ? " >= " + rational_text(*g.bound) : std::string()) +
                      (g.holds ? " holds\n" : " FAILS\n");
  if (o.trace) {
    doc["trace"] = trace_json(r.trace);
    human += r.trace.to_log();
  }
  emit(o, doc, human);
  return r.status == ApproxStatus::optimal ? kOk : kExhausted;
}

int cmd_basis(const Options& o) {
  const MatrixFile m = load_matrix_file(o.file);
  const Exponent p = !o.precision.empty() ? parse_precision(o.precision) : m.precision.value_or(Exponent(8));
  const AdaptedBasis b = adapted_basis(m.a, p);
  json basis = json::array(), pre = json::array(), dropped = json::array();
  std::string human;
  for (std::size_t i = 0; i < b.size(); ++i) {
    basis.push_back(vector_json(b.basis[i]));
    pre.push_back(vector_json(b.preimages[i]));
    human += "u" + std::to_string(i + 1) + " = " + b.basis[i].str() + "  preimage " +
             b.preimages[i].str() + "\n";
  }
  for (auto j : b.dropped_columns) dropped.push_back(j);
  human += "gamma = " + rational_text(b.gamma) + "\n";
  if (!b.certified) human += "warning: some columns were dropped only at precision\n";
  emit(o, json{{"command", "basis"}, {"basis", basis}, {"preimages", pre}, {"gamma", rational_text(b.gamma)},
               {"certified", b.certified}, {"dropped_columns", dropped}},
       human);
  return b.certified ? kOk : kExhausted;
}

int cmd_depth(const Options& o) {
  const FilteredComplex c = load_complex(o.file);
  if (int rc = require_valid(o, c)) return rc;
  const Exponent p = o.precision.empty() ? default_precision(c) : parse_precision(o.precision);
  const ComplexSolver solver(c, p);
  const Exponent m = solver.depth();
  emit(o, json{{"command", "depth"}, {"depth", rational_text(m)}, {"max_action", rational_text(c.max_action())}},
       "M = " + rational_text(m) + "\n");
  return kOk;
}

int cmd_rank(const Options& o) {
  const FilteredComplex c = load_complex(o.file);
  if (int rc = require_valid(o, c)) return rc;
  const std::optional<Exponent> p =
      o.precision.empty() ? std::nullopt : std::optional<Exponent>(parse_precision(o.precision));
  const HomologyRank h = homology_rank(c, p);
  json doc{{"command", "rank"}, {"total", h.total ? json(*h.total) : json(nullptr)}};
  std::string human = "total: " + (h.total ? std::to_string(*h.total) : std::string("unknown")) + "\n";
  bool decided = h.total.has_value();
  if (!h.by_degree.empty()) {
    json deg = json::object();
    for (const auto& [d, r] : h.by_degree) {
      deg[std::to_string(d)] = r ? json(*r) : json(nullptr);
      human += "degree " + std::to_string(d) + ": " + (r ? std::to_string(*r) : std::string("unknown")) + "\n";
      decided = decided && r.has_value();
    }
    doc["by_degree"] = deg;
  }
  emit(o, doc, human);
  return decided ? kOk : kExhausted;
}

struct OracleComparison {
  Valuation oracle = Valuation::infinity();
  std::optional<Valuation> enumerated;
  Valuation library = Valuation::infinity();
  ApproxStatus status = ApproxStatus::optimal;
  bool agree = false;
};

// The oracle's "at least the precision" matches a certified +inf or an
// exhausted answer; anything else must match exactly.
bool values_agree(const Valuation& oracle, const ApproxResult& r) {
  if (oracle.is_unknown() || oracle.is_infinite())
    return r.distance.is_infinite() || r.status == ApproxStatus::precision_exhausted;
  return r.status == ApproxStatus::optimal && r.distance == oracle;
}

OracleComparison compare(const Instance& inst) {
  OracleConfig cfg;
  cfg.field = inst.field;
  cfg.denominator = inst.denominator;
  cfg.precision = inst.precision;
  OracleComparison out;
  const OracleResult lin = oracle_best_approx_linear(inst.a, inst.t, inst.w, cfg);
  out.oracle = lin.value;
  bool agree = true;
  if (lin.window.rank == 0 || enumeration_fits(lin.window, cfg)) {
    const OracleResult en = oracle_best_approx(inst.a, inst.t, inst.w, cfg);
    out.enumerated = en.value;
    agree = en.value == lin.value;
  }
  const ApproxResult r = best_approx(inst.a, inst.t, inst.w, inst.precision);
  out.library = r.distance;
  out.status = r.status;
  out.agree = agree && values_agree(lin.value, r);
  return out;
}

int cmd_oracle(const Options& o) {
  if (o.random > 0) {
    std::uint64_t seed = 1;
    if (o.seed) {
      seed = *o.seed;
    } else if (const char* env = std::getenv("NOVIKOV_SEED")) {
      seed = std::stoull(env);
    }
    InstanceGenerator gen(seed);
    std::size_t mismatches = 0;
    json failures = json::array();
    for (std::size_t k = 0; k < o.random; ++k) {
      const Instance inst = random_instance(gen);
      const OracleComparison c = compare(inst);
      if (!c.agree) {
        ++mismatches;
        failures.push_back(json::parse(instance_to_json(inst)));
      }
    }
    emit(o, json{{"command", "oracle"}, {"seed", seed}, {"instances", o.random},
                 {"mismatches", mismatches}, {"failures", failures}},
         "seed " + std::to_string(seed) + ": " + std::to_string(o.random) + " instances, " +
             std::to_string(mismatches) + " mismatches\n");
    return mismatches == 0 ? kOk : kInvalid;
  }
  if (o.file.empty()) throw ParseError("oracle needs an instance file or --random N", 0);
  const Instance inst = instance_from_matrix_file(load_matrix_file(o.file));
  const OracleComparison c = compare(inst);
  json doc{{"command", "oracle"},
           {"oracle", valuation_text(c.oracle)},
           {"enumerated", c.enumerated ? json(valuation_text(*c.enumerated)) : json(nullptr)},
           {"best_approx", valuation_text(c.library)},
           {"status", to_string(c.status)},
           {"agree", c.agree}};
  emit(o, doc,
       "oracle: " + valuation_text(c.oracle) +
           (c.enumerated ? " (enumeration: " + valuation_text(*c.enumerated) + ")" : std::string()) +
           "\nbest_approx: " + valuation_text(c.library) + " [" + to_string(c.status) + "]\n" +
           (c.agree ? "agree\n" : "MISMATCH\n"));
  return c.agree ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best approximation over Novikov rings and spectral numbers of filtered complexes"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable output");

  auto* check = app.add_subcommand("check", "Validate a complex file");
  check->add_option("file", o.file, "Complex file")->required();

  auto* spectral = app.add_subcommand("spectral", "Spectral number of a cycle");
  spectral->add_option("file", o.file, "Complex file")->required();
  spectral->add_option("--cycle", o.cycle, "Cycle as a vector literal")->required();
  spectral->add_option("--precision", o.precision, "Working precision (rational)");
  spectral->add_flag("--trace", o.trace, "Print the reduction trace");

  auto* approx = app.add_subcommand("approx", "Weighted best approximation");
  approx->add_option("file", o.file, "Matrix file")->required();
  approx->add_option("--weights", o.weights, "Weights as a list of rationals");
  approx->add_option("--target", o.target, "Target vector literal");
  approx->add_option("--precision", o.precision, "Working precision (rational)");
  approx->add_flag("--trace", o.trace, "Print the reduction trace");

  auto* basis = app.add_subcommand("basis", "Adapted basis of a column space");
  basis->add_option("file", o.file, "Matrix file")->required();
  basis->add_option("--precision", o.precision, "Working precision (rational)");

  auto* depth = app.add_subcommand("depth", "Boundary depth M");
  depth->add_option("file", o.file, "Complex file")->required();
  depth->add_option("--precision", o.precision, "Working precision (rational)");

  auto* rank = app.add_subcommand("rank", "Homology ranks");
  rank->add_option("file", o.file, "Complex file")->required();
  rank->add_option("--precision", o.precision, "Working precision (rational)");

  auto* oracle = app.add_subcommand("oracle", "Cross-check best_approx against brute force");
  oracle->add_option("file", o.file, "Instance file");
  oracle->add_option("--random", o.random, "Check N random instances instead");
  oracle->add_option("--seed", o.seed, "Seed for --random (overrides NOVIKOV_SEED)");

  for (auto* sub : {check, spectral, approx, basis, depth, rank, oracle})
    sub->add_flag("--json", o.json_out, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*check) return cmd_check(o);
    if (*spectral) return cmd_spectral(o);
    if (*approx) return cmd_approx(o);
    if (*basis) return cmd_basis(o);
    if (*depth) return cmd_depth(o);
    if (*rank) return cmd_rank(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const NovikovError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
