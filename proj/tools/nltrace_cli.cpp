// Command-line front end: parses JSON inputs, calls the library, prints JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nltrace/choquet.hpp"
#include "nltrace/errors.hpp"
#include "nltrace/fuzzy.hpp"
#include "nltrace/harness.hpp"
#include "nltrace/json_io.hpp"
#include "nltrace/spectral.hpp"
#include "nltrace/stepops.hpp"
#include "nltrace/sugeno.hpp"
#include "nltrace/weights.hpp"

namespace {

using namespace nltrace;

struct Options {
  std::string weight;
  std::vector<std::string> matrices;
  std::vector<std::string> stepops;
  std::vector<std::string> functions;
  std::string measure;
  double p = 1.0;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 1000;
  std::vector<std::size_t> dims;
  unsigned workers = 1;
  std::string out;
  std::size_t M = 1024;
  double eps = 1e-3;
  double horizon = 0.0;
  double bound = 1.0;
  bool allow_nonconcave = false;
  bool continuous = false;
  bool timing = false;
  std::string suite_id;
};

// Exit status for a finished computation: 0 pass, 1 violation.
int emit(const Json& j, const Options& o, bool passed = true) {
  const std::string text = j.dump();
  if (o.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write \"" + o.out + "\"");
    f << text << '\n';
  }
  return passed ? 0 : 1;
}

// The value is computed before any Json is built: a throw inside a braced
// Json initializer leaks the elements already constructed on some compilers.
template <class T>
int emit_value(const char* key, const T& v, const Options& o) {
  return emit(Json{{key, v}}, o);
}

int emit_report(const Report& r, const Options& o) {
  return emit(r.to_json(o.timing), o, r.passed);
}

std::uint64_t seed_of(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("NLTRACE_SEED")) {
    try {
      std::size_t pos = 0;
      const std::uint64_t s = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw InputError("NLTRACE_SEED must be an unsigned integer");
  }
  return 0;
}

const std::string& need(const std::string& v, const char* flag) {
  if (v.empty()) throw InputError(std::string(flag) + " is required");
  return v;
}

ComplexMatrix matrix_at(const Options& o, std::size_t i, std::size_t count) {
  if (o.matrices.size() != count)
    throw InputError("expected " + std::to_string(count) + " --matrix argument(s)");
  return matrix_from_json(load_json_arg(o.matrices[i]));
}

DiscreteWeight discrete(const Options& o) {
  return discrete_weight_from_json(load_json_arg(need(o.weight, "--weight")));
}

ContinuousWeight continuous(const Options& o) {
  return continuous_weight_from_json(load_json_arg(need(o.weight, "--weight")));
}

Json values_json(const SpectrumDesc& s) { return {{"values", s.values()}}; }

int run_stepop(const std::string& op, const Options& o) {
  if (o.stepops.size() != 1) throw InputError("expected one --stepop argument");
  const Json sj = load_json_arg(o.stepops[0]);
  const ContinuousWeight w = continuous(o);
  if (op == "lorentz") return emit_value("value", lorentz_norm(signed_segments_from_json(sj), w), o);
  const StepOperator a = step_operator_from_json(sj);
  if (op == "choquet") return emit_value("value", choquet_spectral(a, w), o);
  if (op == "stieltjes") return emit_value("value", choquet_stieltjes(a, w), o);
  if (op == "sugeno") return emit_value("value", sugeno_trace_step(a, w), o);
  if (op == "maxtype") return emit_value("value", max_type_value(a, w), o);
  if (op == "approx") return emit_value("value", partition_approx(a, w, o.M), o);
  if (op == "minwitness") {
    const MinWitness m = min_witness(a, w, o.eps);
    return emit({{"mass", m.mass}, {"checks", m.checks.to_json(o.timing)}}, o,
                m.checks.passed);
  }
  throw InputError("unknown stepop operation \"" + op + "\"");
}

int run_weight_check(const Options& o) {
  const Json j = load_json_arg(need(o.weight, "--weight"));
  const std::string kind = j.value("kind", "");
  const bool is_discrete = !o.continuous && (kind == "power" || kind == "explicit");
  bool concave;
  DoublingSup d;
  if (is_discrete) {
    const DiscreteWeight w = discrete_weight_from_json(j);
    const auto h = o.horizon > 0.0 ? static_cast<std::int64_t>(o.horizon)
                                   : kDefaultDiscreteHorizon;
    concave = is_concave(w, h);
    d = doubling_sup(w, h);
  } else {
    const ContinuousWeight w = continuous_weight_from_json(j);
    concave = is_concave(w);
    d = doubling_sup(w, o.horizon > 0.0 ? o.horizon : kDefaultContinuousHorizon);
  }
  return emit({{"concave", concave}, {"doubling_sup", d.value}}, o);
}

int run_falsify(const Options& o) {
  FalsifyConfig cfg;
  cfg.weight = discrete(o);
  cfg.p = o.p;
  if (!o.dims.empty()) cfg.dims = o.dims;
  cfg.trials = o.trials;
  cfg.seed = seed_of(o);
  cfg.workers = o.workers;
  cfg.bound = o.bound;
  return emit_report(falsify_triangle(cfg), o);
}

int run_suite_cmd(const Options& o) {
  if (o.suite_id == "list") {
    return emit({{"suites", suite_ids()}}, o);
  }
  SuiteConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = seed_of(o);
  cfg.workers = o.workers;
  cfg.dims = o.dims;
  return emit_report(run_suite(o.suite_id, cfg), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-linear traces of Choquet and Sugeno type"};
  app.require_subcommand(1);
  Options o;

  auto weight = [&](CLI::App* c) { c->add_option("--weight", o.weight, "weight JSON or file"); };
  auto matrix = [&](CLI::App* c) {
    c->add_option("--matrix", o.matrices, "matrix JSON or file (repeatable)");
  };
  auto p = [&](CLI::App* c) { c->add_option("--p", o.p, "exponent p > 0"); };
  auto out = [&](CLI::App* c) { c->add_option("--out", o.out, "write JSON here"); };
  auto run = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "master seed (default $NLTRACE_SEED or 0)");
    c->add_option("--trials", o.trials, "random trials");
    c->add_option("--dims", o.dims, "matrix dimensions")->delimiter(',');
    c->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1U, 1024U));
    c->add_flag("--timing", o.timing, "include elapsed_ms");
  };

  auto* eig = app.add_subcommand("eig", "descending eigenvalues of a Hermitian matrix");
  matrix(eig); out(eig);
  auto* sv = app.add_subcommand("sv", "singular values");
  matrix(sv); out(sv);
  auto* weyl = app.add_subcommand("weyl", "Weyl inequality check for two psd matrices");
  matrix(weyl); out(weyl);
  auto* choquet = app.add_subcommand("choquet", "phi_alpha(|a|)");
  matrix(choquet); weight(choquet); out(choquet);
  auto* pnorm = app.add_subcommand("pnorm", "weighted p-(quasi-)norm");
  matrix(pnorm); weight(pnorm); p(pnorm); out(pnorm);
  auto* ratio = app.add_subcommand("ratio", "|||a+b||| / (|||a||| + |||b|||)");
  matrix(ratio); weight(ratio); p(ratio); out(ratio);
  auto* sugeno = app.add_subcommand("sugeno", "Sugeno trace of a psd matrix");
  matrix(sugeno); weight(sugeno); out(sugeno);
  auto* metric = app.add_subcommand("metric", "Sugeno distance psi(|a - b|)");
  matrix(metric); weight(metric); out(metric);
  metric->add_flag("--allow-nonconcave", o.allow_nonconcave, "skip the concavity check");
  auto* extend = app.add_subcommand("extend", "Sugeno trace extended to arbitrary matrices");
  matrix(extend); weight(extend); out(extend);

  std::string stepop_op;
  auto* stepop = app.add_subcommand("stepop", "traces of step operators");
  stepop->add_option("op", stepop_op, "choquet|stieltjes|sugeno|approx|lorentz|maxtype|minwitness")
      ->required();
  stepop->add_option("--stepop", o.stepops, "step operator JSON or file");
  weight(stepop); out(stepop);
  stepop->add_option("--M", o.M, "partition size for approx");
  stepop->add_option("--eps", o.eps, "epsilon for minwitness");
  stepop->add_flag("--timing", o.timing, "include elapsed_ms");

  std::string integral;
  auto* integrate = app.add_subcommand("integrate", "fuzzy integrals");
  integrate->add_option("kind", integral, "choquet|sugeno")->required();
  integrate->add_option("--function", o.functions, "function JSON or file");
  integrate->add_option("--measure", o.measure, "measure JSON or file");
  out(integrate);
  auto* comonotone = app.add_subcommand("comonotone", "comonotonicity of two functions");
  comonotone->add_option("--function", o.functions, "function JSON or file (twice)");
  out(comonotone);

  std::string weight_op;
  auto* wcmd = app.add_subcommand("weight", "weight analysis");
  wcmd->add_option("op", weight_op, "check")->required();
  weight(wcmd); out(wcmd);
  wcmd->add_option("--horizon", o.horizon, "doubling horizon");
  wcmd->add_flag("--continuous", o.continuous, "read power weights as continuous");

  auto* falsify = app.add_subcommand("falsify", "search for triangle-inequality violations");
  weight(falsify); p(falsify); run(falsify); out(falsify);
  falsify->add_option("--bound", o.bound, "violation threshold (default 1)");

  auto* suite = app.add_subcommand("suite", "run a property suite (\"list\" for ids)");
  suite->add_option("id", o.suite_id, "suite id")->required();
  run(suite); out(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eig) return emit(values_json(hermitian_eigenvalues(matrix_at(o, 0, 1))), o);
    if (*sv) return emit(values_json(singular_values(matrix_at(o, 0, 1))), o);
    if (*weyl) return emit_report(weyl_check(matrix_at(o, 0, 2), matrix_at(o, 1, 2)), o);
    if (*choquet)
      return emit_value("value", choquet_trace(singular_values(matrix_at(o, 0, 1)), discrete(o)), o);
    if (*pnorm)
      return emit_value("value", weighted_p_norm(matrix_at(o, 0, 1), WeightedPNorm(discrete(o), o.p)), o);
    if (*ratio)
      return emit_value("ratio", triangle_ratio(matrix_at(o, 0, 2), matrix_at(o, 1, 2),
                                            WeightedPNorm(discrete(o), o.p)), o);
    if (*sugeno) return emit_value("value", sugeno_trace(matrix_at(o, 0, 1), SugenoTrace{discrete(o)}), o);
    if (*metric)
      return emit_value("value", sugeno_metric(matrix_at(o, 0, 2), matrix_at(o, 1, 2),
                                           SugenoTrace{discrete(o)}, o.allow_nonconcave), o);
    if (*extend) {
      const Complex z = sugeno_extend(matrix_at(o, 0, 1), SugenoTrace{discrete(o)});
      return emit({{"re", z.real()}, {"im", z.imag()}}, o);
    }
    if (*stepop) return run_stepop(stepop_op, o);
    if (*integrate) {
      if (o.functions.size() != 1) throw InputError("expected one --function argument");
      const SimpleFunction f = function_from_json(load_json_arg(o.functions[0]));
      const MonotoneMeasure mu = measure_from_json(load_json_arg(need(o.measure, "--measure")));
      if (integral == "choquet") return emit_value("value", choquet_integral(f, mu), o);
      if (integral == "sugeno") return emit_value("value", sugeno_integral(f, mu), o);
      throw InputError("unknown integral \"" + integral + "\"");
    }
    if (*comonotone) {
      if (o.functions.size() != 2) throw InputError("expected two --function arguments");
      return emit_value("comonotone", is_comonotone(function_from_json(load_json_arg(o.functions[0])),
                                                function_from_json(load_json_arg(o.functions[1]))), o);
    }
    if (*wcmd) {
      if (weight_op != "check") throw InputError("unknown weight operation \"" + weight_op + "\"");
      return run_weight_check(o);
    }
    if (*falsify) return run_falsify(o);
    if (*suite) return run_suite_cmd(o);
  } catch (const nltrace::Error& e) {
    std::cerr << "nltrace: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nltrace: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
