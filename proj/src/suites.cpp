#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "nltrace/choquet.hpp"
#include "nltrace/errors.hpp"
#include "nltrace/harness.hpp"
#include "nltrace/json_io.hpp"
#include "nltrace/sugeno.hpp"

namespace nltrace {

namespace {

constexpr double kSpectralTol = 1e-12;
constexpr double kSolverTol = 1e-9;

double rel_gap(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

std::vector<std::size_t> dims_or(const SuiteConfig& cfg, std::size_t lo, std::size_t hi) {
  if (!cfg.dims.empty()) return cfg.dims;
  std::vector<std::size_t> d(hi - lo + 1);
  std::iota(d.begin(), d.end(), lo);
  return d;
}

Report make_report(const std::string& id, const std::string& metric,
                   const SuiteConfig& cfg, std::uint64_t count, const TrialFn& fn,
                   bool slack = false) {
  const Reduction red = run_trials(count, cfg.workers, fn);
  Report r;
  r.suite = id;
  r.trials = count;
  r.passed = red.passed;
  r.metric = metric;
  r.worst = slack ? -red.worst : red.worst;
  r.seed = cfg.seed;
  r.witness = fn(red.first_failure, true).witness;
  r.witness["trial"] = red.first_failure;
  return r;
}

// Weights on [0, inf) whose values at multiples of 1/8 are exact dyadics.
std::vector<ContinuousWeight> exact_weights(Rng& rng) {
  return {ContinuousWeight::power(1.0),
          ContinuousWeight::power(2.0),
          ContinuousWeight::cap(static_cast<double>(1 + rng.below(16)) / 8.0),
          ContinuousWeight::pwl({0, 1, 2, 4}, {0, 1, 1.5, 2}, 0.25),
          ContinuousWeight::step({0, 2}, {1, 4}),
          ContinuousWeight::indicator()};
}

std::vector<ContinuousWeight> continuous_weights(Rng& rng) {
  return {ContinuousWeight::power(0.5),
          ContinuousWeight::power(1.0),
          ContinuousWeight::power(2.0),
          ContinuousWeight::power(1.5),
          ContinuousWeight::cap(static_cast<double>(1 + rng.below(16)) / 8.0),
          ContinuousWeight::pwl({0, 1, 2, 4}, {0, 1, 1.5, 2}, 0.25),
          ContinuousWeight::pwl({0, 0.5, 1}, {0, 0.125, 1}, 2.0)};
}

std::vector<ContinuousWeight> unit_weights() {
  const auto u = WeightDomain::unit;
  return {ContinuousWeight::power(0.5, u),
          ContinuousWeight::power(1.0, u),
          ContinuousWeight::power(2.0, u),
          ContinuousWeight::cap(0.5, u),
          ContinuousWeight::pwl({0, 0.25, 1}, {0, 0.75, 1}, 0.0, u),
          ContinuousWeight::pwl({0, 0.5, 1}, {0, 0.1, 2}, 0.0, u)};
}

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[rng.below(v.size())];
}

Sampling alternate(std::uint64_t i) {
  return i % 2 == 0 ? Sampling::rational : Sampling::floating;
}

// Random non-decreasing piecewise-linear map of [0, inf) with f(0) = 0.
std::function<double(double)> random_increasing(Rng& rng) {
  std::vector<double> x{0.0}, y{0.0};
  for (int k = 0; k < 3; ++k) {
    x.push_back(x.back() + 0.25 + rng.uniform());
    y.push_back(y.back() + (rng.below(4) == 0 ? 0.0 : rng.uniform()));
  }
  const double slope = rng.uniform();
  return [x, y, slope](double v) {
    if (v >= x.back()) return y.back() + slope * (v - x.back());
    const auto j = static_cast<std::size_t>(
        std::upper_bound(x.begin(), x.end(), v) - x.begin() - 1);
    return y[j] + (y[j + 1] - y[j]) * (v - x[j]) / (x[j + 1] - x[j]);
  };
}

ComplexMatrix random_matrix_kind(std::size_t n, std::uint64_t kind, Rng& rng) {
  switch (kind % 3) {
    case 0: return random_hermitian(n, rng);
    case 1: return random_psd(n, rng);
    default: return random_complex(n, rng);
  }
}

// ---------------------------------------------------------------------------

Report suite_prop_stieltjes(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const Sampling mode = alternate(i);
    const StepOperator a = random_step_operator(1 + rng.below(10), rng, mode);
    const auto family = mode == Sampling::rational ? exact_weights(rng) : continuous_weights(rng);
    const ContinuousWeight& w = pick(family, rng);
    const double s = choquet_spectral(a, w);
    const double t = choquet_stieltjes(a, w);
    const double gap = rel_gap(s, t);
    TrialOutcome out{mode == Sampling::rational ? s == t : gap <= kSpectralTol, gap, {}};
    if (want)
      out.witness = {{"stepop", to_json(a)}, {"weight", to_json(w)}, {"spectral", s},
                     {"stieltjes", t}, {"rational", mode == Sampling::rational}};
    return out;
  };
  return make_report("prop-stieltjes", "relative_gap", cfg, cfg.trials, fn);
}

Report suite_weyl(const SuiteConfig& cfg) {
  const auto dims = dims_or(cfg, 1, 10);
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const std::size_t n = dims[i % dims.size()];
    const ComplexMatrix a = random_psd(n, rng);
    const ComplexMatrix b = random_psd(n, rng);
    const Report w = weyl_check(a, b);
    TrialOutcome out{w.passed, -w.worst, {}};
    if (want) out.witness = {{"a", to_json(a)}, {"b", to_json(b)}, {"slack", w.worst},
                             {"at", w.witness}};
    return out;
  };
  return make_report("weyl", "slack", cfg, cfg.trials, fn, true);
}

Report suite_sugeno_maxtype(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const Sampling mode = alternate(i);
    const StepOperator a = random_step_operator(1 + rng.below(10), rng, mode);
    const auto family = continuous_weights(rng);
    const ContinuousWeight& w = pick(family, rng);
    const double psi = sugeno_trace_step(a, w);
    const double brute = max_type_value(a, w);
    // Projection case psi(c p) = c ^ alpha(m).
    const double c = mode == Sampling::rational ? static_cast<double>(rng.below(33)) / 8.0
                                                : 4.0 * rng.uniform();
    const double m = mode == Sampling::rational ? static_cast<double>(1 + rng.below(32)) / 8.0
                                                : 4.0 * rng.uniform() + 1e-3;
    const double proj = sugeno_trace_step(StepOperator::projection(m, c), w);
    const double expect = std::min(c, w.eval(m));
    TrialOutcome out;
    out.ok = psi == brute && psi <= a.max_value() && proj == expect;
    out.score = std::abs(psi - brute) + std::abs(proj - expect);
    if (want)
      out.witness = {{"stepop", to_json(a)}, {"weight", to_json(w)}, {"sugeno", psi},
                     {"max_type", brute}, {"c", c}, {"m", m}, {"projection", proj}};
    return out;
  };
  return make_report("sugeno-maxtype", "abs_gap", cfg, cfg.trials, fn);
}

Report suite_step_example(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t, bool want) {
    const auto w = ContinuousWeight::step({0, 2}, {1, 4});
    const double m = 4.0 / 3.0;
    const StepOperator p({{1.0, m}, {0.0, m}});
    const StepOperator q({{0.0, m}, {1.0, m}});
    const StepOperator pq = add(p, q);
    const double fp = choquet_spectral(p, w), fq = choquet_spectral(q, w);
    const double fpq = choquet_spectral(pq, w);
    const double sp = choquet_stieltjes(p, w), spq = choquet_stieltjes(pq, w);
    const double ratio = fpq / (fp + fq);
    TrialOutcome out;
    out.ok = fp == 1.0 && fq == 1.0 && fpq == 4.0 && sp == 1.0 && spq == 4.0 &&
             lambda_t(pq, 2.0) == 1.0 && lambda_t(p, 2.0) == 0.0 && ratio == 2.0;
    out.score = ratio;
    if (want)
      out.witness = {{"phi_p", fp}, {"phi_q", fq}, {"phi_p_plus_q", fpq}, {"ratio", ratio},
                     {"p_plus_q", to_json(pq)}};
    return out;
  };
  return make_report("step-example", "ratio", cfg, 1, fn);
}

Report suite_matrix_example(const SuiteConfig& cfg) {
  const auto w = DiscreteWeight::explicit_constant({0, 1, 1}, 3);
  FalsifyConfig fc;
  fc.weight = w;
  fc.p = 1.0;
  fc.dims = dims_or(cfg, 1, 8);
  fc.trials = cfg.trials;
  fc.seed = cfg.seed;
  fc.workers = cfg.workers;
  const Report f = falsify_triangle(fc);
  const double phi = choquet_trace(SpectrumDesc({5, 4, 3, 2}), w);
  const double L = doubling_sup(w, 100).value;
  Report r = f;
  r.suite = "matrix-example";
  r.passed = phi == 11.0 && f.worst >= 1.5 && f.worst <= L;
  r.witness["phi_diag_5432"] = phi;
  r.witness["doubling_sup"] = L;
  return r;
}

template <class Bound>
Report triangle_suite(const std::string& id, const SuiteConfig& cfg,
                      const std::vector<DiscreteWeight>& weights,
                      const std::vector<double>& ps, Bound bound) {
  const auto dims = dims_or(cfg, 1, 8);
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const std::size_t combos = weights.size() * ps.size();
    const DiscreteWeight& w = weights[(i % combos) / ps.size()];
    const double p = ps[i % ps.size()];
    const std::size_t n = dims[(i / combos) % dims.size()];
    const std::uint64_t kind = i / (combos * dims.size());
    ComplexMatrix a = random_matrix_kind(n, kind, rng);
    ComplexMatrix b = random_matrix_kind(n, kind, rng);
    b *= Complex(std::exp(rng.normal()));
    const double ratio = triangle_ratio(a, b, WeightedPNorm(w, p));
    const double limit = bound(w, p);
    TrialOutcome out{ratio <= limit + kSolverTol, ratio / limit, {}};
    if (want)
      out.witness = {{"weight", to_json(w)}, {"p", p}, {"a", to_json(a)},
                     {"b", to_json(b)}, {"ratio", ratio}, {"bound", limit}};
    return out;
  };
  return make_report(id, "ratio_over_bound", cfg, cfg.trials, fn);
}

Report suite_triangle_concave(const SuiteConfig& cfg) {
  return triangle_suite(
      "triangle-concave", cfg,
      {DiscreteWeight::power(1.0), DiscreteWeight::power(0.5),
       DiscreteWeight::explicit_constant({0, 1, 2}, 2)},
      {1.0, 2.0}, [](const DiscreteWeight&, double) { return 1.0; });
}

Report suite_quasi_norm_constants(const SuiteConfig& cfg) {
  return triangle_suite(
      "quasi-norm-constants", cfg, {DiscreteWeight::power(2.0)}, {0.5, 1.0, 2.0},
      [](const DiscreteWeight& w, double p) {
        const double L = doubling_sup(w).value;
        return std::max(1.0, std::exp2(1.0 / p - 1.0)) * std::pow(L, 1.0 / p);
      });
}

Report suite_partition_upper_sum(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const StepOperator a = random_unit_step_operator(1 + rng.below(8), rng);
    const auto family = unit_weights();
    const ContinuousWeight& w = pick(family, rng);
    const double phi = choquet_stieltjes(a, w);
    const double floor_tol = 1e-12 * std::max(1.0, phi);
    bool ok = true;
    double prev = 0.0;
    for (std::size_t M = 1; M <= 1024; M *= 2) {
      const double s = partition_approx(a, w, M);
      ok = ok && s >= phi - floor_tol;
      ok = ok && (M == 1 || s <= prev + floor_tol);
      prev = s;
    }
    const double excess = prev - phi;
    ok = ok && excess <= 1e-6;
    TrialOutcome out{ok, excess, {}};
    if (want)
      out.witness = {{"stepop", to_json(a)}, {"weight", to_json(w)}, {"phi", phi},
                     {"approx_1024", prev}};
    return out;
  };
  return make_report("partition-upper-sum", "excess", cfg, cfg.trials, fn);
}

Report suite_sugeno_min_witness(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const StepOperator a = random_step_operator(1 + rng.below(10), rng, alternate(i));
    const auto family = continuous_weights(rng);
    const ContinuousWeight& w = pick(family, rng);
    const double eps = std::pow(10.0, -6.0 * rng.uniform());
    const MinWitness m = min_witness(a, w, eps);
    TrialOutcome out{m.checks.passed, -m.checks.worst, {}};
    if (want) {
      out.witness = m.checks.witness;
      out.witness["stepop"] = to_json(a);
      out.witness["weight"] = to_json(w);
    }
    return out;
  };
  return make_report("sugeno-min-witness", "slack", cfg, cfg.trials, fn, true);
}

Report suite_sugeno_metric(const SuiteConfig& cfg) {
  const auto dims = dims_or(cfg, 1, 8);
  const SugenoTrace st{DiscreteWeight::power(0.5)};
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const std::size_t n = dims[i % dims.size()];
    const std::uint64_t kind = (i / dims.size()) % 2 == 0 ? 0 : 2;
    const ComplexMatrix a = random_matrix_kind(n, kind, rng);
    const ComplexMatrix b = random_matrix_kind(n, kind, rng);
    const ComplexMatrix c = random_matrix_kind(n, kind, rng);
    const double ab = sugeno_metric(a, b, st), ba = sugeno_metric(b, a, st);
    const double bc = sugeno_metric(b, c, st), ac = sugeno_metric(a, c, st);
    const double aa = sugeno_metric(a, a, st);
    const double excess = ac - ab - bc;
    TrialOutcome out;
    out.ok = aa == 0.0 && ab == ba && ab > 0.0 && excess <= kSolverTol;
    out.score = excess;
    if (want)
      out.witness = {{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)},
                     {"d_ab", ab}, {"d_ba", ba}, {"d_bc", bc}, {"d_ac", ac}, {"d_aa", aa}};
    return out;
  };
  return make_report("sugeno-metric", "excess", cfg, cfg.trials, fn);
}

Report suite_fuzzy_integrals(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const std::size_t n = 1 + rng.below(10);
    const MonotoneMeasure mu = random_monotone_measure(n, rng);
    // Comonotone pair: both non-decreasing functions of a shared level.
    std::vector<double> lf(6), lg(6);
    double sf = 0.0, sg = 0.0;
    for (std::size_t l = 0; l < 6; ++l) {
      lf[l] = sf += (rng.below(3) == 0 ? 0.0 : std::abs(rng.normal()));
      lg[l] = sg += (rng.below(3) == 0 ? 0.0 : std::abs(rng.normal()));
    }
    std::vector<double> fv(n), gv(n), sum(n), join(n), scaled(n), clipped(n);
    const double k = 3.0 * rng.uniform();
    for (std::size_t j = 0; j < n; ++j) {
      const auto level = rng.below(6);
      fv[j] = lf[level];
      gv[j] = lg[level];
      sum[j] = fv[j] + gv[j];
      join[j] = std::max(fv[j], gv[j]);
      scaled[j] = k * fv[j];
      clipped[j] = std::min(k, fv[j]);
    }
    const SimpleFunction f(fv), g(gv);
    const double cf = choquet_integral(f, mu), cg = choquet_integral(g, mu);
    const double sfv = sugeno_integral(f, mu), sgv = sugeno_integral(g, mu);
    const double c_sum = choquet_integral(SimpleFunction(sum), mu);
    const double s_join = sugeno_integral(SimpleFunction(join), mu);
    const double c_scaled = choquet_integral(SimpleFunction(scaled), mu);
    const double s_clipped = sugeno_integral(SimpleFunction(clipped), mu);
    const double add_gap = rel_gap(c_sum, cf + cg);
    const double hom_gap = rel_gap(c_scaled, k * cf);
    TrialOutcome out;
    out.ok = is_comonotone(f, g) && add_gap <= kSpectralTol && hom_gap <= kSpectralTol &&
             s_join == std::max(sfv, sgv) && s_clipped == std::min(k, sfv) &&
             c_sum >= cf && sugeno_integral(SimpleFunction(sum), mu) >= sfv;
    out.score = std::max(add_gap, hom_gap);
    if (want)
      out.witness = {{"f", fv}, {"g", gv}, {"k", k}, {"choquet_f", cf}, {"choquet_g", cg},
                     {"choquet_sum", c_sum}, {"sugeno_f", sfv}, {"sugeno_g", sgv},
                     {"sugeno_join", s_join}, {"n", n}};
    return out;
  };
  return make_report("fuzzy-integrals", "relative_gap", cfg, cfg.trials, fn);
}

Report suite_eigen_sanity(const SuiteConfig& cfg) {
  const auto dims = dims_or(cfg, 1, 8);
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    ComplexMatrix a;
    std::vector<double> expect;
    double tol = 1e-10;
    switch (i % 3) {
      case 0: {  // 2x2 closed form
        const double x = rng.normal(), z = rng.normal();
        const Complex y(rng.normal(), rng.normal());
        a = ComplexMatrix(2, {x, y, std::conj(y), z});
        const double mid = 0.5 * (x + z);
        const double rad = std::hypot(0.5 * (x - z), std::abs(y));
        expect = {mid + rad, mid - rad};
        break;
      }
      case 1: {  // Hermitian tridiagonal Toeplitz: d + 2|e| cos(k pi / 4)
        const double d = rng.normal();
        const Complex e(rng.normal(), rng.normal());
        a = ComplexMatrix(3, {d, e, 0.0, std::conj(e), d, e, 0.0, std::conj(e), d});
        const double r = std::sqrt(2.0) * std::abs(e);
        expect = {d + r, d, d - r};
        break;
      }
      default: {  // unitary invariance
        tol = kSolverTol;
        const std::size_t n = dims[(i / 3) % dims.size()];
        a = random_hermitian(n, rng);
        const ComplexMatrix u = random_unitary(n, rng);
        expect = hermitian_eigenvalues(a).values();
        ComplexMatrix rotated = u * a * u.adjoint();
        // Re-symmetrize the product, which is Hermitian only up to rounding.
        rotated = Complex(0.5) * (rotated + rotated.adjoint());
        a = rotated;
        break;
      }
    }
    const auto got = hermitian_eigenvalues(a).values();
    double err = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) err = std::max(err, std::abs(got[k] - expect[k]));
    TrialOutcome out{err <= tol, err, {}};
    if (want) out.witness = {{"a", to_json(a)}, {"expected", expect}, {"computed", got}};
    return out;
  };
  return make_report("eigen-sanity", "abs_error", cfg, cfg.trials, fn);
}

// ---------------------------------------------------------------------------
// Further invariant suites.

Report suite_step_quasi_norm(const SuiteConfig& cfg) {
  const std::vector<ContinuousWeight> weights{
      ContinuousWeight::power(2.0), ContinuousWeight::power(3.0),
      ContinuousWeight::pwl({0, 0.5, 1}, {0, 0.125, 1}, 2.0),
      ContinuousWeight::power(2.0, WeightDomain::unit)};
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const ContinuousWeight& w = weights[i % weights.size()];
    const bool unit = w.domain() == WeightDomain::unit;
    const std::size_t k = 1 + rng.below(8);
    const StepOperator a = unit ? random_unit_step_operator(k, rng) : random_step_operator(k, rng);
    const StepOperator b = unit ? random_unit_step_operator(k, rng) : random_step_operator(k, rng);
    const double beta = doubling_sup(w).value;
    const double ratio = choquet_stieltjes(add(a, b), w) /
                         (choquet_stieltjes(a, w) + choquet_stieltjes(b, w));
    TrialOutcome out{ratio <= beta + kSolverTol, ratio / beta, {}};
    if (want)
      out.witness = {{"a", to_json(a)}, {"b", to_json(b)}, {"weight", to_json(w)},
                     {"ratio", ratio}, {"beta", beta}};
    return out;
  };
  return make_report("step-quasi-norm", "ratio_over_bound", cfg, cfg.trials, fn);
}

Report suite_step_concave_triangle(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const std::vector<ContinuousWeight> weights{
        ContinuousWeight::power(1.0), ContinuousWeight::power(0.5),
        ContinuousWeight::cap(0.25 + 2.0 * rng.uniform()),
        ContinuousWeight::pwl({0, 1, 2, 4}, {0, 1, 1.5, 2}, 0.25)};
    const ContinuousWeight& w = weights[i % weights.size()];
    const StepOperator a = random_step_operator(1 + rng.below(8), rng);
    const StepOperator b = random_step_operator(1 + rng.below(8), rng);
    const double lhs = choquet_stieltjes(add(a, b), w);
    const double rhs = choquet_stieltjes(a, w) + choquet_stieltjes(b, w);
    const double ratio = rhs == 0.0 ? 0.0 : lhs / rhs;
    TrialOutcome out{lhs <= rhs + kSolverTol * std::max(1.0, rhs), ratio, {}};
    if (want)
      out.witness = {{"a", to_json(a)}, {"b", to_json(b)}, {"weight", to_json(w)},
                     {"ratio", ratio}};
    return out;
  };
  return make_report("step-concave-triangle", "ratio", cfg, cfg.trials, fn);
}

Report suite_lorentz_triangle(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    auto signed_ops = [&] {
      std::vector<Segment> s(1 + rng.below(8));
      for (auto& seg : s) seg = {rng.normal(), 0.05 + std::abs(rng.normal())};
      return s;
    };
    const std::vector<ContinuousWeight> weights{
        ContinuousWeight::power(0.5), ContinuousWeight::power(1.0),
        ContinuousWeight::cap(0.25 + 2.0 * rng.uniform())};
    const ContinuousWeight& w = weights[i % weights.size()];
    const auto a = signed_ops(), b = signed_ops();
    const double la = lorentz_norm(a, w), lb = lorentz_norm(b, w);
    const double lab = lorentz_norm(add_segments(a, b), w);
    double l1 = 0.0;
    for (const auto& s : a) l1 += std::abs(s.value) * s.mass;
    const double l1_gap = rel_gap(lorentz_norm(a, ContinuousWeight::power(1.0)), l1);
    const double ratio = lab / (la + lb);
    TrialOutcome out{ratio <= 1.0 + kSolverTol && l1_gap <= kSpectralTol, ratio, {}};
    if (want) {
      Json ja = Json::array(), jb = Json::array();
      for (const auto& s : a) ja.push_back({{"value", s.value}, {"mass", s.mass}});
      for (const auto& s : b) jb.push_back({{"value", s.value}, {"mass", s.mass}});
      out.witness = {{"a", ja}, {"b", jb}, {"weight", to_json(w)}, {"ratio", ratio}};
    }
    return out;
  };
  return make_report("lorentz-triangle", "ratio", cfg, cfg.trials, fn);
}

Report suite_spectral_additivity(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const StepOperator a = random_step_operator(1 + rng.below(10), rng, Sampling::rational);
    const auto family = continuous_weights(rng);
    const ContinuousWeight& w = pick(family, rng);
    const auto f = random_increasing(rng), g = random_increasing(rng);
    const StepOperator fa = a.map_values(f), ga = a.map_values(g);
    const StepOperator fga = a.map_values([&](double v) { return f(v) + g(v); });
    const double gap = rel_gap(choquet_stieltjes(fga, w),
                               choquet_stieltjes(fa, w) + choquet_stieltjes(ga, w));
    // a <= a + c pointwise.
    std::vector<Segment> bump = a.segments();
    for (auto& s : bump) s.value = static_cast<double>(rng.below(9)) / 8.0;
    const StepOperator b = add(a, StepOperator(bump));
    const bool monotone = choquet_stieltjes(a, w) <= choquet_stieltjes(b, w) &&
                          sugeno_trace_step(a, w) <= sugeno_trace_step(b, w);
    TrialOutcome out{gap <= kSpectralTol && monotone, gap, {}};
    if (want) out.witness = {{"stepop", to_json(a)}, {"weight", to_json(w)}, {"gap", gap}};
    return out;
  };
  return make_report("spectral-additivity", "relative_gap", cfg, cfg.trials, fn);
}

Report suite_sugeno_f_additivity(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const StepOperator a = random_step_operator(1 + rng.below(10), rng, Sampling::rational);
    const auto family = continuous_weights(rng);
    const ContinuousWeight& w = pick(family, rng);
    const auto f = random_increasing(rng), g = random_increasing(rng);
    const double join = sugeno_trace_step(
        a.map_values([&](double v) { return std::max(f(v), g(v)); }), w);
    const double sep = std::max(sugeno_trace_step(a.map_values(f), w),
                                sugeno_trace_step(a.map_values(g), w));
    const double k = static_cast<double>(rng.below(25)) / 8.0;
    const double clipped =
        sugeno_trace_step(a.map_values([k](double v) { return std::min(k, v); }), w);
    const double psi = sugeno_trace_step(a, w);
    TrialOutcome out;
    out.ok = join == sep && clipped == std::min(k, psi);
    out.score = std::abs(join - sep) + std::abs(clipped - std::min(k, psi));
    if (want)
      out.witness = {{"stepop", to_json(a)}, {"weight", to_json(w)}, {"join", join},
                     {"separate", sep}, {"k", k}, {"clipped", clipped}, {"psi", psi}};
    return out;
  };
  return make_report("sugeno-f-additivity", "abs_gap", cfg, cfg.trials, fn);
}

Report suite_spectral_invariants(const SuiteConfig& cfg) {
  const auto dims = dims_or(cfg, 1, 8);
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    const std::size_t n = dims[i % dims.size()];
    const ComplexMatrix a = random_hermitian(n, rng);
    const ComplexMatrix b = random_hermitian(n, rng);
    const ComplexMatrix g = random_complex(n, rng);
    const ComplexMatrix u = random_unitary(n, rng);
    const double scale = std::max(1.0, a.frobenius_norm());
    double err = 0.0;

    // Trace consistency.
    const auto la = hermitian_eigenvalues(a).values();
    Complex tr = 0.0;
    for (std::size_t k = 0; k < n; ++k) tr += a(k, k);
    err = std::max(err, std::abs(std::accumulate(la.begin(), la.end(), 0.0) - tr.real()) / scale);

    // Lipschitz: |l_i(a) - l_i(b)| <= ||a - b||.
    const auto lb = hermitian_eigenvalues(b).values();
    const double op = operator_norm(a - b);
    for (std::size_t k = 0; k < n; ++k)
      err = std::max(err, (std::abs(la[k] - lb[k]) - op) / scale);

    // Functional calculus x^3 commutes with sorting.
    const auto cube = functional_calculus(a, [](double x) { return x * x * x; });
    ComplexMatrix sym = Complex(0.5) * (cube + cube.adjoint());
    const auto lc = hermitian_eigenvalues(sym).values();
    const double cscale = std::max(1.0, sym.frobenius_norm());
    for (std::size_t k = 0; k < n; ++k)
      err = std::max(err, std::abs(lc[k] - la[k] * la[k] * la[k]) / cscale);

    // Singular values of g and g*, and weighted norms under unitary action and
    // complex scaling.
    const auto sg = singular_values(g).values();
    const auto sgs = singular_values(g.adjoint()).values();
    const double gscale = std::max(1.0, g.frobenius_norm());
    for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(sg[k] - sgs[k]) / gscale);
    const WeightedPNorm norm(DiscreteWeight::explicit_constant({0, 1, 1}, 3), 0.5 + rng.uniform());
    const double ng = weighted_p_norm(g, norm);
    const double nu = weighted_p_norm(u * g * u.adjoint(), norm);
    err = std::max(err, std::abs(ng - nu) / std::max(1.0, ng));
    const Complex k(rng.normal(), rng.normal());
    const double hom = rel_gap(weighted_p_norm(k * g, norm), std::abs(k) * ng);
    const SugenoTrace st{DiscreteWeight::power(0.5)};
    const ComplexMatrix p = random_psd(n, rng);
    const double psi = sugeno_trace(p, st);
    ComplexMatrix rp = u * p * u.adjoint();
    rp = Complex(0.5) * (rp + rp.adjoint());
    err = std::max(err, std::abs(sugeno_trace(rp, st) - psi) / std::max(1.0, psi));
    // 0 <= p <= p + q.
    const ComplexMatrix q = random_psd(n, rng);
    const bool monotone = psi <= sugeno_trace(p + q, st) + kSolverTol;

    TrialOutcome out{err <= kSolverTol && hom <= 1e-10 && monotone, std::max(err, hom), {}};
    if (want) out.witness = {{"a", to_json(a)}, {"b", to_json(b)}, {"g", to_json(g)},
                             {"error", err}, {"homogeneity_gap", hom}};
    return out;
  };
  return make_report("spectral-invariants", "error", cfg, cfg.trials, fn);
}

Report suite_weight_invariants(const SuiteConfig& cfg) {
  const TrialFn fn = [&](std::uint64_t i, bool want) {
    Rng rng(derive_seed(cfg.seed, i));
    std::vector<double> vals{0.0};
    const std::size_t len = 1 + rng.below(8);
    for (std::size_t k = 0; k < len; ++k)
      vals.push_back(vals.back() + (rng.below(4) == 0 ? 0.0 : rng.uniform()));
    if (vals.back() == 0.0) vals.back() = 1.0;
    const DiscreteWeight w = i % 2 == 0
        ? DiscreteWeight::explicit_constant(vals, vals.back() + rng.uniform())
        : DiscreteWeight::explicit_arithmetic(vals, rng.uniform());
    bool ok = true;
    double err = 0.0, acc = 0.0;
    for (std::int64_t n = 1; n <= 40; ++n) {
      acc += increment(w, n);
      err = std::max(err, rel_gap(acc, w.eval(n)));
      ok = ok && w.eval(n) >= w.eval(n - 1);
    }
    ok = ok && err <= kSpectralTol;
    if (is_concave(w) && w.eval(1) > 0.0) ok = ok && doubling_sup(w, 1000).value <= 2.0;
    const ContinuousWeight cw = ContinuousWeight::pwl(
        {0, 0.5, 1.5, 3}, {0, rng.uniform(), 1.0 + rng.uniform(), 3.0}, rng.uniform());
    const double x = 4.0 * rng.uniform(), y = x + 2.0 * rng.uniform(), z = y + rng.uniform();
    const double add_gap = std::abs(stieltjes_mass(cw, x, y) + stieltjes_mass(cw, y, z) -
                                    stieltjes_mass(cw, x, z));
    ok = ok && add_gap <= kSpectralTol * std::max(1.0, cw.eval(z));
    TrialOutcome out{ok, std::max(err, add_gap), {}};
    if (want) out.witness = {{"weight", to_json(w)}, {"continuous", to_json(cw)}};
    return out;
  };
  return make_report("weight-invariants", "error", cfg, cfg.trials, fn);
}

Report suite_choquet_necessity(const SuiteConfig& cfg) {
  const std::vector<DiscreteWeight> weights{
      DiscreteWeight::explicit_constant({0, 1, 1}, 3), DiscreteWeight::power(2.0),
      DiscreteWeight::power(1.5), DiscreteWeight::explicit_arithmetic({0, 1, 1.5}, 2.0)};
  Report r;
  r.suite = "choquet-necessity";
  r.metric = "ratio";
  r.seed = cfg.seed;
  r.worst = std::numeric_limits<double>::infinity();
  r.witness = Json::array();
  for (const auto& w : weights)
    for (double p : {1.0, 2.0}) {
      FalsifyConfig fc;
      fc.weight = w;
      fc.p = p;
      fc.dims = dims_or(cfg, 2, 6);
      fc.trials = cfg.trials;
      fc.seed = cfg.seed;
      fc.workers = cfg.workers;
      const Report f = falsify_triangle(fc);
      r.trials += f.trials;
      // Weakest counterexample over the weight set.
      r.worst = std::min(r.worst, f.worst);
      r.passed = r.passed && f.worst > 1.0 + 1e-6;
      r.witness.push_back({{"weight", to_json(w)}, {"p", p}, {"worst", f.worst},
                           {"family", f.witness["family"]}});
    }
  return r;
}

using SuiteFn = Report (*)(const SuiteConfig&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"prop-stieltjes", suite_prop_stieltjes},
      {"weyl", suite_weyl},
      {"sugeno-maxtype", suite_sugeno_maxtype},
      {"step-example", suite_step_example},
      {"matrix-example", suite_matrix_example},
      {"triangle-concave", suite_triangle_concave},
      {"quasi-norm-constants", suite_quasi_norm_constants},
      {"partition-upper-sum", suite_partition_upper_sum},
      {"sugeno-min-witness", suite_sugeno_min_witness},
      {"sugeno-metric", suite_sugeno_metric},
      {"fuzzy-integrals", suite_fuzzy_integrals},
      {"eigen-sanity", suite_eigen_sanity},
      {"step-quasi-norm", suite_step_quasi_norm},
      {"step-concave-triangle", suite_step_concave_triangle},
      {"lorentz-triangle", suite_lorentz_triangle},
      {"spectral-additivity", suite_spectral_additivity},
      {"sugeno-f-additivity", suite_sugeno_f_additivity},
      {"spectral-invariants", suite_spectral_invariants},
      {"weight-invariants", suite_weight_invariants},
      {"choquet-necessity", suite_choquet_necessity},
  };
  return r;
}

}  // namespace

Report run_suite(const std::string& id, const SuiteConfig& cfg) {
  const auto& r = registry();
  const auto it = r.find(id);
  if (it == r.end()) throw InputError("unknown suite \"" + id + "\"");
  const auto t0 = std::chrono::steady_clock::now();
  Report rep = it->second(cfg);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

}  // namespace nltrace
