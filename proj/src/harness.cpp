#include "nltrace/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "nltrace/choquet.hpp"
#include "nltrace/errors.hpp"
#include "nltrace/json_io.hpp"

namespace nltrace {

namespace {

Complex complex_normal(Rng& rng) {
  const double re = rng.normal();
  return {re, rng.normal()};
}

ComplexMatrix gram(const ComplexMatrix& g) {
  const std::size_t n = g.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += std::conj(g(k, i)) * g(k, j);
      m(i, j) = s;
      m(j, i) = std::conj(s);
    }
  for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i).real();
  return m;
}

double positive_normal(Rng& rng) {
  for (;;) {
    const double x = std::abs(rng.normal());
    if (x > 0.0) return x;
  }
}

}  // namespace

ComplexMatrix random_complex(std::size_t n, Rng& rng) {
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = complex_normal(rng);
  return g;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_complex(n, rng);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = g(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

ComplexMatrix random_psd(std::size_t n, Rng& rng) {
  return gram(random_complex(n, rng));
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix q = random_complex(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

StepOperator random_step_operator(std::size_t k, Rng& rng, Sampling mode) {
  std::vector<Segment> segs(k);
  for (auto& s : segs) {
    if (mode == Sampling::rational) {
      s.value = static_cast<double>(rng.below(17)) / 8.0;
      s.mass = static_cast<double>(1 + rng.below(16)) / 8.0;
    } else {
      s.value = std::abs(rng.normal());
      s.mass = positive_normal(rng);
    }
  }
  return StepOperator(std::move(segs));
}

StepOperator random_unit_step_operator(std::size_t k, Rng& rng, Sampling mode) {
  if (k == 0 || k > 32) throw DomainError("unit step operator needs 1 <= k <= 32");
  const std::uint64_t per = 32 / k;
  std::vector<Segment> segs(k);
  for (auto& s : segs) {
    s.value = mode == Sampling::rational
                  ? static_cast<double>(rng.below(17)) / 8.0
                  : std::abs(rng.normal());
    s.mass = static_cast<double>(1 + rng.below(per)) / 32.0;
  }
  return StepOperator(std::move(segs), 1.0);
}

MonotoneMeasure random_monotone_measure(std::size_t n, Rng& rng) {
  if (n > kMaxGroundSize) throw DomainError("measure ground set exceeds 20 points");
  std::vector<double> v(std::size_t{1} << n);
  for (std::uint32_t m = 1; m < v.size(); ++m) {
    double x = rng.uniform();
    for (std::uint32_t rest = m; rest; rest &= rest - 1)
      x = std::max(x, v[m & ~(rest & (0U - rest))]);
    v[m] = x;
  }
  return MonotoneMeasure::full(n, std::move(v));
}

// ---------------------------------------------------------------------------

Reduction run_trials(std::uint64_t count, unsigned workers, const TrialFn& fn) {
  workers = std::max(1U, workers);
  std::vector<char> ok(count, 1);
  std::vector<double> score(count, 0.0);
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&](unsigned w) {
    try {
      for (std::uint64_t i = w; i < count; i += workers) {
        const TrialOutcome r = fn(i, false);
        ok[i] = r.ok ? 1 : 0;
        score[i] = r.score;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  Reduction r;
  bool seen_failure = false;
  for (std::uint64_t i = 0; i < count; ++i) {
    // NaN scores count as worst and as failures.
    const bool bad = !ok[i] || std::isnan(score[i]);
    if (bad && !seen_failure) {
      seen_failure = true;
      r.first_failure = i;
    }
    if (i == 0 || score[i] > r.worst || (std::isnan(score[i]) && !std::isnan(r.worst))) {
      r.worst = score[i];
      r.worst_index = i;
    }
  }
  r.passed = !seen_failure;
  if (!seen_failure) r.first_failure = r.worst_index;
  return r;
}

// ---------------------------------------------------------------------------
// Falsifier

namespace {

struct Candidate {
  std::string family;
  ComplexMatrix a;
  ComplexMatrix b;
};

ComplexMatrix interval_projection(std::size_t n, std::size_t from, std::size_t to) {
  ComplexMatrix m(n);
  for (std::size_t i = from; i < to; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Candidate> structured_library(const std::vector<std::size_t>& dims) {
  std::vector<Candidate> lib;
  for (std::size_t n : dims) {
    if (n == 0) continue;
    // Interval projection pairs, overlapping and complementary.
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 1; k + s <= n; ++s)
          lib.push_back({"interval-projections", interval_projection(n, 0, r),
                         interval_projection(n, k, k + s)});
    // Reversal ladders.
    for (std::size_t r = 1; r < n; ++r)
      for (double t : {0.25, 0.5, 0.75}) {
        std::vector<double> d(n, t);
        std::fill(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(r), 1.0);
        std::vector<double> rev(d.rbegin(), d.rend());
        lib.push_back({"reversal-ladder", ComplexMatrix::diagonal(d),
                       ComplexMatrix::diagonal(rev)});
      }
    // Projections against the rank-one all-ones projection.
    ComplexMatrix ones(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ones(i, j) = 1.0 / static_cast<double>(n);
    for (std::size_t r = 1; r <= n; ++r)
      lib.push_back({"rank-one-perturbation", interval_projection(n, 0, r), ones});
  }
  return lib;
}

Json falsify_witness(const std::string& family, std::uint64_t index,
                     const ComplexMatrix& a, const ComplexMatrix& b,
                     const DiscreteWeight& w, double p, double ratio) {
  return {{"family", family}, {"index", index}, {"weight", to_json(w)},
          {"p", p},           {"a", to_json(a)}, {"b", to_json(b)},
          {"ratio", ratio}};
}

}  // namespace

Report falsify_triangle(const FalsifyConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.dims.empty()) throw InputError("falsify needs at least one dimension");
  for (std::size_t n : cfg.dims)
    if (n == 0) throw InputError("falsify dimensions must be >= 1");
  const WeightedPNorm norm(cfg.weight, cfg.p);
  const auto lib = structured_library(cfg.dims);
  const std::uint64_t s = lib.size();
  const double limit = cfg.bound + cfg.tol;

  auto pair_for = [&](std::uint64_t i) -> Candidate {
    if (i < s) return lib[i];
    const std::uint64_t j = i - s;
    Rng rng(derive_seed(cfg.seed, j));
    const std::size_t n = cfg.dims[(j / 3) % cfg.dims.size()];
    Candidate c;
    switch (j % 3) {
      case 0:
        c = {"random-hermitian", random_hermitian(n, rng), random_hermitian(n, rng)};
        break;
      case 1:
        c = {"random-psd", random_psd(n, rng), random_psd(n, rng)};
        break;
      default:
        c = {"random-complex", random_complex(n, rng), random_complex(n, rng)};
        break;
    }
    // Unbalanced scales make the triangle inequality tighter to probe.
    c.b *= Complex(std::exp(rng.normal()));
    return c;
  };

  const TrialFn fn = [&](std::uint64_t i, bool want) {
    const Candidate c = pair_for(i);
    const double ratio = triangle_ratio(c.a, c.b, norm);
    TrialOutcome out{ratio <= limit, ratio, {}};
    if (want) out.witness = falsify_witness(c.family, i, c.a, c.b, cfg.weight, cfg.p, ratio);
    return out;
  };
  const Reduction red = run_trials(s + cfg.trials, cfg.workers, fn);

  Report r;
  r.suite = "falsify";
  r.trials = s + cfg.trials;
  r.passed = red.passed;
  r.worst = red.worst;
  r.metric = "ratio";
  r.seed = cfg.seed;
  r.witness = fn(red.worst_index, true).witness;
  r.witness["bound"] = cfg.bound;
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

double replay_triangle(const Json& w) {
  try {
    const WeightedPNorm norm(discrete_weight_from_json(w.at("weight")),
                             w.at("p").get<double>());
    return triangle_ratio(matrix_from_json(w.at("a")), matrix_from_json(w.at("b")), norm);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed falsify witness: ") + e.what());
  }
}

}  // namespace nltrace
