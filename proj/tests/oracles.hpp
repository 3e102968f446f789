#pragma once

// Reference evaluations used only by the tests. Each one follows a different
// route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nltrace/fuzzy.hpp"
#include "nltrace/stepops.hpp"
#include "nltrace/weights.hpp"

namespace oracle {

/// Mass of {x : a(x) > s}, straight from the segments.
inline double mass_above(const nltrace::StepOperator& a, double s) {
  double m = 0.0;
  for (const auto& seg : a.segments())
    if (seg.value > s) m += seg.mass;
  return m;
}

/// Layer cake: integral over s of alpha(mass above s), exact on the value
/// breakpoints of a.
inline double layer_cake(const nltrace::StepOperator& a, const nltrace::ContinuousWeight& w) {
  std::vector<double> levels{0.0};
  for (const auto& seg : a.segments()) levels.push_back(seg.value);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k)
    total += (levels[k + 1] - levels[k]) * w.eval(mass_above(a, levels[k]));
  return total;
}

/// Discrete layer cake: integral over s of alpha(#{i : l_i > s}).
inline double layer_cake(const std::vector<double>& spectrum, const nltrace::DiscreteWeight& w) {
  std::vector<double> levels{0.0};
  levels.insert(levels.end(), spectrum.begin(), spectrum.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    std::int64_t count = 0;
    for (double x : spectrum) count += x > levels[k] ? 1 : 0;
    total += (levels[k + 1] - levels[k]) * w.eval(count);
  }
  return total;
}

/// sup_s min(s, alpha(mass above s)) on a uniform grid of step h.
inline double sugeno_grid(const nltrace::StepOperator& a, const nltrace::ContinuousWeight& w,
                          double h) {
  double best = 0.0;
  for (double s = 0.0; s <= a.max_value() + h; s += h)
    best = std::max(best, std::min(s, w.eval(mass_above(a, s))));
  return best;
}

/// Choquet integral as a layer cake over the distinct values of f.
inline double choquet_layer_cake(const nltrace::SimpleFunction& f,
                                 const nltrace::MonotoneMeasure& mu) {
  std::vector<double> b{0.0};
  b.insert(b.end(), f.values().begin(), f.values().end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  double total = 0.0;
  for (std::size_t j = 1; j < b.size(); ++j) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] >= b[j]) mask |= 1U << i;
    total += (b[j] - b[j - 1]) * mu(mask);
  }
  return total;
}

/// Sugeno integral as sup over s of min(s, mu({f >= s})). The supremum is
/// attained at a value of f or a value of mu; both candidate sets are tried.
inline double sugeno_sup(const nltrace::SimpleFunction& f, const nltrace::MonotoneMeasure& mu) {
  std::vector<double> cand(f.values());
  for (std::uint32_t m = 0; m <= mu.full_mask(); ++m)
    if (mu.defined(m)) cand.push_back(mu(m));
  double best = 0.0;
  for (double s : cand) {
    if (s <= 0.0) continue;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] >= s) mask |= 1U << i;
    best = std::max(best, std::min(s, mu(mask)));
  }
  return best;
}

}  // namespace oracle
