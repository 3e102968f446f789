#include "nltrace/fuzzy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "nltrace/errors.hpp"
#include "nltrace/rng.hpp"

namespace nltrace {

namespace {

constexpr int kSampledChains = 4096;

std::string mask_name(std::uint32_t m, std::size_t n) {
  std::string s = "0b";
  for (std::size_t i = n; i-- > 0;) s += (m >> i & 1U) ? '1' : '0';
  return s;
}

void monotone_violation(std::uint32_t a, std::uint32_t b, std::size_t n) {
  throw InputError("measure is not monotone: mu(" + mask_name(a, n) +
                   ") > mu(" + mask_name(b, n) + ")");
}

std::vector<std::size_t> descending_order(const SimpleFunction& f) {
  std::vector<std::size_t> idx(f.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return f[i] > f[j]; });
  return idx;
}

}  // namespace

MonotoneMeasure MonotoneMeasure::full(std::size_t n, std::vector<double> values) {
  std::vector<std::optional<double>> v(values.begin(), values.end());
  return partial(n, std::move(v));
}

MonotoneMeasure MonotoneMeasure::partial(std::size_t n,
                                         std::vector<std::optional<double>> v,
                                         std::uint64_t chain_seed) {
  if (n > kMaxGroundSize) throw InputError("measure ground set exceeds 20 points");
  const std::size_t count = std::size_t{1} << n;
  if (v.size() != count) throw InputError("measure table size must be 2^n");
  if (!v[0]) v[0] = 0.0;
  if (*v[0] != 0.0) throw InputError("measure of the empty set must be 0");
  for (const auto& x : v)
    if (x && (std::isnan(*x) || *x < 0.0))
      throw InputError("measure values must be >= 0");

  if (n <= kExhaustiveMonotoneLimit) {
    // Every defined proper subset of every defined set.
    for (std::uint32_t b = 1; b < count; ++b) {
      if (!v[b]) continue;
      for (std::uint32_t a = (b - 1) & b;; a = (a - 1) & b) {
        if (v[a] && *v[a] > *v[b]) monotone_violation(a, b, n);
        if (a == 0) break;
      }
    }
  } else {
    // Random maximal chains; consecutive defined links are compared.
    Rng rng(chain_seed);
    std::vector<std::uint32_t> perm(n);
    for (int c = 0; c < kSampledChains; ++c) {
      std::iota(perm.begin(), perm.end(), 0U);
      for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
      std::uint32_t mask = 0, last = 0;
      for (std::uint32_t p : perm) {
        mask |= 1U << p;
        if (!v[mask]) continue;
        if (*v[last] > *v[mask]) monotone_violation(last, mask, n);
        last = mask;
      }
    }
  }
  return MonotoneMeasure(n, std::move(v));
}

MonotoneMeasure MonotoneMeasure::additive(const std::vector<double>& w) {
  const std::size_t n = w.size();
  if (n > kMaxGroundSize) throw InputError("measure ground set exceeds 20 points");
  for (double x : w)
    if (!std::isfinite(x) || x < 0.0)
      throw InputError("point weights must be finite and >= 0");
  std::vector<std::optional<double>> v(std::size_t{1} << n);
  v[0] = 0.0;
  for (std::uint32_t m = 1; m < v.size(); ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    v[m] = *v[m & (m - 1)] + w[low];
  }
  return MonotoneMeasure(n, std::move(v));
}

double MonotoneMeasure::operator()(std::uint32_t mask) const {
  if (mask >= v_.size()) throw InputError("subset outside the ground set");
  if (!v_[mask])
    throw InputError("measure is missing subset " + mask_name(mask, n_));
  return *v_[mask];
}

SimpleFunction::SimpleFunction(std::vector<double> f) : f_(std::move(f)) {
  for (double x : f_)
    if (!std::isfinite(x) || x < 0.0)
      throw InputError("simple function values must be finite and >= 0");
}

double choquet_integral(const SimpleFunction& f, const MonotoneMeasure& mu) {
  if (f.size() != mu.size())
    throw ShapeError("function and measure have different ground sets");
  const auto s = descending_order(f);
  double c = 0.0;
  std::uint32_t a = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    a |= 1U << s[i];
    const double next = i + 1 < s.size() ? f[s[i + 1]] : 0.0;
    const double coef = f[s[i]] - next;
    if (coef != 0.0) c += coef * mu(a);
  }
  return c;
}

double sugeno_integral(const SimpleFunction& f, const MonotoneMeasure& mu) {
  if (f.size() != mu.size())
    throw ShapeError("function and measure have different ground sets");
  const auto s = descending_order(f);
  double best = 0.0;
  std::uint32_t a = 0;
  for (std::size_t i : s) {
    a |= 1U << i;
    if (f[i] > best) best = std::max(best, std::min(f[i], mu(a)));
  }
  return best;
}

bool is_comonotone(const SimpleFunction& f, const SimpleFunction& g) {
  if (f.size() != g.size())
    throw ShapeError("is_comonotone: functions have different lengths");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      // Signs rather than the product, which can underflow to 0.
      if ((f[i] < f[j] && g[i] > g[j]) || (f[i] > f[j] && g[i] < g[j]))
        return false;
  return true;
}

}  // namespace nltrace
