#include "nltrace/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nltrace/errors.hpp"

namespace nltrace {

namespace {

constexpr double kRouteTol = 1e-12;

double root(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return std::sqrt(x);
  return std::pow(x, 1.0 / p);
}

double raise(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  if (p == 0.5) return std::sqrt(x);
  return std::pow(x, p);
}

}  // namespace

WeightedPNorm::WeightedPNorm(DiscreteWeight w, double p_)
    : weight(std::move(w)), p(p_) {
  if (!std::isfinite(p) || !(p > 0.0))
    throw InputError("weighted p-norm needs 0 < p < inf");
}

double choquet_trace(const SpectrumDesc& spec, const DiscreteWeight& w) {
  const auto& l = spec.values();
  if (!spec.nonnegative())
    throw DomainError("choquet_trace needs a non-negative spectrum");
  const auto n = static_cast<std::int64_t>(l.size());
  double layer = 0.0;
  double incr = 0.0;
  for (std::int64_t i = 1; i <= n; ++i) {
    const double li = spec.at(i);
    const double gap = li - spec.at(i + 1);
    if (gap != 0.0) layer += gap * w.eval(i);
    if (li != 0.0) incr += li * increment(w, i);
  }
  const double scale = std::max(std::abs(layer), std::abs(incr));
  if (std::abs(layer - incr) > kRouteTol * scale)
    throw ConsistencyError("choquet_trace: layer and increment forms disagree");
  return layer;
}

double weighted_p_norm(const SpectrumDesc& s, const WeightedPNorm& norm) {
  if (!s.nonnegative())
    throw DomainError("weighted_p_norm needs a non-negative sequence");
  std::vector<double> sp(s.values());
  for (auto& x : sp) x = raise(x, norm.p);
  return root(choquet_trace(SpectrumDesc(std::move(sp)), norm.weight), norm.p);
}

double weighted_p_norm(const ComplexMatrix& a, const WeightedPNorm& norm) {
  return weighted_p_norm(singular_values(a), norm);
}

double triangle_ratio(const ComplexMatrix& a, const ComplexMatrix& b,
                      const WeightedPNorm& norm) {
  if (a.size() != b.size())
    throw ShapeError("triangle_ratio: matrix dimensions differ");
  const double na = weighted_p_norm(a, norm);
  const double nb = weighted_p_norm(b, norm);
  if (na + nb == 0.0)
    throw UndefinedRatioError("triangle_ratio: both norms are zero");
  return weighted_p_norm(a + b, norm) / (na + nb);
}

}  // namespace nltrace
