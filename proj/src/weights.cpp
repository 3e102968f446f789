#include "nltrace/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "nltrace/errors.hpp"

namespace nltrace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Slack for cumulative masses that land a rounding error above 1 on the unit
// domain.
constexpr double kUnitSlack = 1e-12;

// x^theta with the common exponents evaluated exactly.
double power_of(double x, double theta) {
  if (theta == 1.0) return x;
  if (theta == 2.0) return x * x;
  if (theta == 0.5) return std::sqrt(x);
  return std::pow(x, theta);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

void check_monotone_values(const std::vector<double>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(std::isfinite(v[i]) && v[i] >= 0.0,
            std::string(what) + ": values must be finite and non-negative");
    if (i > 0)
      require(v[i] >= v[i - 1],
              std::string(what) + ": values must be non-decreasing");
  }
}

void check_breakpoints(const std::vector<double>& x, const char* what) {
  require(!x.empty(), std::string(what) + ": needs at least one breakpoint");
  require(x.front() == 0.0, std::string(what) + ": first breakpoint must be 0");
  for (std::size_t i = 1; i < x.size(); ++i)
    require(std::isfinite(x[i]) && x[i] > x[i - 1],
            std::string(what) + ": breakpoints must be strictly increasing");
}

}  // namespace

// ---------------------------------------------------------------------------
// DiscreteWeight

DiscreteWeight::DiscreteWeight(Kind kind, double theta,
                               std::vector<double> values, double tail)
    : kind_(kind), theta_(theta), values_(std::move(values)), tail_(tail) {}

DiscreteWeight DiscreteWeight::power(double theta) {
  require(std::isfinite(theta) && theta > 0.0, "power weight: theta must be > 0");
  return DiscreteWeight(Kind::power, theta, {}, 0.0);
}

DiscreteWeight DiscreteWeight::explicit_constant(std::vector<double> values,
                                                 double tail) {
  require(!values.empty() && values.front() == 0.0,
          "explicit weight: values must start with alpha(0) = 0");
  check_monotone_values(values, "explicit weight");
  require(std::isfinite(tail) && tail >= values.back(),
          "explicit weight: tail value must be >= last listed value");
  return DiscreteWeight(Kind::explicit_constant, 0.0, std::move(values), tail);
}

DiscreteWeight DiscreteWeight::explicit_arithmetic(std::vector<double> values,
                                                   double increment) {
  require(!values.empty() && values.front() == 0.0,
          "explicit weight: values must start with alpha(0) = 0");
  check_monotone_values(values, "explicit weight");
  require(std::isfinite(increment) && increment >= 0.0,
          "explicit weight: tail increment must be >= 0");
  return DiscreteWeight(Kind::explicit_arithmetic, 0.0, std::move(values),
                        increment);
}

double DiscreteWeight::eval(std::int64_t n) const {
  if (n < 0) throw DomainError("discrete weight evaluated at negative index");
  switch (kind_) {
    case Kind::power:
      return power_of(static_cast<double>(n), theta_);
    case Kind::explicit_constant:
      if (static_cast<std::size_t>(n) < values_.size()) return values_[n];
      return tail_;
    case Kind::explicit_arithmetic: {
      if (static_cast<std::size_t>(n) < values_.size()) return values_[n];
      const auto steps =
          static_cast<double>(n - static_cast<std::int64_t>(values_.size()) + 1);
      return values_.back() + steps * tail_;
    }
  }
  return 0.0;
}

double DiscreteWeight::limit() const {
  switch (kind_) {
    case Kind::power:
      return kInf;
    case Kind::explicit_constant:
      return tail_;
    case Kind::explicit_arithmetic:
      return tail_ > 0.0 ? kInf : values_.back();
  }
  return 0.0;
}

double increment(const DiscreteWeight& w, std::int64_t n) {
  if (n < 1) throw DomainError("increment index must be >= 1");
  return w.eval(n) - w.eval(n - 1);
}

bool is_concave(const DiscreteWeight& w, std::int64_t horizon) {
  if (w.kind() == DiscreteWeight::Kind::power) return w.theta() <= 1.0;
  // Increments are constant from index values().size() + 1 on.
  const auto last = std::min<std::int64_t>(
      horizon, static_cast<std::int64_t>(w.values().size()) + 1);
  double prev = increment(w, 1);
  for (std::int64_t n = 2; n <= last; ++n) {
    const double c = increment(w, n);
    if (c > prev) return false;
    prev = c;
  }
  return true;
}

DoublingSup doubling_sup(const DiscreteWeight& w, std::int64_t horizon) {
  if (horizon < 1) throw DomainError("doubling horizon must be >= 1");
  if (w.kind() == DiscreteWeight::Kind::power)
    return {std::exp2(w.theta()), true};

  const auto listed = static_cast<std::int64_t>(w.values().size());
  bool any = false;
  double best = 0.0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const double base = w.eval(n);
    if (base > 0.0) {
      any = true;
      best = std::max(best, w.eval(2 * n) / base);
    }
    // Both n and 2n sit on the constant tail from here on: ratio is 1.
    if (w.kind() == DiscreteWeight::Kind::explicit_constant && n >= listed)
      break;
  }
  if (!any)
    throw UndefinedRatioError("weight vanishes on the whole doubling range");
  return {best, true};
}

// ---------------------------------------------------------------------------
// ContinuousWeight

ContinuousWeight::ContinuousWeight(Kind kind, WeightDomain domain, double param,
                                   std::vector<double> x, std::vector<double> y)
    : kind_(kind),
      domain_(domain),
      param_(param),
      x_(std::move(x)),
      y_(std::move(y)) {}

ContinuousWeight ContinuousWeight::power(double theta, WeightDomain domain) {
  require(std::isfinite(theta) && theta > 0.0, "power weight: theta must be > 0");
  return ContinuousWeight(Kind::power, domain, theta, {}, {});
}

ContinuousWeight ContinuousWeight::cap(double t, WeightDomain domain) {
  require(std::isfinite(t) && t > 0.0, "cap weight: t must be > 0");
  return ContinuousWeight(Kind::cap, domain, t, {}, {});
}

ContinuousWeight ContinuousWeight::indicator(WeightDomain domain) {
  return ContinuousWeight(Kind::indicator, domain, 0.0, {}, {});
}

ContinuousWeight ContinuousWeight::pwl(std::vector<double> x,
                                       std::vector<double> y,
                                       double final_slope,
                                       WeightDomain domain) {
  require(x.size() == y.size(), "pwl weight: x and y must have equal length");
  check_breakpoints(x, "pwl weight");
  check_monotone_values(y, "pwl weight");
  require(y.front() == 0.0, "pwl weight: alpha(0) must be 0");
  require(std::isfinite(final_slope) && final_slope >= 0.0,
          "pwl weight: final slope must be >= 0");
  return ContinuousWeight(Kind::pwl, domain, final_slope, std::move(x),
                          std::move(y));
}

ContinuousWeight ContinuousWeight::step(std::vector<double> x,
                                        std::vector<double> y,
                                        WeightDomain domain) {
  require(x.size() == y.size(), "step weight: x and y must have equal length");
  check_breakpoints(x, "step weight");
  check_monotone_values(y, "step weight");
  return ContinuousWeight(Kind::step, domain, 0.0, std::move(x), std::move(y));
}

double ContinuousWeight::eval_unchecked(double x) const {
  switch (kind_) {
    case Kind::power:
      return power_of(x, param_);
    case Kind::cap:
      return std::min(x, param_);
    case Kind::indicator:
      return x > 0.0 ? 1.0 : 0.0;
    case Kind::pwl: {
      if (x >= x_.back()) return y_.back() + param_ * (x - x_.back());
      const auto it = std::upper_bound(x_.begin(), x_.end(), x);
      const auto j = static_cast<std::size_t>(it - x_.begin()) - 1;
      const double frac = (x - x_[j]) / (x_[j + 1] - x_[j]);
      return y_[j] + (y_[j + 1] - y_[j]) * frac;
    }
    case Kind::step: {
      if (x <= 0.0) return 0.0;
      // Largest j with x_[j] < x.
      const auto it = std::lower_bound(x_.begin(), x_.end(), x);
      const auto j = static_cast<std::size_t>(it - x_.begin()) - 1;
      return y_[j];
    }
  }
  return 0.0;
}

double ContinuousWeight::eval(double x) const {
  if (std::isnan(x) || x < 0.0)
    throw DomainError("weight evaluated at a negative or NaN argument");
  if (std::isinf(x)) return limit();
  if (domain_ == WeightDomain::unit) {
    if (x > 1.0 + kUnitSlack)
      throw DomainError("unit-domain weight evaluated beyond 1");
    x = std::min(x, 1.0);
  }
  return eval_unchecked(x);
}

double ContinuousWeight::eval_extended(double x) const {
  if (domain_ == WeightDomain::unit && x > 1.0) return eval_unchecked(1.0);
  return eval(x);
}

double ContinuousWeight::limit() const {
  if (domain_ == WeightDomain::unit) return eval_unchecked(1.0);
  switch (kind_) {
    case Kind::power:
      return kInf;
    case Kind::cap:
      return param_;
    case Kind::indicator:
      return 1.0;
    case Kind::pwl:
      return param_ > 0.0 ? kInf : y_.back();
    case Kind::step:
      return y_.back();
  }
  return 0.0;
}

bool ContinuousWeight::is_continuous() const noexcept {
  return kind_ != Kind::indicator && kind_ != Kind::step;
}

bool is_concave(const ContinuousWeight& w) {
  using K = ContinuousWeight::Kind;
  switch (w.kind()) {
    case K::power:
      return w.theta() <= 1.0;
    case K::cap:
    case K::indicator:
      return true;
    case K::step:
      // Only a single jump at the origin keeps the slopes non-increasing.
      return w.ys().front() == w.ys().back();
    case K::pwl: {
      const auto& x = w.xs();
      const auto& y = w.ys();
      std::vector<double> slopes;
      for (std::size_t j = 0; j + 1 < x.size(); ++j)
        slopes.push_back((y[j + 1] - y[j]) / (x[j + 1] - x[j]));
      if (w.domain() == WeightDomain::half_line || x.back() < 1.0)
        slopes.push_back(w.final_slope());
      for (std::size_t j = 1; j < slopes.size(); ++j)
        if (slopes[j] > slopes[j - 1]) return false;
      return true;
    }
  }
  return false;
}

namespace {

// Right end of the zero set {s : alpha(s) = 0}; +inf if alpha vanishes
// identically.
double zero_set_end(const ContinuousWeight& w) {
  const auto& x = w.xs();
  const auto& y = w.ys();
  if (w.kind() == ContinuousWeight::Kind::pwl) {
    std::size_t j = 0;
    while (j + 1 < y.size() && y[j + 1] == 0.0) ++j;
    if (j + 1 == y.size()) return w.final_slope() > 0.0 ? x.back() : kInf;
    return x[j];
  }
  // step: alpha = y[j] on (x[j], x[j+1]].
  std::size_t j = 0;
  while (j < y.size() && y[j] == 0.0) ++j;
  if (j == y.size()) return kInf;
  return j == 0 ? 0.0 : x[j];
}

}  // namespace

DoublingSup doubling_sup(const ContinuousWeight& w, double horizon) {
  using K = ContinuousWeight::Kind;
  if (!(horizon > 0.0)) throw DomainError("doubling horizon must be > 0");
  if (w.domain() == WeightDomain::unit) horizon = std::min(horizon, 1.0);

  switch (w.kind()) {
    case K::power:
      return {std::exp2(w.theta()), true};
    case K::cap:
      return {2.0, true};  // attained for every s <= t/2
    case K::indicator:
      return {1.0, true};
    case K::pwl:
    case K::step:
      break;
  }

  const double z = zero_set_end(w);
  if (z >= horizon)
    throw UndefinedRatioError("weight vanishes on the whole doubling range");
  // A continuous weight leaving zero at z > 0 makes alpha(s) -> 0 while
  // alpha(2s) stays positive.
  if (w.kind() == K::pwl && z > 0.0) return {kInf, true};

  // Between consecutive candidates both alpha(s) and alpha(2s) are affine
  // (pwl) or constant on left-open intervals (step), so the ratio is monotone
  // there and the supremum is reached at a candidate or as s -> 0+.
  std::vector<double> cand{horizon};
  for (double xj : w.xs()) {
    cand.push_back(xj);
    cand.push_back(xj / 2.0);
    cand.push_back(2.0 * xj);
  }
  if (w.domain() == WeightDomain::unit) {
    cand.push_back(1.0);
    cand.push_back(0.5);
  }
  double best = 0.0;
  if (w.kind() == K::pwl) best = 2.0;  // z = 0 and positive first slope
  for (double s : cand) {
    if (!(s > z) || s > horizon) continue;
    const double base = w.eval_extended(s);
    if (base > 0.0) best = std::max(best, w.eval_extended(2.0 * s) / base);
  }
  return {best, true};
}

double stieltjes_mass(const ContinuousWeight& w, double a, double b) {
  if (!(a >= 0.0) || !(b >= a))
    throw DomainError("stieltjes_mass needs 0 <= a <= b");
  if (a == b) return 0.0;
  return w.eval(b) - w.eval(a);
}

}  // namespace nltrace
