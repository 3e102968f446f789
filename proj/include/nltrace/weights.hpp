#pragma once

#include <cstdint>
#include <vector>

namespace nltrace {

inline constexpr std::int64_t kDefaultDiscreteHorizon = 1'000'000;
inline constexpr double kDefaultContinuousHorizon = 1.0e6;

/// Weight alpha on the non-negative integers: monotone, alpha(0) = 0.
/// Evaluated at ranks of finite-rank operators.
class DiscreteWeight {
 public:
  enum class Kind { power, explicit_constant, explicit_arithmetic };

  /// alpha(n) = n^theta, theta > 0.
  static DiscreteWeight power(double theta);
  /// alpha(n) = values[n] for n < values.size(), tail afterwards.
  /// values[0] must be 0.
  static DiscreteWeight explicit_constant(std::vector<double> values,
                                          double tail);
  /// alpha(n) = values[n] for n < values.size(); beyond that alpha grows by
  /// `increment` per step, starting from the last listed value.
  static DiscreteWeight explicit_arithmetic(std::vector<double> values,
                                            double increment);

  /// alpha(n). Throws DomainError for n < 0.
  double eval(std::int64_t n) const;
  double operator()(std::int64_t n) const { return eval(n); }

  /// lim alpha(n) as n -> infinity (may be +inf).
  double limit() const;

  Kind kind() const noexcept { return kind_; }
  double theta() const noexcept { return theta_; }
  const std::vector<double>& values() const noexcept { return values_; }
  /// Tail value (constant mode) or tail increment (arithmetic mode).
  double tail() const noexcept { return tail_; }

 private:
  DiscreteWeight(Kind kind, double theta, std::vector<double> values,
                 double tail);

  Kind kind_;
  double theta_ = 0.0;
  std::vector<double> values_;
  double tail_ = 0.0;
};

enum class WeightDomain { half_line, unit };

/// Weight alpha on [0, inf) or [0, 1]: monotone, alpha(0) = 0. Restricted to
/// closed-form families and piecewise-linear/step functions so that the
/// Stieltjes measure integrates step functions exactly.
class ContinuousWeight {
 public:
  enum class Kind { power, cap, indicator, pwl, step };

  static ContinuousWeight power(double theta,
                                WeightDomain domain = WeightDomain::half_line);
  /// min(x, t).
  static ContinuousWeight cap(double t,
                              WeightDomain domain = WeightDomain::half_line);
  /// 0 at 0 and 1 for x > 0; recovers the operator norm.
  static ContinuousWeight indicator(
      WeightDomain domain = WeightDomain::half_line);
  /// Continuous piecewise-linear through (x[i], y[i]) with x[0] = 0, y[0] = 0,
  /// extended beyond x.back() with slope `final_slope`.
  static ContinuousWeight pwl(std::vector<double> x, std::vector<double> y,
                              double final_slope,
                              WeightDomain domain = WeightDomain::half_line);
  /// Left-continuous step function: 0 at 0 and y[j] on (x[j], x[j+1]], with
  /// x[0] = 0 and y[last] holding on (x[last], inf).
  static ContinuousWeight step(std::vector<double> x, std::vector<double> y,
                               WeightDomain domain = WeightDomain::half_line);

  /// alpha(x). Throws DomainError for x < 0 or x outside the declared domain.
  /// x = +inf returns limit().
  double eval(double x) const;
  double operator()(double x) const { return eval(x); }
  /// Like eval, but a unit-domain weight is held at alpha(1) for x > 1.
  double eval_extended(double x) const;

  double limit() const;

  /// False for the indicator and step kinds, which are only left-continuous.
  bool is_continuous() const noexcept;

  Kind kind() const noexcept { return kind_; }
  WeightDomain domain() const noexcept { return domain_; }
  double theta() const noexcept { return param_; }
  double cap_point() const noexcept { return param_; }
  double final_slope() const noexcept { return param_; }
  const std::vector<double>& xs() const noexcept { return x_; }
  const std::vector<double>& ys() const noexcept { return y_; }

 private:
  ContinuousWeight(Kind kind, WeightDomain domain, double param,
                   std::vector<double> x, std::vector<double> y);
  double eval_unchecked(double x) const;

  Kind kind_;
  WeightDomain domain_;
  double param_ = 0.0;
  std::vector<double> x_;
  std::vector<double> y_;
};

/// c_n = alpha(n) - alpha(n-1), n >= 1.
double increment(const DiscreteWeight& w, std::int64_t n);

/// True iff c_1 >= c_2 >= ... >= c_horizon. Exact for the explicit kinds
/// (their increments are eventually constant) and closed-form for power.
bool is_concave(const DiscreteWeight& w,
                std::int64_t horizon = kDefaultDiscreteHorizon);
/// True iff the slopes of alpha are non-increasing.
bool is_concave(const ContinuousWeight& w);

struct DoublingSup {
  double value = 0.0;
  /// False when the value comes from a sampled scan rather than a closed form
  /// or a finite candidate set known to contain the supremum.
  bool exact = true;
};

/// sup alpha(2n)/alpha(n) over 1 <= n <= horizon with alpha(n) > 0.
/// Throws UndefinedRatioError if alpha vanishes on the whole range.
DoublingSup doubling_sup(const DiscreteWeight& w,
                         std::int64_t horizon = kDefaultDiscreteHorizon);
/// sup alpha(2s)/alpha(s) over 0 < s <= horizon with alpha(s) > 0. A
/// unit-domain weight uses alpha(s) = alpha(1) for s > 1 and caps the horizon
/// at 1.
DoublingSup doubling_sup(const ContinuousWeight& w,
                         double horizon = kDefaultContinuousHorizon);

/// nu_alpha([a, b)) = alpha(b) - alpha(a).
double stieltjes_mass(const ContinuousWeight& w, double a, double b);

}  // namespace nltrace
