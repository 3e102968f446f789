#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "nltrace/report.hpp"
#include "nltrace/weights.hpp"

namespace nltrace {

/// A constant value held on an interval of the given trace mass.
struct Segment {
  double value;
  double mass;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Positive simple function on [0, T), T = sum of masses, read left to right.
/// Models a tau-finite-rank positive element of a semifinite factor.
class StepOperator {
 public:
  StepOperator() = default;
  /// Throws InputError unless values >= 0, masses > 0, all finite and the
  /// total mass fits under `cap` (1e-12 relative slack).
  explicit StepOperator(std::vector<Segment> segments,
                        std::optional<double> cap = std::nullopt);

  /// value * projection of trace `mass`.
  static StepOperator projection(double mass, double value = 1.0,
                                 std::optional<double> cap = std::nullopt);

  const std::vector<Segment>& segments() const noexcept { return segs_; }
  std::optional<double> cap() const noexcept { return cap_; }
  double total_mass() const noexcept;
  double max_value() const noexcept;
  bool empty() const noexcept { return segs_.empty(); }

  /// f applied pointwise to the values (commuting functional calculus).
  StepOperator map_values(const std::function<double(double)>& f) const;

  friend bool operator==(const StepOperator&, const StepOperator&) = default;

 private:
  std::vector<Segment> segs_;
  std::optional<double> cap_;
};

struct Plateau {
  double value;
  double width;
  /// Cumulative mass at the right end of the plateau.
  double end;
  friend bool operator==(const Plateau&, const Plateau&) = default;
};

/// Decreasing right-continuous rearrangement t -> lambda_t. Plateau values
/// are strictly decreasing and positive; lambda_t = 0 past the last plateau.
struct RearrangedSpectrum {
  std::vector<Plateau> plateaus;

  double support() const noexcept {
    return plateaus.empty() ? 0.0 : plateaus.back().end;
  }
  /// lambda_t, t >= 0.
  double at(double t) const;
};

/// Stable sort by value descending, merge equal values, drop zero values.
/// Cumulative ends are accumulated segment by segment in sorted order.
RearrangedSpectrum rearrange(const StepOperator& a);

/// Generalized t-th eigenvalue. Throws DomainError for t < 0.
double lambda_t(const StepOperator& a, double t);

/// Pointwise sum on the common refinement; the shorter operator is extended
/// by zero. Boundaries closer than 1e-13 * max(1, T) are identified.
StepOperator add(const StepOperator& a, const StepOperator& b);
/// Same refinement for signed segments (values of any sign).
std::vector<Segment> add_segments(const std::vector<Segment>& a,
                                  const std::vector<Segment>& b);

/// sum_{i<n} (a_i - a_{i+1}) alpha(T_i) + a_n alpha(T_n) over the plateaus.
double choquet_spectral(const StepOperator& a, const ContinuousWeight& w);
/// sum_k v_k (alpha(T_k) - alpha(T_{k-1})), the integral of lambda_t against
/// the Stieltjes measure of alpha.
double choquet_stieltjes(const StepOperator& a, const ContinuousWeight& w);

/// choquet_stieltjes of |a|. Throws HypothesisError unless w is concave.
double lorentz_norm(const StepOperator& a, const ContinuousWeight& w);
double lorentz_norm(const std::vector<Segment>& signed_segments,
                    const ContinuousWeight& w);

/// Upper sum sum_{i=1}^M lambda_{(i-1)/M} (alpha(i/M) - alpha((i-1)/M)).
/// Needs total mass <= 1 (DomainError), M >= 1 (DomainError) and a continuous
/// weight (HypothesisError).
double partition_approx(const StepOperator& a, const ContinuousWeight& w,
                        std::size_t M);

/// sup_s min(s, alpha(tau(e_(s,inf)(a)))) evaluated on the level sets.
/// Throws HypothesisError for a non-continuous weight.
double sugeno_trace_step(const StepOperator& a, const ContinuousWeight& w);

/// sup over projections p with p a p >= lambda p of min(lambda, alpha(tau p)),
/// restricted to spectral projections of a. Enumerates every subset of
/// segments for at most 12 segments and the value-ordered prefixes otherwise.
double max_type_value(const StepOperator& a, const ContinuousWeight& w);

struct MinWitness {
  /// tau(q) for q = e_(psi+eps, inf)(a).
  double mass;
  /// passed iff alpha(tau q) < psi + eps and every value outside q is
  /// <= psi + eps. worst is the slack psi + eps - alpha(tau q).
  Report checks;
};

/// Throws DomainError unless eps > 0.
MinWitness min_witness(const StepOperator& a, const ContinuousWeight& w,
                       double eps);

}  // namespace nltrace
