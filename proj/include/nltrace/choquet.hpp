#pragma once

#include "nltrace/spectral.hpp"
#include "nltrace/weights.hpp"

namespace nltrace {

/// |||a|||_{alpha,p} = phi_alpha(|a|^p)^{1/p}.
struct WeightedPNorm {
  DiscreteWeight weight;
  double p;

  /// Throws InputError unless p > 0 and finite.
  WeightedPNorm(DiscreteWeight w, double p);
};

/// phi_alpha on a descending non-negative spectrum. The layer form
/// sum (l_i - l_{i+1}) alpha(i) and the increment form sum l_i c_i are both
/// evaluated; a relative gap above 1e-12 throws ConsistencyError. Returns the
/// layer form. Throws DomainError on a negative entry.
double choquet_trace(const SpectrumDesc& spec, const DiscreteWeight& w);

/// (sum s_i^p c_i)^{1/p} over a descending non-negative sequence s.
double weighted_p_norm(const SpectrumDesc& s, const WeightedPNorm& norm);
/// weighted_p_norm of the singular values of a.
double weighted_p_norm(const ComplexMatrix& a, const WeightedPNorm& norm);

/// |||a+b||| / (|||a||| + |||b|||). Throws ShapeError on a dimension mismatch
/// and UndefinedRatioError when both norms vanish.
double triangle_ratio(const ComplexMatrix& a, const ComplexMatrix& b,
                      const WeightedPNorm& norm);

}  // namespace nltrace
