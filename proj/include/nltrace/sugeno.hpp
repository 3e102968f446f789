#pragma once

#include "nltrace/spectral.hpp"
#include "nltrace/weights.hpp"

namespace nltrace {

/// Sugeno-type trace on matrices; alpha is evaluated at ranks.
struct SugenoTrace {
  DiscreteWeight weight;
};

/// max_i min(l_i, alpha(i)) over a descending spectrum; negative entries
/// count as 0.
double sugeno_trace(const SpectrumDesc& spec, const SugenoTrace& st);
/// Throws DomainError if some eigenvalue is below -1e-9 * ||a||_F.
double sugeno_trace(const ComplexMatrix& a, const SugenoTrace& st);

/// psi_alpha(|a - b|). Throws HypothesisError for a non-concave weight unless
/// `allow_nonconcave` is set, and ShapeError on a dimension mismatch.
double sugeno_metric(const ComplexMatrix& a, const ComplexMatrix& b,
                     const SugenoTrace& st, bool allow_nonconcave = false);

/// psi(a1) - psi(a2) + i (psi(a3) - psi(a4)) with a = a1 - a2 + i (a3 - a4),
/// a1 a2 = a3 a4 = 0. Eigenvalues within 1e-12 * ||a||_F of 0 belong to
/// neither part.
Complex sugeno_extend(const ComplexMatrix& a, const SugenoTrace& st);

}  // namespace nltrace
