#include "nltrace/sugeno.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nltrace/errors.hpp"

namespace nltrace {

namespace {

constexpr double kPsdTol = 1e-9;
constexpr double kSplitTol = 1e-12;

// psi of the positive and of the negative part of a Hermitian h.
std::pair<double, double> split_parts(const ComplexMatrix& h, double thresh,
                                      const SugenoTrace& st) {
  const auto lam = hermitian_eigenvalues(h).values();
  std::vector<double> pos, neg;
  for (double x : lam) {
    if (x > thresh) pos.push_back(x);
    else if (x < -thresh) neg.push_back(-x);
  }
  std::reverse(neg.begin(), neg.end());
  return {sugeno_trace(SpectrumDesc(std::move(pos)), st),
          sugeno_trace(SpectrumDesc(std::move(neg)), st)};
}

}  // namespace

double sugeno_trace(const SpectrumDesc& spec, const SugenoTrace& st) {
  double psi = 0.0;
  const auto& l = spec.values();
  for (std::size_t i = 0; i < l.size() && l[i] > 0.0; ++i)
    psi = std::max(psi, std::min(l[i], st.weight.eval(static_cast<std::int64_t>(i + 1))));
  return psi;
}

double sugeno_trace(const ComplexMatrix& a, const SugenoTrace& st) {
  const auto lam = hermitian_eigenvalues(a);
  if (!lam.values().empty() &&
      lam.values().back() < -kPsdTol * a.frobenius_norm())
    throw DomainError("sugeno_trace needs a positive semidefinite matrix");
  return sugeno_trace(lam, st);
}

double sugeno_metric(const ComplexMatrix& a, const ComplexMatrix& b,
                     const SugenoTrace& st, bool allow_nonconcave) {
  if (a.size() != b.size())
    throw ShapeError("sugeno_metric: matrix dimensions differ");
  if (!allow_nonconcave && !is_concave(st.weight))
    throw HypothesisError("sugeno_metric needs a concave weight");
  return sugeno_trace(singular_values(a - b), st);
}

Complex sugeno_extend(const ComplexMatrix& a, const SugenoTrace& st) {
  const double thresh = kSplitTol * a.frobenius_norm();
  const ComplexMatrix adj = a.adjoint();
  const ComplexMatrix re = Complex(0.5) * (a + adj);
  const ComplexMatrix im = Complex(0.0, -0.5) * (a - adj);
  const auto [p1, p2] = split_parts(re, thresh, st);
  const auto [p3, p4] = split_parts(im, thresh, st);
  return {p1 - p2, p3 - p4};
}

}  // namespace nltrace
