#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nltrace/report.hpp"

namespace nltrace {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of dimension n.
  explicit ComplexMatrix(std::size_t n);
  /// Throws InputError on a size mismatch or non-finite entries.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t size() const noexcept { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  std::span<const Complex> entries() const noexcept { return a_; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  /// max |A - A*| over entries.
  double hermitian_defect() const;
  bool is_hermitian() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex k);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(Complex k, ComplexMatrix a) { return a *= k; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

/// Descending real sequence with an implicit zero tail.
class SpectrumDesc {
 public:
  SpectrumDesc() = default;
  /// Throws InputError unless `values` is non-increasing and finite.
  explicit SpectrumDesc(std::vector<double> values);
  /// Sorts descending (stable) first.
  static SpectrumDesc from_unsorted(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }
  /// 1-based access; 0 past the stored values.
  double at(std::size_t i) const noexcept {
    return i >= 1 && i <= v_.size() ? v_[i - 1] : 0.0;
  }
  bool nonnegative() const noexcept { return v_.empty() || v_.back() >= 0.0; }

  friend bool operator==(const SpectrumDesc&, const SpectrumDesc&) = default;

 private:
  std::vector<double> v_;
};

struct EigenDecomposition {
  SpectrumDesc values;
  /// Column k is the unit eigenvector for values.values()[k].
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Stops when the off-diagonal Frobenius norm drops to
/// 1e-12 * max(1, ||a||_F); throws ConvergenceError after 100 sweeps and
/// ShapeError if `a` is not Hermitian within 1e-10 * max(1, ||a||_F).
/// Eigenvalues within 1e-12 * ||a||_F of zero are returned as exactly 0.
EigenDecomposition hermitian_eigen(const ComplexMatrix& a);
SpectrumDesc hermitian_eigenvalues(const ComplexMatrix& a);

/// Square roots of the eigenvalues of a* a, clamped at 0.
SpectrumDesc singular_values(const ComplexMatrix& a);

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

/// Hermitian with smallest eigenvalue >= -tol * max(1, ||a||_F).
bool is_psd(const ComplexMatrix& a, double tol = 1e-9);

/// V diag(f(lambda)) V* for Hermitian a.
template <class F>
ComplexMatrix functional_calculus(const ComplexMatrix& a, F f);

/// Checks lambda_{i+j-1}(a+b) <= lambda_i(a) + lambda_j(b) + 1e-9 for every
/// admissible (i, j). `worst` is the smallest slack rhs - lhs.
Report weyl_check(const ComplexMatrix& a, const ComplexMatrix& b);

// ---------------------------------------------------------------------------

template <class F>
ComplexMatrix functional_calculus(const ComplexMatrix& a, F f) {
  const auto eig = hermitian_eigen(a);
  const std::size_t n = a.size();
  const auto& lam = eig.values.values();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(lam[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += fk * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return out;
}

}  // namespace nltrace
