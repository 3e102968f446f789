#include "nltrace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "nltrace/errors.hpp"

namespace nltrace {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kOffDiagTol = 1e-12;
constexpr double kZeroSnap = 1e-12;
constexpr int kMaxSweeps = 100;
constexpr double kWeylTol = 1e-9;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n_ * n_)
    throw InputError("matrix entry count does not match dimension");
  for (const auto& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

bool ComplexMatrix::is_hermitian() const {
  return hermitian_defect() <= kHermitianTol * std::max(1.0, frobenius_norm());
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.n_ != n_) throw ShapeError("matrix dimensions differ");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.n_ != n_) throw ShapeError("matrix dimensions differ");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex k) {
  for (auto& z : a_) z *= k;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw ShapeError("matrix dimensions differ");
  const std::size_t n = a.n_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// ---------------------------------------------------------------------------
// SpectrumDesc

SpectrumDesc::SpectrumDesc(std::vector<double> values) : v_(std::move(values)) {
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!std::isfinite(v_[i])) throw InputError("spectrum has non-finite values");
    if (i > 0 && v_[i] > v_[i - 1])
      throw InputError("spectrum must be in non-increasing order");
  }
}

SpectrumDesc SpectrumDesc::from_unsorted(std::vector<double> values) {
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return SpectrumDesc(std::move(values));
}

// ---------------------------------------------------------------------------
// Eigensolver

EigenDecomposition hermitian_eigen(const ComplexMatrix& input) {
  const std::size_t n = input.size();
  const double fro = input.frobenius_norm();
  const double scale = std::max(1.0, fro);
  if (input.hermitian_defect() > kHermitianTol * scale)
    throw ShapeError("matrix is not Hermitian");

  ComplexMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  int sweep = 0;
  for (;; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= kOffDiagTol * scale) break;
    if (sweep == kMaxSweeps)
      throw ConvergenceError("Jacobi eigensolver did not converge", off);

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex h = a(p, q);
        const double r = std::abs(h);
        if (r == 0.0) continue;
        // Phase the (p, q) entry to a real r, then apply a real rotation.
        const Complex phase = std::conj(h / r);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex upp = c, upq = s;
        const Complex uqp = -s * phase, uqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {  // a <- a U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // a <- U* a
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // v <- v U
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });
  std::vector<double> lam(n);
  ComplexMatrix vec(n);
  const double snap = kZeroSnap * fro;
  for (std::size_t k = 0; k < n; ++k) {
    double x = a(order[k], order[k]).real();
    if (std::abs(x) <= snap) x = 0.0;
    lam[k] = x;
    for (std::size_t i = 0; i < n; ++i) vec(i, k) = v(i, order[k]);
  }
  return {SpectrumDesc(std::move(lam)), std::move(vec)};
}

SpectrumDesc hermitian_eigenvalues(const ComplexMatrix& a) {
  return hermitian_eigen(a).values;
}

SpectrumDesc singular_values(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  // a* a, built on the upper triangle and mirrored so it is exactly Hermitian.
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
  auto lam = hermitian_eigenvalues(g).values();
  for (auto& x : lam) x = std::sqrt(std::max(x, 0.0));
  return SpectrumDesc(std::move(lam));
}

double operator_norm(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : singular_values(a).at(1);
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (!a.is_hermitian()) return false;
  if (a.size() == 0) return true;
  const auto lam = hermitian_eigenvalues(a);
  return lam.values().back() >= -tol * std::max(1.0, a.frobenius_norm());
}

Report weyl_check(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size())
    throw ShapeError("weyl_check: matrix dimensions differ");
  if (!is_psd(a) || !is_psd(b))
    throw DomainError("weyl_check: inputs must be positive semidefinite");
  const auto la = hermitian_eigenvalues(a);
  const auto lb = hermitian_eigenvalues(b);
  const auto lab = hermitian_eigenvalues(a + b);
  const std::size_t n = a.size();

  Report r;
  r.suite = "weyl_check";
  r.metric = "slack";
  r.trials = 1;
  double worst = std::numeric_limits<double>::infinity();
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; i + j - 1 <= n; ++j) {
      const double slack = la.at(i) + lb.at(j) - lab.at(i + j - 1);
      if (slack < worst) {
        worst = slack;
        wi = i;
        wj = j;
      }
    }
  r.worst = n == 0 ? 0.0 : worst;
  r.passed = r.worst >= -kWeylTol;
  r.witness = Json{{"i", wi}, {"j", wj}};
  return r;
}

}  // namespace nltrace
