#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nltrace/errors.hpp"
#include "nltrace/harness.hpp"
#include "nltrace/sugeno.hpp"

using namespace nltrace;

namespace {

/// max over index subsets S of min(min_{i in S} l_i, alpha(|S|)).
double sugeno_brute(const std::vector<double>& l, const DiscreteWeight& w) {
  double best = 0.0;
  const std::size_t n = l.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    double lo = INFINITY;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) {
        lo = std::min(lo, std::max(l[i], 0.0));
        ++count;
      }
    best = std::max(best, std::min(lo, w.eval(count)));
  }
  return best;
}

ComplexMatrix rank_projection(std::size_t n, std::size_t r, double c) {
  std::vector<double> d(n, 0.0);
  std::fill(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(r), c);
  return ComplexMatrix::diagonal(d);
}

const SugenoTrace kIdentity{DiscreteWeight::power(1)};
const SugenoTrace kSqrt{DiscreteWeight::power(0.5)};

}  // namespace

TEST_SUITE("sugeno") {

TEST_CASE("scaled projections") {
  for (double c : {0.25, 1.0, 1.5, 7.0})
    for (std::size_t r = 0; r <= 5; ++r)
      CHECK(sugeno_trace(rank_projection(5, r, c), kIdentity) ==
            std::min(c, static_cast<double>(r)));
}

TEST_CASE("worked spectrum") {
  const SpectrumDesc s({3, 2, 1});
  CHECK(sugeno_trace(s, kIdentity) == 2.0);
  CHECK(sugeno_brute(s.values(), kIdentity.weight) == 2.0);
  CHECK(sugeno_trace(SpectrumDesc(), kIdentity) == 0.0);
  CHECK(sugeno_trace(SpectrumDesc({2, -1}), kIdentity) == 1.0);
}

TEST_CASE("domain and shape errors") {
  CHECK_THROWS_AS(sugeno_trace(ComplexMatrix::diagonal(std::vector<double>{1, -1}), kIdentity),
                  DomainError);
  CHECK_THROWS_AS(sugeno_metric(ComplexMatrix(2), ComplexMatrix(3), kIdentity), ShapeError);
  const SugenoTrace square{DiscreteWeight::power(2)};
  CHECK_THROWS_AS(sugeno_metric(ComplexMatrix(2), ComplexMatrix(2), square), HypothesisError);
  CHECK(sugeno_metric(ComplexMatrix(2), ComplexMatrix(2), square, true) == 0.0);
}

TEST_CASE("property: spectrum form matches subset enumeration") {
  Rng rng(11);
  const std::vector<DiscreteWeight> ws{DiscreteWeight::power(1), DiscreteWeight::power(0.5),
                                       DiscreteWeight::power(2),
                                       DiscreteWeight::explicit_constant({0, 1, 1, 3}, 3)};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> l(1 + rng.below(8));
    for (auto& x : l) x = 4 * rng.normal();
    const auto s = SpectrumDesc::from_unsorted(l);
    const auto& w = ws[trial % ws.size()];
    CHECK(sugeno_trace(s, SugenoTrace{w}) == sugeno_brute(s.values(), w));
  }
}

TEST_CASE("property: metric axioms for a concave weight") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const auto a = random_hermitian(n, rng);
    const auto b = random_hermitian(n, rng);
    const auto c = random_hermitian(n, rng);
    CHECK(sugeno_metric(a, a, kSqrt) == 0.0);
    const double ab = sugeno_metric(a, b, kSqrt);
    CHECK(ab == sugeno_metric(b, a, kSqrt));
    CHECK(ab > 0.0);
    CHECK(ab <= sugeno_metric(a, c, kSqrt) + sugeno_metric(c, b, kSqrt) + 1e-9);
  }
}

TEST_CASE("extension to all matrices") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const auto b = random_psd(n, rng);
    const double psi = sugeno_trace(b, kIdentity);
    const Complex pos = sugeno_extend(b, kIdentity);
    CHECK(pos.real() == doctest::Approx(psi).epsilon(1e-12));
    CHECK(pos.imag() == 0.0);
    const Complex neg = sugeno_extend(Complex(-1.0) * b, kIdentity);
    CHECK(neg.real() == doctest::Approx(-psi).epsilon(1e-12));
    const Complex rot = sugeno_extend(Complex(0.0, 1.0) * b, kIdentity);
    CHECK(std::abs(rot.real()) <= 1e-12 * std::max(1.0, psi));
    CHECK(rot.imag() == doctest::Approx(psi).epsilon(1e-12));
  }
  // diag(2, -1): positive part 2 (rank 1), negative part 1 (rank 1).
  const Complex z = sugeno_extend(ComplexMatrix::diagonal(std::vector<double>{2, -1}), kIdentity);
  CHECK(z == Complex(0.0, 0.0));
}

TEST_CASE("property: unitary invariance and monotonicity") {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const auto a = random_psd(n, rng);
    const auto u = random_unitary(n, rng);
    const double psi = sugeno_trace(a, kSqrt);
    CHECK(sugeno_trace(u * a * u.adjoint(), kSqrt) == doctest::Approx(psi).epsilon(1e-9));
    CHECK(sugeno_trace(a + random_psd(n, rng), kSqrt) >= psi - 1e-9);
  }
}

}  // TEST_SUITE
