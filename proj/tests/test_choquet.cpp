#include <doctest.h>

#include <cmath>

#include "nltrace/choquet.hpp"
#include "nltrace/errors.hpp"
#include "nltrace/harness.hpp"
#include "oracles.hpp"

using namespace nltrace;

namespace {

const DiscreteWeight kKyFanLike = DiscreteWeight::explicit_constant({0, 1, 1}, 3);

ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(d); }

}  // namespace

TEST_SUITE("choquet") {

TEST_CASE("trace of the worked spectrum") {
  // lambda_1 + 2 lambda_3 for (5, 4, 3, 2).
  CHECK(choquet_trace(SpectrumDesc({5, 4, 3, 2}), kKyFanLike) == 11.0);
  CHECK(choquet_trace(SpectrumDesc({5, 4, 3, 2}), kKyFanLike) ==
        oracle::layer_cake({5, 4, 3, 2}, kKyFanLike));
  CHECK(choquet_trace(SpectrumDesc({0, 0, 0}), kKyFanLike) == 0.0);
  CHECK(choquet_trace(SpectrumDesc(), kKyFanLike) == 0.0);
  CHECK_THROWS_AS(choquet_trace(SpectrumDesc({1, -1}), kKyFanLike), DomainError);
}

TEST_CASE("identity weight recovers the trace") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> l(1 + trial % 10);
    for (auto& x : l) x = static_cast<double>(rng.below(64)) / 8.0;
    const auto s = SpectrumDesc::from_unsorted(l);
    double sum = 0.0;
    for (double x : l) sum += x;
    CHECK(choquet_trace(s, DiscreteWeight::power(1)) == sum);
  }
}

TEST_CASE("property: layer cake equals the trace exactly on dyadic spectra") {
  Rng rng(2);
  const std::vector<DiscreteWeight> ws{kKyFanLike, DiscreteWeight::power(1), DiscreteWeight::power(2),
                                       DiscreteWeight::explicit_arithmetic({0, 0.5, 0.75}, 0.125)};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> l(1 + rng.below(12));
    for (auto& x : l) x = static_cast<double>(rng.below(33)) / 8.0;
    const auto s = SpectrumDesc::from_unsorted(l);
    const auto& w = ws[trial % ws.size()];
    CHECK(choquet_trace(s, w) == oracle::layer_cake(l, w));
  }
}

TEST_CASE("property: trace is monotone under entrywise domination") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> lo(1 + rng.below(8)), hi;
    for (auto& x : lo) x = std::abs(rng.normal());
    for (double x : lo) hi.push_back(x + std::abs(rng.normal()));
    const auto s_lo = SpectrumDesc::from_unsorted(lo), s_hi = SpectrumDesc::from_unsorted(hi);
    CHECK(choquet_trace(s_lo, kKyFanLike) <= choquet_trace(s_hi, kKyFanLike));
  }
}

TEST_CASE("weighted p-norm") {
  CHECK(weighted_p_norm(diag({1, 1, 0, 0}), WeightedPNorm(kKyFanLike, 1)) == 1.0);
  CHECK(weighted_p_norm(ComplexMatrix::identity(4), WeightedPNorm(DiscreteWeight::power(1), 2)) ==
        2.0);
  // |a|^p is taken on the spectrum: (2^3 + 1^3 * 0 + ...)^(1/3) for diag(-2, 1, 0).
  CHECK(weighted_p_norm(diag({-2, 1, 0}), WeightedPNorm(kKyFanLike, 3)) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(WeightedPNorm(kKyFanLike, 0), InputError);
  CHECK_THROWS_AS(WeightedPNorm(kKyFanLike, -1), InputError);
}

TEST_CASE("triangle ratio") {
  const WeightedPNorm n1(kKyFanLike, 1);
  CHECK(triangle_ratio(diag({1, 1, 0, 0}), diag({0, 0, 1, 1}), n1) == 1.5);
  Rng rng(4);
  const ComplexMatrix a = random_complex(5, rng);
  CHECK(triangle_ratio(a, a, n1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(triangle_ratio(ComplexMatrix(3), ComplexMatrix(3), n1), UndefinedRatioError);
  CHECK_THROWS_AS(triangle_ratio(ComplexMatrix(3), ComplexMatrix(2), n1), ShapeError);
}

TEST_CASE("property: homogeneity and unitary invariance") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const ComplexMatrix a = random_complex(n, rng);
    const WeightedPNorm norm(trial % 2 ? kKyFanLike : DiscreteWeight::power(0.5),
                             0.5 + 2 * rng.uniform());
    const double base = weighted_p_norm(a, norm);
    const Complex k(rng.normal(), rng.normal());
    CHECK(weighted_p_norm(k * a, norm) == doctest::Approx(std::abs(k) * base).epsilon(1e-12));
    const ComplexMatrix u = random_unitary(n, rng), v = random_unitary(n, rng);
    CHECK(std::abs(weighted_p_norm(u * a * v, norm) - base) <= 1e-9 * std::max(1.0, base));
  }
}

TEST_CASE("property: concave weights satisfy the triangle inequality") {
  Rng rng(6);
  const std::vector<DiscreteWeight> ws{DiscreteWeight::power(1), DiscreteWeight::power(0.5),
                                       DiscreteWeight::explicit_constant({0, 1, 2}, 2)};
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const double p = trial % 2 ? 1.0 : 2.0;
    const WeightedPNorm norm(ws[trial % 3], p);
    CHECK(triangle_ratio(random_hermitian(n, rng), random_hermitian(n, rng), norm) <= 1 + 1e-9);
  }
}

TEST_CASE("property: doubling constant bounds the quasi-triangle ratio") {
  Rng rng(7);
  const auto w = DiscreteWeight::power(2);
  const double L = doubling_sup(w).value;
  for (double p : {0.5, 1.0, 2.0}) {
    const double bound = std::max(1.0, std::exp2(1 / p - 1)) * std::pow(L, 1 / p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 8;
      CHECK(triangle_ratio(random_psd(n, rng), random_psd(n, rng), WeightedPNorm(w, p)) <=
            bound + 1e-9);
    }
  }
}

}  // TEST_SUITE
