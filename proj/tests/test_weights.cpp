#include <doctest.h>

#include <cmath>
#include <limits>

#include "nltrace/errors.hpp"
#include "nltrace/rng.hpp"
#include "nltrace/weights.hpp"

using namespace nltrace;

namespace {

const DiscreteWeight kKyFanLike = DiscreteWeight::explicit_constant({0, 1, 1}, 3);
const ContinuousWeight kJumpWeight = ContinuousWeight::step({0, 2}, {1, 4});

// sup alpha(2s)/alpha(s) on a uniform grid over (0, top].
double grid_doubling(const ContinuousWeight& w, double top, int points) {
  double best = 0.0;
  for (int k = 1; k <= points; ++k) {
    const double s = top * k / points;
    const double base = w.eval_extended(s);
    if (base > 0.0) best = std::max(best, w.eval_extended(2 * s) / base);
  }
  return best;
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("eval on the listed families") {
  CHECK(DiscreteWeight::power(1).eval(7) == 7.0);
  CHECK(kKyFanLike.eval(5) == 3.0);
  CHECK(kKyFanLike.eval(2) == 1.0);
  CHECK(ContinuousWeight::cap(2).eval(5) == 2.0);
  CHECK(ContinuousWeight::indicator().eval(0) == 0.0);
  CHECK(ContinuousWeight::indicator().eval(1e-9) == 1.0);
  CHECK(DiscreteWeight::explicit_arithmetic({0, 1}, 0.5).eval(4) == 2.5);
  CHECK(DiscreteWeight::power(2).limit() == std::numeric_limits<double>::infinity());
  CHECK(kKyFanLike.limit() == 3.0);
}

TEST_CASE("eval rejects arguments outside the domain") {
  CHECK_THROWS_AS(DiscreteWeight::power(1).eval(-1), DomainError);
  CHECK_THROWS_AS(ContinuousWeight::power(1).eval(-0.5), DomainError);
  CHECK_THROWS_AS(ContinuousWeight::power(1, WeightDomain::unit).eval(1.5), DomainError);
  CHECK(ContinuousWeight::power(1).eval(std::numeric_limits<double>::infinity()) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("invalid weights are rejected") {
  CHECK_THROWS_AS(DiscreteWeight::power(0), InputError);
  CHECK_THROWS_AS(DiscreteWeight::explicit_constant({1, 2}, 3), InputError);
  CHECK_THROWS_AS(DiscreteWeight::explicit_constant({0, 2, 1}, 3), InputError);
  CHECK_THROWS_AS(DiscreteWeight::explicit_constant({0, 2}, 1), InputError);
  CHECK_THROWS_AS(ContinuousWeight::pwl({0, 1}, {0, 1}, -1), InputError);
  CHECK_THROWS_AS(ContinuousWeight::pwl({0, 1, 1}, {0, 1, 2}, 0), InputError);
  CHECK_THROWS_AS(ContinuousWeight::cap(0), InputError);
}

TEST_CASE("jump weight is left-continuous") {
  CHECK(kJumpWeight.eval(0) == 0.0);
  CHECK(kJumpWeight.eval(2) == 1.0);
  CHECK(kJumpWeight.eval(2.0000001) == 4.0);
  CHECK_FALSE(kJumpWeight.is_continuous());
  CHECK(ContinuousWeight::pwl({0, 1}, {0, 1}, 1).is_continuous());
}

TEST_CASE("increments") {
  CHECK(increment(DiscreteWeight::power(1), 4) == 1.0);
  CHECK(increment(kKyFanLike, 3) == 2.0);
  CHECK(increment(kKyFanLike, 2) == 0.0);
  CHECK_THROWS_AS(increment(kKyFanLike, 0), DomainError);
}

TEST_CASE("concavity") {
  CHECK(is_concave(DiscreteWeight::power(0.5)));
  CHECK_FALSE(is_concave(DiscreteWeight::power(2)));
  CHECK_FALSE(is_concave(kKyFanLike));
  CHECK(is_concave(DiscreteWeight::explicit_constant({0, 1, 2}, 2)));
  CHECK_FALSE(is_concave(DiscreteWeight::explicit_arithmetic({0, 1, 1.5}, 2)));
  CHECK(is_concave(ContinuousWeight::power(0.5)));
  CHECK_FALSE(is_concave(ContinuousWeight::power(2)));
  CHECK(is_concave(ContinuousWeight::cap(3)));
  CHECK(is_concave(ContinuousWeight::pwl({0, 1, 2}, {0, 1, 1.5}, 0)));
  CHECK_FALSE(is_concave(ContinuousWeight::pwl({0, 1, 2}, {0, 1, 1.5}, 1)));
  CHECK_FALSE(is_concave(kJumpWeight));
}

TEST_CASE("doubling supremum") {
  CHECK(doubling_sup(DiscreteWeight::power(2)).value == 4.0);
  CHECK(doubling_sup(kKyFanLike, 100).value == 3.0);
  CHECK(doubling_sup(ContinuousWeight::power(2)).value == 4.0);
  CHECK(doubling_sup(ContinuousWeight::indicator()).value == 1.0);
  CHECK(doubling_sup(kJumpWeight).value == 4.0);
  CHECK_THROWS_AS(doubling_sup(DiscreteWeight::explicit_constant({0, 0}, 0), 10),
                  UndefinedRatioError);
  // A continuous weight leaving zero at 1 has unbounded doubling ratio.
  CHECK(std::isinf(doubling_sup(ContinuousWeight::pwl({0, 1, 2}, {0, 0, 1}, 0)).value));
}

TEST_CASE("doubling supremum of cap(1) matches a dense grid scan") {
  const auto w = ContinuousWeight::cap(1);
  const double grid = grid_doubling(w, 10.0, 100000);
  CHECK(doubling_sup(w).value == 2.0);
  CHECK(grid == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("piecewise-linear doubling candidates dominate a dense grid") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x{0}, y{0};
    for (int k = 0; k < 4; ++k) {
      x.push_back(x.back() + 0.1 + rng.uniform());
      y.push_back(y.back() + rng.uniform() + (k == 0 ? 0.05 : 0.0));
    }
    const auto domain = trial % 2 ? WeightDomain::unit : WeightDomain::half_line;
    if (domain == WeightDomain::unit) {
      for (auto& xi : x) xi /= x.back();
    }
    const auto w = ContinuousWeight::pwl(x, y, rng.uniform(), domain);
    const double top = domain == WeightDomain::unit ? 1.0 : 10.0;
    const auto d = doubling_sup(w, top);
    const double grid = grid_doubling(w, top, 20000);
    CHECK(d.exact);
    CHECK(grid <= d.value * (1 + 1e-12));
    CHECK(d.value <= std::max(grid, 2.0) * (1 + 1e-3));
  }
}

TEST_CASE("stieltjes mass") {
  CHECK(stieltjes_mass(ContinuousWeight::power(1), 2, 5) == 3.0);
  CHECK(stieltjes_mass(ContinuousWeight::cap(2), 1, 3) == 1.0);
  CHECK(stieltjes_mass(ContinuousWeight::power(2), 1.5, 1.5) == 0.0);
  CHECK_THROWS_AS(stieltjes_mass(ContinuousWeight::power(1), 3, 2), DomainError);
}

TEST_CASE("property: increments reproduce the weight") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> v{0};
    for (int k = 0; k < 6; ++k) v.push_back(v.back() + rng.uniform());
    const auto w = trial % 2 ? DiscreteWeight::explicit_constant(v, v.back() + 1)
                             : DiscreteWeight::explicit_arithmetic(v, rng.uniform());
    double acc = 0.0;
    for (std::int64_t n = 1; n <= 30; ++n) {
      acc += increment(w, n);
      CHECK(acc == doctest::Approx(w.eval(n)).epsilon(1e-12));
      CHECK(w.eval(n) >= w.eval(n - 1));
    }
  }
}

TEST_CASE("property: concave discrete weights double by at most 2") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    // Non-increasing dyadic increments, so the partial sums are exact.
    std::vector<double> inc(8);
    for (auto& c : inc) c = static_cast<double>(rng.below(64)) / 64;
    std::sort(inc.rbegin(), inc.rend());
    std::vector<double> v{0};
    for (double c : inc) v.push_back(v.back() + c);
    const auto w = DiscreteWeight::explicit_arithmetic(v, inc.back() * static_cast<double>(rng.below(4)) / 4);
    REQUIRE(is_concave(w));
    CHECK(doubling_sup(w, 1000).value <= 2.0);
  }
}

TEST_CASE("property: continuous weights are monotone and the Stieltjes mass is additive") {
  Rng rng(9);
  const std::vector<ContinuousWeight> ws{ContinuousWeight::power(0.5), ContinuousWeight::power(3),
                                         ContinuousWeight::cap(1.5), kJumpWeight,
                                         ContinuousWeight::pwl({0, 1, 3}, {0, 2, 2.5}, 0.1)};
  for (const auto& w : ws) {
    double prev = 0.0;
    for (double x = 0; x < 10; x += 0.01) {
      CHECK(w.eval(x) >= prev);
      prev = w.eval(x);
    }
    for (int k = 0; k < 100; ++k) {
      const double a = 5 * rng.uniform(), b = a + rng.uniform(), c = b + rng.uniform();
      CHECK(stieltjes_mass(w, a, b) + stieltjes_mass(w, b, c) ==
            doctest::Approx(stieltjes_mass(w, a, c)).epsilon(1e-12));
    }
  }
}

}  // TEST_SUITE
