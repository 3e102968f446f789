#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "nltrace/errors.hpp"
#include "nltrace/fuzzy.hpp"
#include "nltrace/harness.hpp"
#include "oracles.hpp"

using namespace nltrace;

namespace {

// mu({1}) = 0.5, mu({2}) = 0.25, mu({1,2}) = 1.
MonotoneMeasure two_point() { return MonotoneMeasure::full(2, {0, 0.5, 0.25, 1}); }

SimpleFunction random_function(std::size_t n, Rng& rng) {
  std::vector<double> f(n);
  for (auto& x : f) x = static_cast<double>(rng.below(6)) / 4;
  return SimpleFunction(f);
}

}  // namespace

TEST_SUITE("fuzzy") {

TEST_CASE("two-point example") {
  const SimpleFunction f({3, 1});
  CHECK(choquet_integral(f, two_point()) == 2.0);
  CHECK(sugeno_integral(f, two_point()) == 1.0);
  CHECK(oracle::choquet_layer_cake(f, two_point()) == 2.0);
  CHECK(oracle::sugeno_sup(f, two_point()) == 1.0);
}

TEST_CASE("additive measure gives the weighted sum") {
  const auto mu = MonotoneMeasure::additive({0.5, 0.25, 2});
  CHECK(choquet_integral(SimpleFunction({1, 4, 2}), mu) == 0.5 + 1 + 4);
  CHECK(mu(0b101) == 2.5);
}

TEST_CASE("constant function") {
  Rng rng(21);
  const auto mu = random_monotone_measure(4, rng);
  CHECK(choquet_integral(SimpleFunction({2, 2, 2, 2}), mu) == 2 * mu(0b1111));
  CHECK(sugeno_integral(SimpleFunction({2, 2, 2, 2}), mu) == std::min(2.0, mu(0b1111)));
  CHECK(choquet_integral(SimpleFunction({0, 0, 0, 0}), mu) == 0.0);
}

TEST_CASE("partial measures") {
  // Only the chain {2} < {1,2} is known.
  std::vector<std::optional<double>> v(4);
  v[0b10] = 0.25;
  v[0b11] = 1;
  const auto mu = MonotoneMeasure::partial(2, v);
  CHECK(choquet_integral(SimpleFunction({1, 3}), mu) == 2 * 0.25 + 1);
  CHECK(sugeno_integral(SimpleFunction({1, 3}), mu) == 1.0);
  // The chain through {1} is needed and missing.
  CHECK_THROWS_AS(choquet_integral(SimpleFunction({3, 1}), mu), InputError);
  // A tie makes the coefficient of {1} zero, so it is never looked up.
  CHECK(choquet_integral(SimpleFunction({2, 2}), mu) == 2.0);
  CHECK_FALSE(mu.defined(0b01));
}

TEST_CASE("measure validation") {
  CHECK_THROWS_AS(MonotoneMeasure::full(2, {0, 0.5, 0.25, 0.4}), InputError);
  CHECK_THROWS_AS(MonotoneMeasure::full(1, {0.1, 1}), InputError);
  CHECK_THROWS_AS(MonotoneMeasure::full(1, {0, -1}), InputError);
  CHECK_THROWS_AS(MonotoneMeasure::full(2, {0, 1}), InputError);
  CHECK_THROWS_AS(MonotoneMeasure::additive(std::vector<double>(21, 1.0)), InputError);
  CHECK_THROWS_AS(MonotoneMeasure::partial(21, {}), InputError);
  CHECK_THROWS_AS(SimpleFunction({1, -1}), InputError);
  CHECK_THROWS_AS(choquet_integral(SimpleFunction({1}), two_point()), ShapeError);
  CHECK_THROWS_AS(two_point()(7), InputError);
}

TEST_CASE("large ground sets are checked along sampled chains") {
  const std::size_t n = 14;
  std::vector<std::optional<double>> v(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < v.size(); ++m) v[m] = std::popcount(m);
  CHECK_NOTHROW(MonotoneMeasure::partial(n, v, 5));
  v.back() = 1.0;  // the full set drops below its 13-point subsets
  CHECK_THROWS_AS(MonotoneMeasure::partial(n, v, 5), InputError);
}

TEST_CASE("comonotone") {
  CHECK(is_comonotone(SimpleFunction({1, 2, 3}), SimpleFunction({0, 5, 6})));
  CHECK(is_comonotone(SimpleFunction({1, 1, 3}), SimpleFunction({2, 0, 6})));
  CHECK_FALSE(is_comonotone(SimpleFunction({1, 2}), SimpleFunction({2, 1})));
  CHECK(is_comonotone(SimpleFunction({1e-200, 2e-200}), SimpleFunction({1e-200, 3e-200})));
  CHECK_FALSE(is_comonotone(SimpleFunction({1e-200, 2e-200}), SimpleFunction({3e-200, 1e-200})));
  CHECK_THROWS_AS(is_comonotone(SimpleFunction({1}), SimpleFunction({1, 2})), ShapeError);
}

TEST_CASE("property: integrals match the layer-cake and supremum forms") {
  Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const auto mu = random_monotone_measure(n, rng);
    const auto f = random_function(n, rng);
    CHECK(choquet_integral(f, mu) == doctest::Approx(oracle::choquet_layer_cake(f, mu)).epsilon(1e-14));
    CHECK(sugeno_integral(f, mu) == oracle::sugeno_sup(f, mu));
  }
}

TEST_CASE("property: permutation and tie invariance") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    const auto mu = random_monotone_measure(n, rng);
    const auto f = random_function(n, rng);
    // Relabel the ground set by a random permutation.
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<double> pv(std::size_t{1} << n), pf(n);
    for (std::uint32_t m = 0; m < pv.size(); ++m) {
      std::uint32_t q = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1U) q |= 1U << perm[i];
      pv[q] = mu(m);
    }
    for (std::size_t i = 0; i < n; ++i) pf[perm[i]] = f[i];
    const auto pmu = MonotoneMeasure::full(n, pv);
    CHECK(choquet_integral(SimpleFunction(pf), pmu) ==
          doctest::Approx(choquet_integral(f, mu)).epsilon(1e-14));
    CHECK(sugeno_integral(SimpleFunction(pf), pmu) == sugeno_integral(f, mu));
  }
}

TEST_CASE("property: comonotone additivity") {
  Rng rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const auto mu = random_monotone_measure(n, rng);
    // Both functions are increasing in a shared level, so they are comonotone.
    std::vector<double> level(n), f(n), g(n);
    for (auto& x : level) x = static_cast<double>(rng.below(8));
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = level[i] / 4;
      g[i] = level[i] * level[i] / 8;
    }
    const SimpleFunction sf(f), sg(g);
    REQUIRE(is_comonotone(sf, sg));
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = f[i] + g[i];
    CHECK(choquet_integral(SimpleFunction(h), mu) ==
          doctest::Approx(choquet_integral(sf, mu) + choquet_integral(sg, mu)).epsilon(1e-13));
    for (std::size_t i = 0; i < n; ++i) h[i] = std::max(f[i], g[i]);
    CHECK(sugeno_integral(SimpleFunction(h), mu) ==
          std::max(sugeno_integral(sf, mu), sugeno_integral(sg, mu)));
  }
}

}  // TEST_SUITE
