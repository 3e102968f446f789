#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace nltrace {

inline constexpr std::size_t kMaxGroundSize = 20;
inline constexpr std::size_t kExhaustiveMonotoneLimit = 12;

/// Set function on {1..n}, n <= 20, indexed by bitmask (bit i is point i+1).
/// mu(empty) = 0 and A subset B implies mu(A) <= mu(B).
class MonotoneMeasure {
 public:
  /// Every subset given; values[mask]. Validates as `partial` does.
  static MonotoneMeasure full(std::size_t n, std::vector<double> values);
  /// Only some subsets given. Throws InputError on n > 20, mu(empty) != 0,
  /// negative or NaN values, or a monotonicity violation among defined
  /// subsets (every pair for n <= 12, random maximal chains above).
  static MonotoneMeasure partial(
      std::size_t n, std::vector<std::optional<double>> values,
      std::uint64_t chain_seed = 0);
  /// mu(A) = sum of point weights over A.
  static MonotoneMeasure additive(const std::vector<double>& point_weights);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t full_mask() const noexcept {
    return n_ == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n_) - 1);
  }
  bool defined(std::uint32_t mask) const { return v_.at(mask).has_value(); }
  /// Throws InputError if the subset is not defined.
  double operator()(std::uint32_t mask) const;

 private:
  MonotoneMeasure(std::size_t n, std::vector<std::optional<double>> v)
      : n_(n), v_(std::move(v)) {}
  std::size_t n_ = 0;
  std::vector<std::optional<double>> v_;
};

/// Non-negative finite values at the ground points.
class SimpleFunction {
 public:
  /// Throws InputError on negative or non-finite entries.
  explicit SimpleFunction(std::vector<double> f);
  const std::vector<double>& values() const noexcept { return f_; }
  std::size_t size() const noexcept { return f_.size(); }
  double operator[](std::size_t i) const { return f_[i]; }

 private:
  std::vector<double> f_;
};

/// sum_{i<n} (f_s(i) - f_s(i+1)) mu(A_i) + f_s(n) mu(A_n) with s sorting f
/// descending (stable) and A_i = {s(1..i)}. Subsets with a zero coefficient
/// need not be defined. Throws ShapeError if sizes differ.
double choquet_integral(const SimpleFunction& f, const MonotoneMeasure& mu);

/// max_i min(f_s(i), mu(A_i)).
double sugeno_integral(const SimpleFunction& f, const MonotoneMeasure& mu);

/// (f_i - f_j)(g_i - g_j) >= 0 for all pairs. Throws ShapeError if sizes
/// differ.
bool is_comonotone(const SimpleFunction& f, const SimpleFunction& g);

}  // namespace nltrace
