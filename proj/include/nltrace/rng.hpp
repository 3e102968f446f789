#pragma once

#include <array>
#include <cstdint>

namespace nltrace {

/// One splitmix64 step: state += 0x9e3779b97f4a7c15, then
/// z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9, z = (z ^ (z >> 27)) *
/// 0x94d049bb133111eb, return z ^ (z >> 31).
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed of trial `index` under `master`: two splitmix64 outputs from
/// master ^ (index * 0xd1b54a32d192ed03), the second returned. Independent of
/// how trials are split across workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// xoshiro256** seeded by four splitmix64 outputs.
///   result = rotl(s1 * 5, 7) * 9
///   t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t;
///   s3 = rotl(s3, 45)
/// uniform() = (next() >> 11) * 2^-53 in [0, 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;
  /// Raw state, for reference-vector checks.
  static Rng from_state(const std::array<std::uint64_t, 4>& state) noexcept;

  std::uint64_t next() noexcept;
  double uniform() noexcept;
  /// Standard normal by Box-Muller on (1 - u1, u2); one value per call.
  double normal() noexcept;
  /// Uniform integer in [0, n), n >= 1, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t n) noexcept;

 private:
  std::array<std::uint64_t, 4> s_;
};

}  // namespace nltrace
