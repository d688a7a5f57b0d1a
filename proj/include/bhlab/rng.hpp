#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace bhlab {

// SplitMix64. Output is fully specified by the seed, so every corpus built from
// it is identical across platforms and standard libraries (the std
// distributions are not).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // +1 or -1 from the top bit.
  int sign() noexcept { return (next() >> 63) ? -1 : 1; }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) noexcept { return n ? next() % n : 0; }

  // Standard normal by Box-Muller; consumes exactly two draws.
  double gaussian() noexcept {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent child seed from (seed, stream). Restarts and samples
// use split(master, k) so they can run in any order.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  SplitMix64 g(seed ^ (0xd1b54a32d192ed03ull * (stream + 1)));
  g.next();
  return g.next();
}

}  // namespace bhlab
