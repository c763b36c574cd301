#pragma once

// Deterministic randomness helpers. std::mt19937_64 itself is fully
// specified by the standard, but the standard distributions and
// std::shuffle are not, so everything that must reproduce bit-for-bit
// across toolchains goes through the routines below.

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace domset {

using Rng = std::mt19937_64;

// Unbiased integer in [0, bound) via rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  assert(bound > 0);
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform_unit(Rng& rng) { return (rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

// After the call the first k elements are a uniform k-subset of v.
template <typename T>
void partial_shuffle(std::vector<T>& v, std::size_t k, Rng& rng) {
  assert(k <= v.size());
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(v[i], v[i + uniform_below(rng, v.size() - i)]);
  }
}

}  // namespace domset
