#pragma once

#include <cstdint>
#include <random>

namespace resdecomp::detail {

// std::mt19937_64 output is fixed by the standard; the distributions are not,
// so draws are built directly from raw engine output.

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// +1 or -1 with equal probability.
inline double rademacher(Rng& rng) { return (rng() >> 63) ? 1.0 : -1.0; }

}  // namespace resdecomp::detail
