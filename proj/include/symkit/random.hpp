#pragma once

#include <cstdint>
#include <random>

namespace symkit {

/// Uniform integer in [lo, hi]. Written out by hand because the standard
/// distributions are not reproducible across library implementations.
inline int small_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

}  // namespace symkit
