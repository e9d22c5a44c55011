#pragma once

#include <cstdint>
#include <random>

namespace qwalk {

using RandomStream = std::mt19937_64;

// Independent stream for (master_seed, index). Depends only on its arguments,
// so trial i sees the same numbers no matter which thread runs it.
inline RandomStream make_stream(std::uint64_t master_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return RandomStream(seq);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(RandomStream& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qwalk
