#ifndef BIZGAME_RNG_HPP
#define BIZGAME_RNG_HPP

#include <cstdint>
#include <random>

namespace bizgame {

// All randomness flows through explicitly seeded mt19937_64 streams so that
// every run is replayable from its seed alone.
using Rng = std::mt19937_64;

// Uniform double in [0, 1). Uses the top 53 bits of one generator draw;
// unlike std::uniform_real_distribution the mapping is pinned by the
// standardised mt19937_64 output, so streams replay identically everywhere.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace bizgame

#endif  // BIZGAME_RNG_HPP
