#pragma once

#include <cstdint>
#include <random>

namespace ctsim {

/// Random source used throughout the simulator. All stochastic operations
/// take an explicit engine so a trial is a pure function of its seed.
using Rng = std::mt19937_64;

/// SplitMix64 step. Used to derive independent per-trial seeds from a
/// master seed: the i-th trial stream is seeded with the i-th output of
/// the SplitMix64 sequence started at the master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for trial `index` under `master_seed`.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed;
    std::uint64_t out = splitmix64(s);
    for (std::uint64_t i = 0; i < index; ++i)
        out = splitmix64(s);
    return out;
}

/// Seed for one-off derived streams (graph extension, app-user draws at
/// ensemble level) that must not collide with trial streams.
inline std::uint64_t derived_seed(std::uint64_t master_seed, std::uint64_t tag) {
    std::uint64_t s = master_seed ^ (0xD1B54A32D192ED03ULL + tag);
    return splitmix64(s);
}

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

} // namespace ctsim
