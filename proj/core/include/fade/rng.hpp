#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

// Deterministic random primitives. std::mt19937_64 is seeded explicitly
// everywhere; the distribution functions below are hand-rolled because the
// standard library distribution objects are implementation-defined and would
// not reproduce bit-identical streams across toolchains.

namespace fade::rng {

using Engine = std::mt19937_64;

/// Per-trial seed: master_seed XOR trial_index. Parallel and serial trial
/// execution agree because each trial derives its stream from this alone.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return master_seed ^ trial_index;
}

/// splitmix64 mix of a seed and a stream tag, for decorrelated substreams
/// (e.g. trace generation vs. context sampling within one trial).
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1]; safe as a log() argument.
inline double uniform01_pos(Engine& eng) {
    return static_cast<double>((eng() >> 11) + 1) * 0x1.0p-53;
}

/// Standard normal via Box-Muller (two uniforms per draw).
inline double normal01(Engine& eng) {
    const double u1 = uniform01_pos(eng);
    const double u2 = uniform01(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

inline double normal(Engine& eng, double mean, double stddev) {
    return mean + stddev * normal01(eng);
}

/// Categorical draw by inverse CDF walk; probs need not be exactly normalized.
inline std::size_t categorical(Engine& eng, std::span<const double> probs) {
    if (probs.empty()) throw std::invalid_argument("categorical draw: empty probability vector");
    double total = 0.0;
    for (double p : probs) total += p;
    const double u = uniform01(eng) * total;
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        cum += probs[i];
        if (u < cum) return i;
    }
    return probs.size() - 1;
}

}  // namespace fade::rng
