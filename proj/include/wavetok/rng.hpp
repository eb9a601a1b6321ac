#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace wavetok {

// Deterministic random helper. mt19937_64 has a standard-mandated stream, and
// the float/normal conversions below avoid std::*_distribution, whose output
// is implementation-defined. Same seed, same values, on every platform.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    // uniform in [0, 1), 24 mantissa bits
    float uniform() { return static_cast<float>(gen() >> 40) * (1.0f / 16777216.0f); }

    // uniform in [0, 1), 53 mantissa bits
    double uniform53() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller
    double normal() {
        double u1;
        do {
            u1 = uniform53();
        } while (u1 <= 0.0);
        const double u2 = uniform53();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
};

// Stream seed for trial `index` of an experiment: keeps Monte-Carlo trials
// independent of evaluation order.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace wavetok
