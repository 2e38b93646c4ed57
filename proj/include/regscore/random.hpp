#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace regscore {

// All randomness flows through mt19937_64 with hand-rolled transforms; the
// std:: distributions are implementation-defined and would break the
// same-seed-same-artifact contract across platforms. Reports name this
// generator so seeds stay meaningful.
inline constexpr const char* kPrngName = "mt19937_64+boxmuller";

using Rng = std::mt19937_64;

// Uniform in [0,1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound) via rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

// Standard normal via Box-Muller; draws two uniforms per sample.
inline double normal_sample(Rng& rng) {
    const double u1 = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;  // (0,1]
    const double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Fisher-Yates with the rejection sampler above; std::shuffle is not pinned
// by the standard.
template <typename T>
void shuffle_deterministic(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace regscore
