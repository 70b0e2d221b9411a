#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace citekit {

/// Engine behind every stochastic operation. mt19937_64's output sequence is
/// fully specified by the C++ standard (unlike the standard distribution
/// adapters), so seeded runs reproduce bit-for-bit across platforms. All
/// variate transforms below are hand-rolled for the same reason.
using Rng = std::mt19937_64;

inline constexpr std::string_view kGeneratorName = "std::mt19937_64 (C++ standard engine)";

/// Uniform double in [0, 1): top 53 bits of one engine step.
inline double uniform01(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1), never exactly 0 or 1; safe to feed the
/// inverse-CDF normal transform.
inline double uniform01_open(Rng& rng)
{
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform index in [0, n), n >= 1.
inline std::size_t uniform_index(Rng& rng, std::size_t n)
{
    const auto idx = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
    return idx < n ? idx : n - 1;
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent substream seed for a named task under one master seed, so
/// per-journal and per-pair simulations never share generator state and the
/// aggregate result does not depend on scheduling order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view task)
{
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
    for (const char c : task) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return splitmix64(seed ^ splitmix64(h));
}

}  // namespace citekit
