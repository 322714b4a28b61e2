#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace qvol::rng {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011). A block is
// a pure function of (counter, key), so any slice of the sample range can be
// generated independently: parallel and serial runs agree bit for bit.
using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter philox4x32(Counter c, Key k) {
    constexpr std::uint32_t mul0 = 0xD2511F53u;
    constexpr std::uint32_t mul1 = 0xCD9E8D57u;
    constexpr std::uint32_t weyl0 = 0x9E3779B9u;
    constexpr std::uint32_t weyl1 = 0xBB67AE85u;

    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(mul0) * c[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(mul1) * c[2];
        c = Counter{static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
                    static_cast<std::uint32_t>(p1),
                    static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
                    static_cast<std::uint32_t>(p0)};
        k[0] += weyl0;
        k[1] += weyl1;
    }
    return c;
}

// Block addressed by (seed, sample index, slot within the sample).
inline Counter philox_block(std::uint64_t seed, std::uint64_t sample, std::uint32_t slot) {
    return philox4x32(Counter{static_cast<std::uint32_t>(sample),
                              static_cast<std::uint32_t>(sample >> 32), slot, 0u},
                      Key{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32)});
}

// Uniform double in (0, 1] from 64 random bits (53-bit resolution; the open
// lower end keeps log() finite below).
inline double uniform_open(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>((bits >> 11) + 1) * 0x1p-53;
}

struct GaussianPair {
    double z0;
    double z1;
};

// Box-Muller pair drawn from the block addressed by (seed, sample, slot).
inline GaussianPair gaussian_pair(std::uint64_t seed, std::uint64_t sample, std::uint32_t slot) {
    const Counter b = philox_block(seed, sample, slot);
    const double u1 = uniform_open(b[0], b[1]);
    const double u2 = uniform_open(b[2], b[3]);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    return GaussianPair{r * std::cos(angle), r * std::sin(angle)};
}

}  // namespace qvol::rng
