#pragma once

#include <cstdint>
#include <vector>

#include "qvol/quadric.hpp"
#include "qvol/spectral.hpp"

namespace qvol {

struct MCEstimate {
    double fraction = 0.0;        // hits / samples
    double standard_error = 0.0;  // sqrt(fraction * (1 - fraction) / samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Fraction of uniformly sampled points of CP^n on which the Hermitian form is
// positive. Points come from standard complex Gaussian vectors (unitary
// invariance makes the projection uniform); each sample's variates are
// addressed by counter, so the result is bit-identical for any thread count.
// weights: the n+1 diagonal eigenvalues (positives, negatives, zeros).
MCEstimate mc_fraction(const std::vector<double>& weights, std::uint64_t samples,
                       std::uint64_t seed);
MCEstimate mc_fraction(const Spectrum& spectrum, std::uint64_t samples, std::uint64_t seed);
MCEstimate mc_fraction(const FloatSpectrum& spectrum, std::uint64_t samples, std::uint64_t seed);

// Reference single-threaded sampler; same stream addressing, same counts.
MCEstimate mc_fraction_serial(const std::vector<double>& weights, std::uint64_t samples,
                              std::uint64_t seed);

}  // namespace qvol
