#include "qvol/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "qvol/philox.hpp"

namespace qvol {

namespace {

bool form_positive(const std::vector<double>& weights, std::uint64_t seed, std::uint64_t sample) {
    double form = 0.0;
    for (std::uint32_t j = 0; j < weights.size(); ++j) {
        const rng::GaussianPair g = rng::gaussian_pair(seed, sample, j);
        form += weights[j] * (g.z0 * g.z0 + g.z1 * g.z1);
    }
    return form > 0.0;
}

MCEstimate finish(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed) {
    MCEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.fraction = static_cast<double>(hits) / static_cast<double>(samples);
    est.standard_error =
        std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(samples));
    return est;
}

std::vector<double> diagonal_weights(const Spectrum& s) {
    std::vector<double> w;
    w.reserve(s.positives.size() + s.negatives.size() + s.zeros);
    for (const Rational& v : s.positives) w.push_back(v.to_double());
    for (const Rational& v : s.negatives) w.push_back(-v.to_double());
    w.insert(w.end(), s.zeros, 0.0);
    return w;
}

std::vector<double> diagonal_weights(const FloatSpectrum& s) {
    double max_abs = 1.0;
    for (double v : s.eigenvalues) max_abs = std::max(max_abs, std::abs(v));
    const double cut = s.zero_tolerance * max_abs;
    std::vector<double> w = s.eigenvalues;
    for (double& v : w) {
        if (std::abs(v) <= cut) v = 0.0;
    }
    return w;
}

}  // namespace

MCEstimate mc_fraction(const std::vector<double>& weights, std::uint64_t samples,
                       std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("mc_fraction: needs at least one sample");
    }
    std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (long long s = 0; s < static_cast<long long>(samples); ++s) {
        if (form_positive(weights, seed, static_cast<std::uint64_t>(s))) ++hits;
    }
    return finish(hits, samples, seed);
}

MCEstimate mc_fraction_serial(const std::vector<double>& weights, std::uint64_t samples,
                              std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("mc_fraction_serial: needs at least one sample");
    }
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        if (form_positive(weights, seed, s)) ++hits;
    }
    return finish(hits, samples, seed);
}

MCEstimate mc_fraction(const Spectrum& spectrum, std::uint64_t samples, std::uint64_t seed) {
    return mc_fraction(diagonal_weights(spectrum), samples, seed);
}

MCEstimate mc_fraction(const FloatSpectrum& spectrum, std::uint64_t samples, std::uint64_t seed) {
    return mc_fraction(diagonal_weights(spectrum), samples, seed);
}

}  // namespace qvol
