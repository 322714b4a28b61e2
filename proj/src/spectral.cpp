#include "qvol/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qvol/quadric.hpp"

namespace qvol {

HermitianMatrix::HermitianMatrix(std::size_t size, std::vector<Complex> row_major_entries)
    : size_(size), entries_(std::move(row_major_entries)) {
    if (size_ == 0) {
        throw std::invalid_argument("HermitianMatrix: size must be at least 1");
    }
    if (entries_.size() != size_ * size_) {
        throw std::invalid_argument("HermitianMatrix: entry count does not match size");
    }
    double max_abs = 0.0;
    for (const Complex& e : entries_) max_abs = std::max(max_abs, std::abs(e));
    const double tol = 1e-12 * std::max(max_abs, 1.0);
    for (std::size_t j = 0; j < size_; ++j) {
        for (std::size_t k = j; k < size_; ++k) {
            const Complex d = entries_[j * size_ + k] - std::conj(entries_[k * size_ + j]);
            if (std::abs(d) > tol) {
                throw std::invalid_argument("HermitianMatrix: input is not Hermitian");
            }
        }
    }
    // Symmetrize so the solver sees an exactly Hermitian matrix.
    for (std::size_t j = 0; j < size_; ++j) {
        entries_[j * size_ + j] = Complex(entries_[j * size_ + j].real(), 0.0);
        for (std::size_t k = j + 1; k < size_; ++k) {
            const Complex m = 0.5 * (entries_[j * size_ + k] + std::conj(entries_[k * size_ + j]));
            entries_[j * size_ + k] = m;
            entries_[k * size_ + j] = std::conj(m);
        }
    }
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (std::size_t j = 0; j < size_; ++j) t += (*this)(j, j).real();
    return t;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

std::vector<double> eigenvalues_hermitian(const HermitianMatrix& input) {
    const std::size_t n = input.size();
    std::vector<Complex> a(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) a[j * n + k] = input(j, k);
    }
    const auto at = [&](std::size_t j, std::size_t k) -> Complex& { return a[j * n + k]; };

    const double frob = input.frobenius_norm();
    if (n > 1 && frob > 0.0) {
        const double stop = 1e-14 * frob;
        for (int sweep = 0; sweep < 100; ++sweep) {
            double off = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) off += 2.0 * std::norm(at(j, k));
            }
            if (std::sqrt(off) <= stop) break;

            for (std::size_t p = 0; p < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double m = std::abs(at(p, q));
                    if (m <= 1e-18 * frob) continue;
                    const Complex phase = at(p, q) / m;
                    const double app = at(p, p).real();
                    const double aqq = at(q, q).real();

                    // Annihilate a(p,q): t solves t^2 - 2*tau*t - 1 = 0,
                    // smaller-magnitude root for stability.
                    const double tau = (aqq - app) / (2.0 * m);
                    const double t =
                        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const Complex sigma = s * phase;

                    at(p, p) = Complex(c * c * app + s * s * aqq - 2.0 * c * s * m, 0.0);
                    at(q, q) = Complex(s * s * app + c * c * aqq + 2.0 * c * s * m, 0.0);
                    at(p, q) = Complex(0.0, 0.0);
                    at(q, p) = Complex(0.0, 0.0);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (k == p || k == q) continue;
                        const Complex akp = at(k, p);
                        const Complex akq = at(k, q);
                        at(k, p) = c * akp - std::conj(sigma) * akq;
                        at(p, k) = std::conj(at(k, p));
                        at(k, q) = sigma * akp + c * akq;
                        at(q, k) = std::conj(at(k, q));
                    }
                }
            }
        }
    }

    std::vector<double> eigs(n);
    for (std::size_t j = 0; j < n; ++j) eigs[j] = at(j, j).real();
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

FloatSpectrum classify(std::vector<double> eigenvalues, double zero_tolerance) {
    if (zero_tolerance < 0.0) {
        throw std::invalid_argument("classify: tolerance must be nonnegative");
    }
    std::sort(eigenvalues.begin(), eigenvalues.end());
    double scale = 1.0;
    for (double v : eigenvalues) scale = std::max(scale, std::abs(v));
    const double cut = zero_tolerance * scale;

    FloatSpectrum out;
    out.zero_tolerance = zero_tolerance;
    for (double v : eigenvalues) {
        if (std::abs(v) <= cut) {
            ++out.zeros;
        } else if (v > 0.0) {
            ++out.positives;
        } else {
            ++out.negatives;
        }
    }
    out.eigenvalues = std::move(eigenvalues);
    return out;
}

double volume_ratio(const FloatSpectrum& spectrum) {
    double max_abs = 1.0;
    for (double v : spectrum.eigenvalues) max_abs = std::max(max_abs, std::abs(v));
    const double cut = spectrum.zero_tolerance * max_abs;

    std::vector<double> pos, neg;
    for (double v : spectrum.eigenvalues) {
        if (std::abs(v) <= cut) continue;
        if (v > 0.0) {
            pos.push_back(v);
        } else {
            neg.push_back(-v);
        }
    }
    return volume_ratio(pos, neg);
}

double volume_decimal(const FloatSpectrum& spectrum) {
    double scale = 1.0;
    for (unsigned k = 1; k <= spectrum.dimension(); ++k) {
        scale *= M_PI / static_cast<double>(k);
    }
    return volume_ratio(spectrum) * scale;
}

}  // namespace qvol
