#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qvol/spectral.hpp"

using qvol::Complex;
using qvol::HermitianMatrix;

namespace {

HermitianMatrix diagonal(std::vector<double> d) {
    const std::size_t n = d.size();
    std::vector<Complex> e(n * n, Complex(0, 0));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Complex(d[i], 0);
    return HermitianMatrix(n, std::move(e));
}

HermitianMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = Complex(g(rng), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v(g(rng), g(rng));
            e[i * n + j] = v;
            e[j * n + i] = std::conj(v);
        }
    }
    return HermitianMatrix(n, std::move(e));
}

// Product of complex Householder-type reflections I - 2 v v*.
std::vector<Complex> random_unitary(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> u(n * n, Complex(0, 0));
    for (std::size_t i = 0; i < n; ++i) u[i * n + i] = Complex(1, 0);
    for (int rep = 0; rep < 3; ++rep) {
        std::vector<Complex> v(n);
        double norm2 = 0.0;
        for (auto& z : v) {
            z = Complex(g(rng), g(rng));
            norm2 += std::norm(z);
        }
        for (auto& z : v) z /= std::sqrt(norm2);
        std::vector<Complex> next(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Complex sum = u[i * n + j];
                for (std::size_t k = 0; k < n; ++k) {
                    sum -= 2.0 * v[i] * std::conj(v[k]) * u[k * n + j];
                }
                next[i * n + j] = sum;
            }
        }
        u = std::move(next);
    }
    return u;
}

}  // namespace

TEST_CASE("diagonal matrices") {
    const auto eigs = qvol::eigenvalues_hermitian(diagonal({1.0, -2.0, 0.0}));
    REQUIRE(eigs.size() == 3);
    CHECK(eigs[0] == doctest::Approx(-2.0));
    CHECK(eigs[1] == doctest::Approx(0.0));
    CHECK(eigs[2] == doctest::Approx(1.0));
}

TEST_CASE("2x2 closed forms") {
    const HermitianMatrix flip(2, {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)});
    auto eigs = qvol::eigenvalues_hermitian(flip);
    CHECK(eigs[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eigs[1] == doctest::Approx(1.0).epsilon(1e-12));

    const HermitianMatrix complex_offdiag(
        2, {Complex(2, 0), Complex(0, 1), Complex(0, -1), Complex(2, 0)});
    eigs = qvol::eigenvalues_hermitian(complex_offdiag);
    CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eigs[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("non-Hermitian input is rejected") {
    CHECK_THROWS_AS(HermitianMatrix(2, {Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(HermitianMatrix(2, {Complex(1, 1), Complex(0, 0), Complex(0, 0), Complex(1, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(HermitianMatrix(2, {Complex(1, 0)}), std::invalid_argument);
}

TEST_CASE("trace and frobenius checks on random matrices") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
        const HermitianMatrix a = random_hermitian(rng, n);
        const auto eigs = qvol::eigenvalues_hermitian(a);

        double sum = 0.0, sum_sq = 0.0;
        for (double v : eigs) {
            sum += v;
            sum_sq += v * v;
        }
        const double scale = std::max(1.0, a.frobenius_norm());
        CHECK(std::abs(sum - a.trace()) <= 1e-8 * scale);
        CHECK(std::abs(std::sqrt(sum_sq) - a.frobenius_norm()) <= 1e-8 * scale);
    }
}

TEST_CASE("eigenvalues are unitary-similarity invariants") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const HermitianMatrix a = random_hermitian(rng, n);
        const auto u = random_unitary(rng, n);

        // b = u a u*
        std::vector<Complex> tmp(n * n, Complex(0, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) tmp[i * n + j] += u[i * n + k] * a(k, j);
            }
        }
        std::vector<Complex> b(n * n, Complex(0, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    b[i * n + j] += tmp[i * n + k] * std::conj(u[j * n + k]);
                }
            }
        }

        const auto ea = qvol::eigenvalues_hermitian(a);
        const auto eb = qvol::eigenvalues_hermitian(HermitianMatrix(n, std::move(b)));
        const double scale = std::max(1.0, a.frobenius_norm());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(ea[i] - eb[i]) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("classification") {
    const auto fs = qvol::classify({-1.0, 1e-14, 2.0}, 1e-9);
    CHECK(fs.positives == 1);
    CHECK(fs.negatives == 1);
    CHECK(fs.zeros == 1);
    CHECK(fs.dimension() == 2);

    const auto all_pos = qvol::classify({3.0, 4.0}, 1e-9);
    CHECK(all_pos.positives == 2);
    CHECK(all_pos.negatives == 0);
    CHECK(all_pos.zeros == 0);

    const auto single_neg = qvol::classify({-5.0}, 1e-9);
    CHECK(single_neg.positives == 0);
    CHECK(single_neg.negatives == 1);
    CHECK(single_neg.zeros == 0);

    CHECK_THROWS_AS(qvol::classify({1.0}, -1.0), std::invalid_argument);
}

TEST_CASE("matrix path reproduces the exact ratio") {
    const auto fs = qvol::classify(qvol::eigenvalues_hermitian(diagonal({1.0, 2.0, -3.0})), 1e-9);
    CHECK(qvol::volume_ratio(fs) == doctest::Approx(11.0 / 20.0).epsilon(1e-12));

    const auto sym = qvol::classify(qvol::eigenvalues_hermitian(diagonal({1.0, -1.0})), 1e-9);
    CHECK(qvol::volume_ratio(sym) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(qvol::volume_decimal(sym) == doctest::Approx(M_PI / 2).epsilon(1e-12));

    const auto eye = qvol::classify(qvol::eigenvalues_hermitian(diagonal({1.0, 1.0, 1.0})), 1e-9);
    CHECK(qvol::volume_ratio(eye) == 1.0);
}
