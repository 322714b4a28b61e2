#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qvol/partition.hpp"
#include "qvol/poly.hpp"
#include "qvol/rational.hpp"

namespace qvol {

// Evaluation point for symmetric polynomials; length is the arity.
using EvalPoint = std::vector<Rational>;

namespace detail {

template <typename T>
bool is_zero_value(const T& v) {
    if constexpr (std::is_floating_point_v<T>) {
        return v == T(0);
    } else {
        return v.is_zero();
    }
}

// Determinant of a dense matrix, destroying its argument.
// Exact scalars: fraction-free (Bareiss) elimination with row swaps — every
// division is exact, so the result carries no spurious denominators.
// Floating point: plain elimination with partial pivoting.
template <typename T>
T determinant(std::vector<std::vector<T>> m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    int sign = 1;

    if constexpr (std::is_floating_point_v<T>) {
        T det(1);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (std::abs(m[r][k]) > std::abs(m[piv][k])) piv = r;
            }
            if (m[piv][k] == T(0)) return T(0);
            if (piv != k) {
                std::swap(m[piv], m[k]);
                sign = -sign;
            }
            det *= m[k][k];
            for (std::size_t i = k + 1; i < n; ++i) {
                const T f = m[i][k] / m[k][k];
                for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            }
        }
        return sign < 0 ? -det : det;
    } else {
        T prev(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (is_zero_value(m[k][k])) {
                std::size_t piv = k;
                for (std::size_t r = k + 1; r < n; ++r) {
                    if (!is_zero_value(m[r][k])) {
                        piv = r;
                        break;
                    }
                }
                if (piv == k) return T(0);
                std::swap(m[piv], m[k]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = T(0);
            }
            prev = m[k][k];
        }
        return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
    }
}

}  // namespace detail

// Complete homogeneous symmetric values h_0..h_max at the given point,
// by the one-variable-at-a-time recurrence: O(arity * max) operations.
template <typename T>
std::vector<T> homogeneous_values(const std::vector<T>& point, unsigned max_degree) {
    std::vector<T> h(max_degree + 1, T(0));
    h[0] = T(1);
    for (const T& x : point) {
        for (unsigned k = 1; k <= max_degree; ++k) {
            h[k] += x * h[k - 1];
        }
    }
    return h;
}

// Schur values at a fixed point via the Jacobi–Trudi determinant
// det(h_{shape_i - i + j}). The complete homogeneous table is computed once,
// so each shape costs a single small determinant. Well-defined at repeated
// coordinates. Immutable after construction; safe to share across threads.
template <typename T>
class SchurTable {
public:
    // max_part: largest part that will ever be requested (table is sized
    // for shapes with at most point.size() parts, each <= max_part).
    SchurTable(std::vector<T> point, unsigned max_part)
        : point_(std::move(point)),
          h_(homogeneous_values(point_, max_part + static_cast<unsigned>(point_.size()))) {}

    std::size_t arity() const { return point_.size(); }

    T value(const Partition& shape) const {
        const std::size_t m = shape.count();
        if (m > point_.size()) {
            throw std::invalid_argument("SchurTable: shape has more parts than variables");
        }
        if (m == 0) return T(1);
        std::vector<std::vector<T>> jt(m, std::vector<T>(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const long k = static_cast<long>(shape.part(i)) - static_cast<long>(i) +
                               static_cast<long>(j);
                jt[i][j] = homogeneous(k);
            }
        }
        return detail::determinant(std::move(jt));
    }

    T homogeneous(long degree) const {
        if (degree < 0) return T(0);
        if (static_cast<std::size_t>(degree) >= h_.size()) {
            throw std::logic_error("SchurTable: degree beyond the precomputed table");
        }
        return h_[static_cast<std::size_t>(degree)];
    }

private:
    std::vector<T> point_;
    std::vector<T> h_;
};

// Vandermonde product over i < j of (x_i - x_j); 1 for arity <= 1.
Rational vandermonde(const EvalPoint& point);

// Schur value as the ratio of alternants. Requires pairwise distinct
// coordinates (std::domain_error otherwise, directing to the Jacobi–Trudi
// path) and at most point.size() parts.
Rational schur_bialternant(const Partition& shape, const EvalPoint& point);

// Schur value via Jacobi–Trudi; tolerates repeated coordinates.
Rational schur_jacobi_trudi(const Partition& shape, const EvalPoint& point);
double schur_jacobi_trudi(const Partition& shape, const std::vector<double>& point);

// Full monomial expansion by enumerating semistandard tableaux of the shape
// with entries 1..arity; variables are named x1..x<arity>. Exponential in
// the shape: throws std::length_error beyond tableau_cap tableaux.
SparsePoly schur_expand(const Partition& shape, std::size_t arity,
                        std::size_t tableau_cap = 1'000'000);

}  // namespace qvol
