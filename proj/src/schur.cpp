#include "qvol/schur.hpp"

#include <string>

namespace qvol {

Rational vandermonde(const EvalPoint& point) {
    Rational prod(1);
    for (std::size_t i = 0; i < point.size(); ++i) {
        for (std::size_t j = i + 1; j < point.size(); ++j) {
            prod *= point[i] - point[j];
        }
    }
    return prod;
}

Rational schur_bialternant(const Partition& shape, const EvalPoint& point) {
    const std::size_t n = point.size();
    if (shape.count() > n) {
        throw std::invalid_argument("schur_bialternant: shape has more parts than variables");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (point[i] == point[j]) {
                throw std::domain_error(
                    "schur_bialternant: repeated coordinates; use schur_jacobi_trudi");
            }
        }
    }
    if (n == 0) return Rational(1);  // shape is empty here

    // Rows indexed by shape entries, columns by coordinates:
    // entry = x_l ^ (shape_j + n - 1 - j).
    std::vector<std::vector<Rational>> alt(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const long e = static_cast<long>(shape.part(j)) + static_cast<long>(n - 1 - j);
        for (std::size_t l = 0; l < n; ++l) {
            alt[j][l] = point[l].pow(e);
        }
    }
    return detail::determinant(std::move(alt)) / vandermonde(point);
}

Rational schur_jacobi_trudi(const Partition& shape, const EvalPoint& point) {
    return SchurTable<Rational>(point, shape.largest()).value(shape);
}

double schur_jacobi_trudi(const Partition& shape, const std::vector<double>& point) {
    return SchurTable<double>(point, shape.largest()).value(shape);
}

namespace {

// Backtracking over cells in row-major order. Entries are weakly increasing
// along rows and strictly increasing down columns.
struct TableauEnumerator {
    const std::vector<unsigned>& rows;
    std::size_t arity;
    std::size_t cap;
    std::size_t count = 0;
    std::vector<std::vector<unsigned>> fill;
    std::vector<unsigned> content;  // exponent of each variable
    SparsePoly* out;

    void run(std::size_t r, std::size_t c) {
        if (r == rows.size()) {
            if (++count > cap) {
                throw std::length_error("schur_expand: tableau cap exceeded");
            }
            out->add_term(content, Rational(1));
            return;
        }
        if (c == rows[r]) {
            run(r + 1, 0);
            return;
        }
        unsigned lo = 1;
        if (c > 0) lo = fill[r][c - 1];
        if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
        for (unsigned v = lo; v <= arity; ++v) {
            fill[r][c] = v;
            ++content[v - 1];
            run(r, c + 1);
            --content[v - 1];
        }
    }
};

}  // namespace

SparsePoly schur_expand(const Partition& shape, std::size_t arity, std::size_t tableau_cap) {
    if (shape.count() > arity) {
        throw std::invalid_argument("schur_expand: shape has more parts than variables");
    }
    std::vector<std::string> vars;
    vars.reserve(arity);
    for (std::size_t i = 1; i <= arity; ++i) vars.push_back("x" + std::to_string(i));

    SparsePoly poly(vars);
    if (shape.empty()) {
        return SparsePoly::constant(std::move(vars), Rational(1));
    }

    TableauEnumerator en{shape.parts(), arity, tableau_cap,
                         0,
                         {},
                         std::vector<unsigned>(arity, 0),
                         &poly};
    en.fill.reserve(shape.count());
    for (unsigned len : shape.parts()) en.fill.emplace_back(len, 0u);
    en.run(0, 0);
    return poly;
}

}  // namespace qvol
