#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvol/rational.hpp"

namespace qvol {

struct Monomial {
    std::vector<unsigned> exponents;  // one per variable
    Rational coefficient;             // nonzero for stored terms
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are keyed by exponent tuple; zero coefficients are never stored.
class SparsePoly {
public:
    explicit SparsePoly(std::vector<std::string> variables);

    static SparsePoly constant(std::vector<std::string> variables, const Rational& c);
    static SparsePoly variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * x^exps; removes the term if the total coefficient cancels.
    void add_term(const std::vector<unsigned>& exponents, const Rational& c);

    Rational coefficient(const std::vector<unsigned>& exponents) const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;

    bool operator==(const SparsePoly& o) const;

    Rational eval(const std::vector<Rational>& point) const;

    unsigned total_degree() const;  // 0 for the zero polynomial

    // Terms in descending lexicographic order on exponent tuples.
    std::vector<Monomial> monomials() const;

    // Human-readable form, e.g. "x1^2 + 2*x1*y1 + y1^2"; "0" when empty.
    std::string to_string() const;

private:
    void require_same_variables(const SparsePoly& o) const;

    std::vector<std::string> vars_;
    std::map<std::vector<unsigned>, Rational> terms_;
};

}  // namespace qvol
