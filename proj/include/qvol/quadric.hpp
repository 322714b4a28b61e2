#pragma once

#include <vector>

#include "qvol/poly.hpp"
#include "qvol/rational.hpp"

namespace qvol {

using RationalTuple = std::vector<Rational>;

// Eigenvalue data of the defining Hermitian form: positive eigenvalues,
// magnitudes of the negative ones, and the number of zeros. The matrix size
// is positives + negatives + zeros = n + 1.
struct Spectrum {
    RationalTuple positives;  // each > 0
    RationalTuple negatives;  // magnitudes, each > 0
    unsigned zeros = 0;

    Spectrum(RationalTuple pos, RationalTuple neg, unsigned r);

    unsigned dimension() const;  // n = p + q + r - 1
};

// Exact volume of the quadric domain as a fraction of vol(CP^n) = pi^n / n!.
struct ExactVolume {
    Rational ratio;         // in [0, 1]
    unsigned dimension = 0; // n

    ExactVolume(Rational r, unsigned n);

    // volume = ratio_over_factorial() * pi^n
    Rational ratio_over_factorial() const;
    double decimal() const;
};

// Normalizing product over all pairs (x_j + y_k); 1 on empty tuples.
Rational denominator_value(const RationalTuple& x, const RationalTuple& y);

// Numerator: sum over partitions in the box with full first row of
// schur(shape, x) * schur(box complement of the conjugate, y).
// 0 when x is empty, 1 when y is empty (and x is not).
// Production path: chunks the partition sum across threads; the exactness of
// rational addition makes the result independent of the split.
Rational numerator_value(const RationalTuple& x, const RationalTuple& y);

// Reference single-threaded implementation of the same sum.
Rational numerator_value_serial(const RationalTuple& x, const RationalTuple& y);

// Partial-fraction form: sum over l of
//   x_l^{p+q-1} / prod_{k != l}(x_l - x_k) * denominator(x without l, y).
// Requires a nonempty x with pairwise distinct entries (std::domain_error
// otherwise, directing to numerator_value).
Rational numerator_by_partial_fractions(const RationalTuple& x, const RationalTuple& y);

// Tuple with the ell-th (1-based) entry removed.
RationalTuple entry_drop(const RationalTuple& t, std::size_t ell);

// The factor multiplying the substituted term in the volume recursion:
//   y_q^{-(pq - 2p - q + 1)} * prod_j (y_q + x_j)^{q-1} * prod_{k<q} (y_q - y_k)^{p-1}.
// Requires nonempty y with positive entries.
Rational recursion_weight(const RationalTuple& x, const RationalTuple& y);

// alpha_j = x_j / (y_q + x_j).
RationalTuple alpha_substitution(const RationalTuple& x, const RationalTuple& y);

// beta_k = y_k / (y_q - y_k) for k < q; requires strictly increasing y.
RationalTuple beta_substitution(const RationalTuple& y);

// Right-hand side of the recursion satisfied by the numerator:
//   prod_j(x_j + y_q) * S(x, y[q]) - weight * S(alpha, beta).
// Requires positive inputs and strictly increasing y; equals
// numerator_value(x, y) identically.
Rational recursion_rhs(const RationalTuple& x, const RationalTuple& y);

// S(x,y) + S(y,x) - D(x,y); zero identically for (p,q) != (0,0).
Rational duality_gap(const RationalTuple& x, const RationalTuple& y);

// The main closed form: exact volume ratio of the quadric domain.
ExactVolume volume(const Spectrum& spectrum);

// Same ratio evaluated in double precision (for the numerical spectrum path).
double volume_ratio(const std::vector<double>& positives, const std::vector<double>& negatives);

// Symbolic expansions in variables x1..xp, y1..yq (for the coefficientwise
// comparison of numerator against denominator at small p, q).
SparsePoly numerator_polynomial(unsigned p, unsigned q);
SparsePoly denominator_polynomial(unsigned p, unsigned q);

// True iff every coefficient of the numerator is at most the coefficient of
// the same monomial in the denominator.
bool coefficients_dominated(const SparsePoly& numer, const SparsePoly& denom);

}  // namespace qvol
