#include "qvol/quadric.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "qvol/partition.hpp"
#include "qvol/schur.hpp"

namespace qvol {

namespace {

void require_positive(const RationalTuple& t, const char* what) {
    for (const Rational& v : t) {
        if (v.sign() <= 0) {
            throw std::invalid_argument(std::string(what) + ": entries must be positive");
        }
    }
}

void require_strictly_increasing(const RationalTuple& y, const char* what) {
    for (std::size_t k = 1; k < y.size(); ++k) {
        if (!(y[k - 1] < y[k])) {
            throw std::invalid_argument(std::string(what) + ": tuple must be strictly increasing");
        }
    }
}

template <typename T>
T pair_sum_product(const std::vector<T>& x, const std::vector<T>& y) {
    T prod(1);
    for (const T& yk : y) {
        for (const T& xj : x) {
            prod *= xj + yk;
        }
    }
    return prod;
}

// Shared kernel of the partition sum; exact for T = Rational, approximate
// for T = double (the numerical spectrum path).
template <typename T>
T numerator_sum(const std::vector<T>& x, const std::vector<T>& y, bool parallel) {
    const unsigned p = static_cast<unsigned>(x.size());
    const unsigned q = static_cast<unsigned>(y.size());
    if (p == 0) return T(0);
    if (q == 0) return T(1);

    const BoxBound box{p, q};
    const std::vector<Partition> shapes = enumerate_box_full_row(box);
    const SchurTable<T> tx(x, q);
    const SchurTable<T> ty(y, p);

    const auto term = [&](const Partition& shape) {
        return tx.value(shape) * ty.value(conjugate_complement(shape, box));
    };

    if (!parallel || shapes.size() < 16) {
        T sum(0);
        for (const Partition& shape : shapes) sum += term(shape);
        return sum;
    }

    std::vector<T> partial(static_cast<std::size_t>(omp_get_max_threads()), T(0));
#pragma omp parallel
    {
        T local(0);
#pragma omp for schedule(static) nowait
        for (long i = 0; i < static_cast<long>(shapes.size()); ++i) {
            local += term(shapes[static_cast<std::size_t>(i)]);
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
    }
    T sum(0);
    for (const T& v : partial) sum += v;
    return sum;
}

}  // namespace

Spectrum::Spectrum(RationalTuple pos, RationalTuple neg, unsigned r)
    : positives(std::move(pos)), negatives(std::move(neg)), zeros(r) {
    require_positive(positives, "Spectrum.positives");
    require_positive(negatives, "Spectrum.negatives");
    if (positives.size() + negatives.size() + zeros == 0) {
        throw std::invalid_argument("Spectrum: needs at least one eigenvalue");
    }
}

unsigned Spectrum::dimension() const {
    return static_cast<unsigned>(positives.size() + negatives.size()) + zeros - 1;
}

ExactVolume::ExactVolume(Rational r, unsigned n) : ratio(std::move(r)), dimension(n) {
    if (ratio.sign() < 0 || ratio > Rational(1)) {
        throw std::logic_error("ExactVolume: ratio outside [0, 1]");
    }
}

Rational ExactVolume::ratio_over_factorial() const {
    return ratio / Rational(factorial(dimension), 1);
}

double ExactVolume::decimal() const {
    double scale = 1.0;
    for (unsigned k = 1; k <= dimension; ++k) {
        scale *= M_PI / static_cast<double>(k);
    }
    return ratio.to_double() * scale;
}

Rational denominator_value(const RationalTuple& x, const RationalTuple& y) {
    return pair_sum_product(x, y);
}

Rational numerator_value(const RationalTuple& x, const RationalTuple& y) {
    return numerator_sum(x, y, /*parallel=*/true);
}

Rational numerator_value_serial(const RationalTuple& x, const RationalTuple& y) {
    return numerator_sum(x, y, /*parallel=*/false);
}

Rational numerator_by_partial_fractions(const RationalTuple& x, const RationalTuple& y) {
    const std::size_t p = x.size();
    if (p == 0) {
        throw std::invalid_argument("numerator_by_partial_fractions: x must be nonempty");
    }
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
            if (x[i] == x[j]) {
                throw std::domain_error(
                    "numerator_by_partial_fractions: repeated x entries; use numerator_value");
            }
        }
    }
    const long power = static_cast<long>(p + y.size()) - 1;
    Rational sum(0);
    for (std::size_t l = 0; l < p; ++l) {
        Rational denom(1);
        for (std::size_t k = 0; k < p; ++k) {
            if (k != l) denom *= x[l] - x[k];
        }
        sum += x[l].pow(power) / denom * denominator_value(entry_drop(x, l + 1), y);
    }
    return sum;
}

RationalTuple entry_drop(const RationalTuple& t, std::size_t ell) {
    if (ell < 1 || ell > t.size()) {
        throw std::out_of_range("entry_drop: index out of range");
    }
    RationalTuple out;
    out.reserve(t.size() - 1);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i != ell - 1) out.push_back(t[i]);
    }
    return out;
}

Rational recursion_weight(const RationalTuple& x, const RationalTuple& y) {
    if (y.empty()) {
        throw std::invalid_argument("recursion_weight: y must be nonempty");
    }
    require_positive(y, "recursion_weight");
    const long p = static_cast<long>(x.size());
    const long q = static_cast<long>(y.size());
    const Rational& yq = y.back();

    Rational w = yq.pow(-(p * q - 2 * p - q + 1));
    for (const Rational& xj : x) {
        w *= (yq + xj).pow(q - 1);
    }
    for (long k = 0; k < q - 1; ++k) {
        const Rational diff = yq - y[static_cast<std::size_t>(k)];
        if (diff.is_zero() && p - 1 < 0) {
            throw std::domain_error("recursion_weight: tied y with negative exponent");
        }
        w *= diff.pow(p - 1);
    }
    return w;
}

RationalTuple alpha_substitution(const RationalTuple& x, const RationalTuple& y) {
    if (y.empty()) {
        throw std::invalid_argument("alpha_substitution: y must be nonempty");
    }
    const Rational& yq = y.back();
    RationalTuple out;
    out.reserve(x.size());
    for (const Rational& xj : x) {
        out.push_back(xj / (yq + xj));
    }
    return out;
}

RationalTuple beta_substitution(const RationalTuple& y) {
    if (y.empty()) {
        throw std::invalid_argument("beta_substitution: y must be nonempty");
    }
    require_strictly_increasing(y, "beta_substitution");
    const Rational& yq = y.back();
    RationalTuple out;
    out.reserve(y.size() - 1);
    for (std::size_t k = 0; k + 1 < y.size(); ++k) {
        out.push_back(y[k] / (yq - y[k]));
    }
    return out;
}

Rational recursion_rhs(const RationalTuple& x, const RationalTuple& y) {
    if (y.empty()) {
        throw std::invalid_argument("recursion_rhs: y must be nonempty");
    }
    require_positive(x, "recursion_rhs");
    require_positive(y, "recursion_rhs");
    require_strictly_increasing(y, "recursion_rhs");

    const Rational& yq = y.back();
    Rational lead(1);
    for (const Rational& xj : x) lead *= xj + yq;

    const RationalTuple y_head = entry_drop(y, y.size());
    return lead * numerator_value(x, y_head) -
           recursion_weight(x, y) *
               numerator_value(alpha_substitution(x, y), beta_substitution(y));
}

Rational duality_gap(const RationalTuple& x, const RationalTuple& y) {
    if (x.empty() && y.empty()) {
        throw std::invalid_argument("duality_gap: undefined for two empty tuples");
    }
    return numerator_value(x, y) + numerator_value(y, x) - denominator_value(x, y);
}

ExactVolume volume(const Spectrum& spectrum) {
    const Rational ratio = numerator_value(spectrum.positives, spectrum.negatives) /
                           denominator_value(spectrum.positives, spectrum.negatives);
    return ExactVolume(ratio, spectrum.dimension());
}

double volume_ratio(const std::vector<double>& positives, const std::vector<double>& negatives) {
    if (positives.empty()) return 0.0;
    if (negatives.empty()) return 1.0;
    return numerator_sum(positives, negatives, /*parallel=*/false) /
           pair_sum_product(positives, negatives);
}

namespace {

std::vector<std::string> xy_variables(unsigned p, unsigned q) {
    std::vector<std::string> vars;
    vars.reserve(p + q);
    for (unsigned j = 1; j <= p; ++j) vars.push_back("x" + std::to_string(j));
    for (unsigned k = 1; k <= q; ++k) vars.push_back("y" + std::to_string(k));
    return vars;
}

// Re-embeds a poly in the first (or last) block of the joint x/y variable list.
void accumulate_product(SparsePoly& acc, const SparsePoly& in_x, const SparsePoly& in_y,
                        unsigned p, unsigned q) {
    for (const Monomial& mx : in_x.monomials()) {
        for (const Monomial& my : in_y.monomials()) {
            std::vector<unsigned> e(p + q, 0);
            for (unsigned j = 0; j < p; ++j) e[j] = mx.exponents[j];
            for (unsigned k = 0; k < q; ++k) e[p + k] = my.exponents[k];
            acc.add_term(e, mx.coefficient * my.coefficient);
        }
    }
}

}  // namespace

SparsePoly numerator_polynomial(unsigned p, unsigned q) {
    SparsePoly acc(xy_variables(p, q));
    const BoxBound box{p, q};
    for (const Partition& shape : enumerate_box_full_row(box)) {
        accumulate_product(acc, schur_expand(shape, p),
                           schur_expand(conjugate_complement(shape, box), q), p, q);
    }
    return acc;
}

SparsePoly denominator_polynomial(unsigned p, unsigned q) {
    const auto vars = xy_variables(p, q);
    SparsePoly acc = SparsePoly::constant(vars, Rational(1));
    for (unsigned k = 0; k < q; ++k) {
        for (unsigned j = 0; j < p; ++j) {
            acc = acc * (SparsePoly::variable(vars, j) + SparsePoly::variable(vars, p + k));
        }
    }
    return acc;
}

bool coefficients_dominated(const SparsePoly& numer, const SparsePoly& denom) {
    for (const Monomial& m : numer.monomials()) {
        if (m.coefficient > denom.coefficient(m.exponents)) return false;
    }
    return true;
}

}  // namespace qvol
