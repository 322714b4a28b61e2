#include "qvol/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "qvol/partition.hpp"
#include "qvol/quadric.hpp"
#include "qvol/schur.hpp"

namespace qvol {

namespace {

using Rng = std::mt19937_64;

Rational random_positive_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(1, 24);
    std::uniform_int_distribution<long> den(1, 8);
    return Rational(num(rng), den(rng));
}

RationalTuple random_tuple(Rng& rng, unsigned len) {
    RationalTuple t;
    t.reserve(len);
    for (unsigned i = 0; i < len; ++i) t.push_back(random_positive_rational(rng));
    return t;
}

RationalTuple random_strictly_increasing(Rng& rng, unsigned len) {
    std::set<Rational> vals;
    while (vals.size() < len) vals.insert(random_positive_rational(rng));
    return RationalTuple(vals.begin(), vals.end());
}

RationalTuple random_distinct(Rng& rng, unsigned len) {
    return random_strictly_increasing(rng, len);  // distinctness is all we need
}

std::string describe(unsigned p, unsigned q, const RationalTuple& x, const RationalTuple& y) {
    std::ostringstream os;
    os << "p=" << p << " q=" << q << " x=(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ") y=(";
    for (std::size_t i = 0; i < y.size(); ++i) os << (i ? "," : "") << y[i];
    os << ")";
    return os.str();
}

class FamilyRecorder {
public:
    explicit FamilyRecorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& context) {
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
            if (result_.first_counterexample.empty()) result_.first_counterexample = context;
        }
    }

    FamilyResult take() { return std::move(result_); }

private:
    FamilyResult result_;
};

}  // namespace

SuiteReport run_identity_suite(unsigned pmax, unsigned qmax, unsigned trials, std::uint64_t seed,
                               bool inject_fault) {
    SuiteReport report;
    Rng rng(seed);

    {
        FamilyRecorder fam("duality");
        bool fault_pending = inject_fault;
        for (unsigned p = 0; p <= pmax; ++p) {
            for (unsigned q = 0; q <= qmax; ++q) {
                if (p + q == 0) continue;
                for (unsigned t = 0; t < trials; ++t) {
                    const auto x = random_tuple(rng, p);
                    const auto y = random_tuple(rng, q);
                    Rational gap = duality_gap(x, y);
                    if (fault_pending) {
                        gap += Rational(1);
                        fault_pending = false;
                    }
                    fam.check(gap.is_zero(), describe(p, q, x, y));
                }
            }
        }
        report.families.push_back(fam.take());
    }

    {
        FamilyRecorder fam("recursion");
        for (unsigned p = 0; p <= pmax; ++p) {
            for (unsigned q = 1; q <= qmax; ++q) {
                for (unsigned t = 0; t < trials; ++t) {
                    const auto x = random_tuple(rng, p);
                    const auto y = random_strictly_increasing(rng, q);
                    fam.check(recursion_rhs(x, y) == numerator_value(x, y), describe(p, q, x, y));
                }
            }
        }
        report.families.push_back(fam.take());
    }

    {
        FamilyRecorder fam("dual-cauchy");
        for (unsigned p = 0; p <= pmax; ++p) {
            for (unsigned q = 0; q <= qmax; ++q) {
                const BoxBound box{p, q};
                const auto shapes = enumerate_box(box);
                for (unsigned t = 0; t < trials; ++t) {
                    const auto x = random_tuple(rng, p);
                    const auto y = random_tuple(rng, q);
                    const SchurTable<Rational> tx(x, q);
                    const SchurTable<Rational> ty(y, p);
                    Rational sum(0);
                    for (const Partition& shape : shapes) {
                        sum += tx.value(shape) * ty.value(conjugate_complement(shape, box));
                    }
                    fam.check(sum == denominator_value(x, y), describe(p, q, x, y));
                }
            }
        }
        report.families.push_back(fam.take());
    }

    {
        FamilyRecorder fam("partial-fractions");
        for (unsigned p = 1; p <= pmax; ++p) {
            for (unsigned q = 0; q <= qmax; ++q) {
                for (unsigned t = 0; t < trials; ++t) {
                    const auto x = random_distinct(rng, p);
                    const auto y = random_tuple(rng, q);
                    fam.check(numerator_by_partial_fractions(x, y) == numerator_value(x, y),
                              describe(p, q, x, y));
                }
            }
        }
        report.families.push_back(fam.take());
    }

    {
        // D(x,y) = D(x, y without last) * prod_j (x_j + y_q)
        FamilyRecorder fam("denominator-split");
        for (unsigned p = 0; p <= pmax; ++p) {
            for (unsigned q = 1; q <= qmax; ++q) {
                for (unsigned t = 0; t < trials; ++t) {
                    const auto x = random_tuple(rng, p);
                    const auto y = random_tuple(rng, q);
                    Rational lead(1);
                    for (const Rational& xj : x) lead *= xj + y.back();
                    const Rational lhs = denominator_value(x, y);
                    const Rational rhs = denominator_value(x, entry_drop(y, q)) * lead;
                    fam.check(lhs == rhs, describe(p, q, x, y));
                }
            }
        }
        report.families.push_back(fam.take());
    }

    {
        // D(alpha, beta) = y_q^{p+q-1} / (prod_{k<q}(y_q - y_k) * prod_j(x_j + y_q))
        //                  * D(x, y) / weight(x, y)
        FamilyRecorder fam("substitution-product");
        for (unsigned p = 0; p <= pmax; ++p) {
            for (unsigned q = 1; q <= qmax; ++q) {
                for (unsigned t = 0; t < trials; ++t) {
                    const auto x = random_tuple(rng, p);
                    const auto y = random_strictly_increasing(rng, q);
                    const Rational& yq = y.back();
                    const Rational lhs =
                        denominator_value(alpha_substitution(x, y), beta_substitution(y));
                    Rational denom(1);
                    for (std::size_t k = 0; k + 1 < y.size(); ++k) denom *= yq - y[k];
                    for (const Rational& xj : x) denom *= xj + yq;
                    const Rational rhs = yq.pow(static_cast<long>(p + q) - 1) / denom *
                                         denominator_value(x, y) / recursion_weight(x, y);
                    fam.check(lhs == rhs, describe(p, q, x, y));
                }
            }
        }
        report.families.push_back(fam.take());
    }

    {
        FamilyRecorder fam("base-values");
        fam.check(numerator_value({}, {}) == Rational(0), "p=0 q=0");
        for (unsigned p = 1; p <= std::max(pmax, 1u); ++p) {
            fam.check(numerator_value(random_tuple(rng, p), {}) == Rational(1),
                      "p=" + std::to_string(p) + " q=0");
        }
        for (unsigned q = 1; q <= std::max(qmax, 1u); ++q) {
            fam.check(numerator_value({}, random_tuple(rng, q)) == Rational(0),
                      "p=0 q=" + std::to_string(q));
        }
        report.families.push_back(fam.take());
    }

    {
        FamilyRecorder fam("homogeneity");
        for (unsigned p = 0; p <= pmax; ++p) {
            for (unsigned q = 0; q <= qmax; ++q) {
                for (unsigned t = 0; t < trials; ++t) {
                    const auto x = random_tuple(rng, p);
                    const auto y = random_tuple(rng, q);
                    const Rational scale = random_positive_rational(rng);
                    RationalTuple sx = x, sy = y;
                    for (Rational& v : sx) v *= scale;
                    for (Rational& v : sy) v *= scale;
                    const Rational factor = scale.pow(static_cast<long>(p) * q);
                    const bool ok =
                        numerator_value(sx, sy) == factor * numerator_value(x, y) &&
                        denominator_value(sx, sy) == factor * denominator_value(x, y);
                    fam.check(ok, describe(p, q, x, y) + " scale=" + scale.to_string());
                }
            }
        }
        report.families.push_back(fam.take());
    }

    {
        FamilyRecorder fam("range");
        for (unsigned p = 0; p <= pmax; ++p) {
            for (unsigned q = 0; q <= qmax; ++q) {
                if (p + q == 0) continue;
                for (unsigned t = 0; t < trials; ++t) {
                    const auto x = random_tuple(rng, p);
                    const auto y = random_tuple(rng, q);
                    const Rational s = numerator_value(x, y);
                    const bool ok = s.sign() >= 0 && s <= denominator_value(x, y);
                    fam.check(ok, describe(p, q, x, y));
                }
            }
        }
        report.families.push_back(fam.take());
    }

    return report;
}

}  // namespace qvol
