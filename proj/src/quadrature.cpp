#include "qvol/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qvol {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (positive half; symmetric).
constexpr double kNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double kWeights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278,
};
constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct PanelEstimate {
    double integral;
    double error;
};

template <typename F>
PanelEstimate gauss_kronrod_15(const F& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double kronrod = 0.0;
    double gauss = 0.0;
    // Odd-index nodes (and the center) are shared with the embedded Gauss-7 rule.
    for (int i = 0; i < 8; ++i) {
        const double fp = f(mid + half * kNodes[i]);
        const double pair = i == 7 ? fp : fp + f(mid - half * kNodes[i]);
        kronrod += kWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return PanelEstimate{kronrod, std::abs(kronrod - gauss)};
}

template <typename F>
double refine(const F& f, double lo, double hi, double abstol, int depth) {
    const PanelEstimate e = gauss_kronrod_15(f, lo, hi);
    if (e.error <= abstol || depth >= 30) {
        return e.integral;
    }
    const double mid = 0.5 * (lo + hi);
    return refine(f, lo, mid, 0.5 * abstol, depth + 1) +
           refine(f, mid, hi, 0.5 * abstol, depth + 1);
}

template <typename F>
double integrate_adaptive(const F& f, double lo, double hi, double reltol, unsigned panels) {
    if (!(hi > lo)) return 0.0;
    if (panels == 0) panels = 1;
    double rough = 0.0;
    const double w = (hi - lo) / panels;
    for (unsigned i = 0; i < panels; ++i) {
        rough += gauss_kronrod_15(f, lo + i * w, lo + (i + 1) * w).integral;
    }
    const double abstol = std::max(reltol * std::abs(rough), 1e-300);
    double total = 0.0;
    for (unsigned i = 0; i < panels; ++i) {
        total += refine(f, lo + i * w, lo + (i + 1) * w, abstol / panels, 0);
    }
    return total;
}

// Iterated integral of (1 + sum t)^(-m) over the region
//   { t in R_+^(P+q) : sum a_j t_j - sum b_k t_(P+k) > -1 }.
// The first P coordinates are unbounded and widen the budget W; the next q-1
// spend it; the last constrained coordinate is integrated in closed form.
// Every adaptive axis is compactified through t = s / (1 - s).
class RegionIntegrand {
public:
    RegionIntegrand(std::vector<double> a, std::vector<double> b, int m, double reltol,
                    unsigned grid)
        : a_(std::move(a)), b_(std::move(b)), m_(m), reltol_(reltol), grid_(grid) {
        adaptive_levels_ = b_.empty() ? (a_.empty() ? 0 : static_cast<int>(a_.size()) - 1)
                                      : static_cast<int>(a_.size() + b_.size()) - 1;
    }

    double value() const {
        if (a_.empty() && b_.empty()) return 1.0;  // zero-dimensional integral
        return level(0, 0.0, 1.0);
    }

private:
    double level(int idx, double coord_sum, double budget) const {
        if (idx == adaptive_levels_) {
            if (b_.empty()) {
                // No constraint left: one unbounded coordinate in closed form.
                return std::pow(1.0 + coord_sum, 1.0 - m_) / (m_ - 1);
            }
            const double bound = budget / b_.back();
            return (std::pow(1.0 + coord_sum, 1.0 - m_) -
                    std::pow(1.0 + coord_sum + bound, 1.0 - m_)) /
                   (m_ - 1);
        }
        const std::size_t p_count = a_.size();
        double s_max = 1.0;
        double rate = 0.0;  // budget change per unit coordinate
        if (idx < static_cast<int>(p_count)) {
            rate = a_[static_cast<std::size_t>(idx)];
        } else {
            const double bk = b_[static_cast<std::size_t>(idx) - p_count];
            rate = -bk;
            const double bound = budget / bk;
            s_max = bound / (1.0 + bound);
        }
        const auto f = [&](double s) {
            const double one_minus = 1.0 - s;
            const double t = s / one_minus;
            return level(idx + 1, coord_sum + t, budget + rate * t) / (one_minus * one_minus);
        };
        return integrate_adaptive(f, 0.0, s_max, reltol_, grid_);
    }

    std::vector<double> a_;
    std::vector<double> b_;
    int m_;
    double reltol_;
    unsigned grid_;
    int adaptive_levels_;
};

}  // namespace

double volume_by_quadrature(const Spectrum& spectrum, unsigned grid) {
    const std::size_t p = spectrum.positives.size();
    const std::size_t q = spectrum.negatives.size();
    const unsigned r = spectrum.zeros;
    if (p < 1) {
        throw std::invalid_argument("volume_by_quadrature: needs a positive eigenvalue");
    }
    if (p + q - 1 + r > 4) {
        throw std::invalid_argument("volume_by_quadrature: dimension guard exceeded");
    }

    const double x1 = spectrum.positives[0].to_double();
    std::vector<double> a;
    a.reserve(p - 1);
    for (std::size_t j = 1; j < p; ++j) a.push_back(spectrum.positives[j].to_double() / x1);
    std::vector<double> b;
    b.reserve(q);
    for (std::size_t k = 0; k < q; ++k) b.push_back(spectrum.negatives[k].to_double() / x1);

    const RegionIntegrand region(std::move(a), std::move(b), static_cast<int>(p + q), 1e-8, grid);
    const unsigned n = spectrum.dimension();

    // The r flat coordinates integrate in closed form to the falling-factorial
    // factor below; what remains is the (p+q-1)-dimensional region integral.
    double scale = 1.0;
    for (unsigned i = 0; i < n; ++i) scale *= M_PI;
    for (unsigned i = 0; i < r; ++i) scale /= static_cast<double>(n - i);
    return scale * region.value();
}

double closed_form_fraction(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t p = x.size();
    if (p == 0) {
        throw std::invalid_argument("closed_form_fraction: x must be nonempty");
    }
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
            if (x[i] == x[j]) {
                throw std::domain_error("closed_form_fraction: x entries must be distinct");
            }
        }
    }
    const int power = static_cast<int>(p + y.size()) - 1;
    long double sum = 0.0L;
    for (std::size_t l = 0; l < p; ++l) {
        long double denom = 1.0L;
        for (std::size_t k = 0; k < p; ++k) {
            if (k != l) denom *= static_cast<long double>(x[l]) - static_cast<long double>(x[k]);
        }
        for (double yk : y) {
            denom *= static_cast<long double>(x[l]) + static_cast<long double>(yk);
        }
        sum += std::pow(static_cast<long double>(x[l]), power) / denom;
    }
    return static_cast<double>(sum);
}

double closed_form_fraction(const Spectrum& spectrum) {
    std::vector<double> x, y;
    x.reserve(spectrum.positives.size());
    y.reserve(spectrum.negatives.size());
    for (const Rational& v : spectrum.positives) x.push_back(v.to_double());
    for (const Rational& v : spectrum.negatives) y.push_back(v.to_double());
    return closed_form_fraction(x, y);
}

}  // namespace qvol
