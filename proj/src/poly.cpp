#include "qvol/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qvol {

SparsePoly::SparsePoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

SparsePoly SparsePoly::constant(std::vector<std::string> variables, const Rational& c) {
    SparsePoly p(std::move(variables));
    p.add_term(std::vector<unsigned>(p.vars_.size(), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> variables, std::size_t index) {
    SparsePoly p(std::move(variables));
    if (index >= p.vars_.size()) {
        throw std::out_of_range("SparsePoly: variable index out of range");
    }
    std::vector<unsigned> e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void SparsePoly::add_term(const std::vector<unsigned>& exponents, const Rational& c) {
    if (exponents.size() != vars_.size()) {
        throw std::invalid_argument("SparsePoly: exponent tuple has wrong length");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational SparsePoly::coefficient(const std::vector<unsigned>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::require_same_variables(const SparsePoly& o) const {
    if (vars_ != o.vars_) {
        throw std::invalid_argument("SparsePoly: variable lists differ");
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    require_same_variables(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    require_same_variables(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    require_same_variables(o);
    SparsePoly r(vars_);
    std::vector<unsigned> e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

Rational SparsePoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) {
        throw std::invalid_argument("SparsePoly: evaluation point has wrong arity");
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term *= point[i].pow(static_cast<long>(e[i]));
        }
        acc += term;
    }
    return acc;
}

unsigned SparsePoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    }
    return d;
}

std::vector<Monomial> SparsePoly::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        out.push_back({it->first, it->second});
    }
    return out;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Monomial& m : monomials()) {
        const auto& e = m.exponents;
        Rational coeff = m.coefficient;
        if (first) {
            if (coeff.sign() < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
            if (coeff.sign() < 0) coeff = -coeff;
        }
        first = false;

        bool has_var = false;
        std::ostringstream vs;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (has_var) vs << "*";
            vs << vars_[i];
            if (e[i] > 1) vs << "^" << e[i];
            has_var = true;
        }
        if (!has_var) {
            os << coeff.to_string();
        } else if (coeff == Rational(1)) {
            os << vs.str();
        } else {
            os << coeff.to_string() << "*" << vs.str();
        }
    }
    return os.str();
}

}  // namespace qvol
