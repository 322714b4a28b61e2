#include "qvol/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qvol {

namespace {

void require_nonzero_denominator(const mpz_class& d) {
    if (sgn(d) == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
    require_nonzero_denominator(v_.get_den());
    v_.canonicalize();
}

Rational::Rational(mpz_class n, mpz_class d) : v_(std::move(n), std::move(d)) {
    require_nonzero_denominator(v_.get_den());
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    require_nonzero_denominator(v_.get_den());
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    // Shape check first: mpz_set_str is laxer than we want (whitespace, bases).
    const auto is_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '+' || t[0] == '-')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };

    const std::size_t slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false)) {
        throw std::invalid_argument("Rational: malformed value '" + s + "'");
    }
    return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        return reciprocal().pow(-e);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(r);  // canonical since the base was
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("Rational: reciprocal of zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace qvol
