#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qvol {

// Exact arbitrary-precision rational scalar. Every value is kept in canonical
// form (reduced, denominator > 0), so equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, 3 == Rational(3)
    Rational(long n, long d);
    Rational(mpz_class n, mpz_class d);
    explicit Rational(const mpq_class& q);

    // Parses "a/b" or "a" (decimal digits, optional leading sign).
    // Throws std::invalid_argument on malformed input, std::domain_error on
    // zero denominator.
    static Rational from_string(const std::string& s);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    // Integer power; negative exponents require a nonzero base
    // (std::domain_error otherwise).
    Rational pow(long e) const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational reciprocal() const;

    double to_double() const { return v_.get_d(); }

    // "a/b", or just "a" when the denominator is 1.
    std::string to_string() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

mpz_class factorial(unsigned n);

}  // namespace qvol
