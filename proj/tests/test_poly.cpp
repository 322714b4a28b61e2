#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qvol/poly.hpp"

using qvol::Rational;
using qvol::SparsePoly;

namespace {

const std::vector<std::string> kXY{"x", "y"};

SparsePoly var(std::size_t i) { return SparsePoly::variable(kXY, i); }

SparsePoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<long> coeff(-4, 4);
    SparsePoly p(kXY);
    for (int t = 0; t < 5; ++t) {
        p.add_term({static_cast<unsigned>(deg(rng)), static_cast<unsigned>(deg(rng))},
                   Rational(coeff(rng)));
    }
    return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("difference of squares") {
    const SparsePoly x = var(0), y = var(1);
    const SparsePoly prod = (x + y) * (x - y);
    SparsePoly expected(kXY);
    expected.add_term({2, 0}, Rational(1));
    expected.add_term({0, 2}, Rational(-1));
    CHECK(prod == expected);
}

TEST_CASE("additive identity and cancellation") {
    std::mt19937_64 rng(3);
    const SparsePoly p = random_poly(rng);
    const SparsePoly zero(kXY);
    CHECK(p + zero == p);
    CHECK((p - p).is_zero());
    CHECK((p - p).term_count() == 0);  // cancelled terms are not stored
}

TEST_CASE("binomial product expansion") {
    const std::vector<std::string> vars{"x", "y1", "y2"};
    const SparsePoly x = SparsePoly::variable(vars, 0);
    const SparsePoly y1 = SparsePoly::variable(vars, 1);
    const SparsePoly y2 = SparsePoly::variable(vars, 2);
    const SparsePoly prod = (x + y1) * (x + y2);

    SparsePoly expected(vars);
    expected.add_term({2, 0, 0}, Rational(1));
    expected.add_term({1, 1, 0}, Rational(1));
    expected.add_term({1, 0, 1}, Rational(1));
    expected.add_term({0, 1, 1}, Rational(1));
    CHECK(prod == expected);
}

TEST_CASE("variable list mismatch is an error") {
    const SparsePoly p(kXY);
    const SparsePoly q({"x"});
    CHECK_THROWS_AS(p + q, std::invalid_argument);
    CHECK_THROWS_AS(p * q, std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const SparsePoly p = random_poly(rng);
        const SparsePoly q = random_poly(rng);
        const auto v = random_point(rng);
        CHECK((p * q).eval(v) == p.eval(v) * q.eval(v));
        CHECK((p + q).eval(v) == p.eval(v) + q.eval(v));
    }
}

TEST_CASE("printing") {
    const SparsePoly x = var(0), y = var(1);
    CHECK((x + y).to_string() == "x + y");
    CHECK(SparsePoly(kXY).to_string() == "0");
    CHECK(((x * x) - y).to_string() == "x^2 - y");
}
