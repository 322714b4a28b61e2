#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qvol/partition.hpp"

using qvol::BoxBound;
using qvol::Partition;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("construction strips trailing zeros and validates order") {
    CHECK(P({2, 1, 0, 0}) == P({2, 1}));
    CHECK(P({0, 0}) == Partition());
    CHECK(P({3, 3, 1}).count() == 3);
    CHECK(P({}).empty());
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
}

TEST_CASE("box enumeration matches the documented order") {
    const auto b11 = qvol::enumerate_box({1, 1});
    REQUIRE(b11.size() == 2);
    CHECK(b11[0] == Partition());
    CHECK(b11[1] == P({1}));

    const auto b22 = qvol::enumerate_box({2, 2});
    REQUIRE(b22.size() == 6);
    CHECK(b22[0] == Partition());
    CHECK(b22[1] == P({1}));
    CHECK(b22[2] == P({2}));
    CHECK(b22[3] == P({1, 1}));
    CHECK(b22[4] == P({2, 1}));
    CHECK(b22[5] == P({2, 2}));

    const auto b05 = qvol::enumerate_box({0, 5});
    REQUIRE(b05.size() == 1);
    CHECK(b05[0] == Partition());
}

TEST_CASE("box enumeration counts and uniqueness") {
    for (unsigned p = 0; p <= 8; ++p) {
        for (unsigned q = 0; q <= 8; ++q) {
            const auto all = qvol::enumerate_box({p, q});
            CHECK(all.size() == qvol::choose(p + q, p));
            std::set<Partition> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
            for (const Partition& v : all) CHECK(BoxBound{p, q}.contains(v));
        }
    }
}

TEST_CASE("full-row subset") {
    const auto c21 = qvol::enumerate_box_full_row({2, 1});
    REQUIRE(c21.size() == 2);
    CHECK(c21[0] == P({1}));
    CHECK(c21[1] == P({1, 1}));

    // Largest part 0 is the empty partition, available as soon as a row exists.
    const auto c10 = qvol::enumerate_box_full_row({1, 0});
    REQUIRE(c10.size() == 1);
    CHECK(c10[0] == Partition());

    // No rows at all: nothing can have largest part 3.
    CHECK(qvol::enumerate_box_full_row({0, 3}).empty());
    CHECK(qvol::enumerate_box_full_row({0, 0}).empty());
}

TEST_CASE("conjugate") {
    CHECK(qvol::conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(qvol::conjugate(Partition()) == Partition());
    CHECK(qvol::conjugate(P({2, 2})) == P({2, 2}));

    for (unsigned p = 0; p <= 8; ++p) {
        for (const Partition& v : qvol::enumerate_box({p, 8})) {
            CHECK(qvol::conjugate(qvol::conjugate(v)) == v);
        }
    }
}

TEST_CASE("conjugate complement") {
    CHECK(qvol::conjugate_complement(P({1}), {2, 1}) == P({1}));
    CHECK(qvol::conjugate_complement(P({1, 1}), {2, 1}) == Partition());
    CHECK(qvol::conjugate_complement(P({2}), {1, 2}) == Partition());
    CHECK(qvol::conjugate_complement(Partition(), {3, 0}) == Partition());
    CHECK_THROWS_AS(qvol::conjugate_complement(P({3}), {2, 2}), std::invalid_argument);

    // Lands in the transposed box, and complementing twice is the identity.
    for (unsigned p = 0; p <= 6; ++p) {
        for (unsigned q = 0; q <= 6; ++q) {
            for (const Partition& v : qvol::enumerate_box({p, q})) {
                const Partition star = qvol::conjugate_complement(v, {p, q});
                CHECK(BoxBound{q, p}.contains(star));
                CHECK(qvol::conjugate_complement(star, {q, p}) == v);
            }
        }
    }
}

TEST_CASE("drop_first examples and round trip") {
    CHECK(qvol::drop_first(P({1, 1})) == P({1}));
    CHECK(qvol::drop_first(P({1})) == Partition());
    CHECK(qvol::drop_first(Partition()) == Partition());
    CHECK(qvol::prepend(P({2, 1}), 4) == P({4, 2, 1}));
    CHECK_THROWS_AS(qvol::prepend(P({2}), 1), std::invalid_argument);
}

TEST_CASE("drop_first is a bijection from full-row partitions") {
    for (unsigned p = 1; p <= 6; ++p) {
        for (unsigned q = 0; q <= 6; ++q) {
            const auto full = qvol::enumerate_box_full_row({p, q});
            const auto smaller = qvol::enumerate_box({p - 1, q});
            REQUIRE(full.size() == smaller.size());

            std::set<Partition> image;
            for (const Partition& v : full) {
                const Partition dropped = qvol::drop_first(v);
                image.insert(dropped);
                // Round trip, and compatibility with the complement map.
                CHECK(qvol::prepend(dropped, q) == (v.empty() ? P({q}) : v));
                CHECK(qvol::conjugate_complement(dropped, {p - 1, q}) ==
                      qvol::conjugate_complement(v, {p, q}));
            }
            CHECK(image == std::set<Partition>(smaller.begin(), smaller.end()));
        }
    }
}

TEST_CASE("complement maps full-row partitions onto the rest of the transposed box") {
    for (unsigned p = 0; p <= 6; ++p) {
        for (unsigned q = 0; q <= 6; ++q) {
            if (p + q == 0) continue;  // the lemma accompanies duality, which excludes (0,0)
            const auto source = qvol::enumerate_box_full_row({q, p});
            std::set<Partition> expected;
            for (const Partition& v : qvol::enumerate_box({p, q})) expected.insert(v);
            for (const Partition& v : qvol::enumerate_box_full_row({p, q})) expected.erase(v);

            std::set<Partition> image;
            for (const Partition& v : source) {
                const Partition mapped = qvol::conjugate_complement(v, {q, p});
                image.insert(mapped);
                CHECK(qvol::conjugate_complement(mapped, {p, q}) == v);  // stated inverse
            }
            CHECK(image == expected);
        }
    }
}

TEST_CASE("binomial helper") {
    CHECK(qvol::choose(4, 2) == 6);
    CHECK(qvol::choose(0, 0) == 1);
    CHECK(qvol::choose(3, 5) == 0);
    CHECK(qvol::choose(16, 8) == 12870);
}
