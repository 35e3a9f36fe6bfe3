#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hochkit/chainring.hpp"

using namespace hochkit;

TEST_CASE("unramified construction and basic arithmetic") {
    auto z4 = ChainRing::unramified(2, 2);
    CHECK(z4.size() == 4);
    CHECK(z4.ram_index() == 1);
    CHECK(z4.pi() == z4.from_int(2));
    CHECK(z4.add(z4.from_int(3), z4.from_int(2)) == z4.from_int(1));
    CHECK(z4.mul(z4.from_int(2), z4.from_int(2)) == z4.zero());
    CHECK(z4.neg(z4.one()) == z4.from_int(3));
}

TEST_CASE("valuation examples") {
    auto z4 = ChainRing::unramified(2, 2);
    CHECK(z4.val(z4.from_int(2)) == 1);
    CHECK(z4.val(z4.zero()) == 2);
    CHECK(z4.val(z4.one()) == 0);
    auto e = ChainRing::eisenstein(2, {-2, 0}, 4);
    CHECK(e.val(e.from_int(2)) == 2);
}

TEST_CASE("eisenstein rings") {
    auto e = ChainRing::eisenstein(2, {-2, 0}, 4);
    CHECK(e.size() == 16);
    CHECK(e.ram_index() == 2);
    CHECK(e.mul(e.pi(), e.pi()) == e.from_int(2)); // pi^2 = 2

    // tau = t + 1 is a primitive cube root of unity in Z_3[t]/(t^2+3t+3)
    auto e3 = ChainRing::eisenstein(3, {3, 3}, 2);
    Elem tau = e3.add(e3.one(), e3.pi());
    Elem tau3 = e3.mul(tau, e3.mul(tau, tau));
    CHECK(tau3 == e3.one());
    CHECK(e3.mul(tau, tau) != e3.one());
    CHECK(tau != e3.one());
}

TEST_CASE("valuation of p equals ramification index") {
    auto e = ChainRing::eisenstein(2, {-2, 0}, 5);
    CHECK(e.val(e.from_int(2)) == 2);
    auto e3 = ChainRing::eisenstein(3, {3, 3}, 4);
    CHECK(e3.val(e3.from_int(3)) == 2);
    auto e6 = ChainRing::eisenstein(2, {-6, 0}, 5); // t^2 = 6, unit part 3
    CHECK(e6.val(e6.from_int(2)) == 2);
    CHECK(e6.mul(e6.pi(), e6.pi()) == e6.from_int(6 % 32));
}

TEST_CASE("exact division by pi") {
    auto z4 = ChainRing::unramified(2, 2);
    auto f2 = z4.reduced(1);
    CHECK(z4.exact_div_pi(z4.from_int(2), 1, f2) == f2.one());
    CHECK_THROWS_AS(z4.exact_div_pi(z4.from_int(3), 1, f2), Error);

    auto e = ChainRing::eisenstein(2, {-2, 0}, 4);
    auto e2 = e.reduced(2);
    CHECK(e.exact_div_pi(e.from_int(2), 2, e2) == e2.one());
    // division then multiplication round trip at full precision on multiples
    for (uint64_t i = 0; i < e.size(); ++i) {
        Elem x = e.elem_at(i);
        if (e.val(x) < 1) continue;
        auto e3r = e.reduced(3);
        Elem y = e.exact_div_pi(x, 1, e3r);
        Elem back = e.mul(e.pi(), e3r.lift_elem(y, e));
        CHECK(back == x);
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(ChainRing::unramified(4, 2), Error);   // NonPrime
    CHECK_THROWS_AS(ChainRing::unramified(2, 0), Error);   // ZeroPrecision
    CHECK_THROWS_AS(ChainRing::eisenstein(2, {-4, 0}, 3), Error); // c_0 divisible by p^2
    CHECK_THROWS_AS(ChainRing::eisenstein(2, {-2, 1}, 3), Error); // c_1 not divisible by p
    CHECK_THROWS_AS(ChainRing::eisenstein(2, {-2}, 3), Error);    // degree < 2
}

static void exhaustive_ring_axioms(const ChainRing& R) {
    REQUIRE(R.size() <= 256);
    for (uint64_t i = 0; i < R.size(); ++i) {
        Elem a = R.elem_at(i);
        CHECK(R.mul(a, R.one()) == a);
        CHECK(R.add(a, R.zero()) == a);
        CHECK(R.add(a, R.neg(a)) == R.zero());
        if (R.is_unit(a)) CHECK(R.mul(a, R.unit_inverse(a)) == R.one());
        for (uint64_t j = 0; j < R.size(); ++j) {
            Elem b = R.elem_at(j);
            CHECK(R.add(a, b) == R.add(b, a));
            CHECK(R.mul(a, b) == R.mul(b, a));
            for (uint64_t k = 0; k < R.size(); ++k) {
                Elem c = R.elem_at(k);
                CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
                CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
            }
        }
    }
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
    exhaustive_ring_axioms(ChainRing::unramified(2, 3));
    exhaustive_ring_axioms(ChainRing::unramified(3, 2));
    exhaustive_ring_axioms(ChainRing::eisenstein(2, {-2, 0}, 4));
    exhaustive_ring_axioms(ChainRing::eisenstein(3, {3, 3}, 2));
    exhaustive_ring_axioms(ChainRing::eisenstein(2, {2, 2, 2}, 4)); // cubic E
}

TEST_CASE("valuation laws hold exhaustively") {
    for (auto R : {ChainRing::unramified(2, 3), ChainRing::eisenstein(2, {-2, 0}, 4)}) {
        int N = R.precision();
        for (uint64_t i = 0; i < R.size(); ++i)
            for (uint64_t j = 0; j < R.size(); ++j) {
                Elem a = R.elem_at(i), b = R.elem_at(j);
                CHECK(R.val(R.mul(a, b)) == std::min(R.val(a) + R.val(b), N));
                CHECK(R.val(R.add(a, b)) >= std::min(R.val(a), R.val(b)));
            }
    }
}

TEST_CASE("reduce_precision is a ring homomorphism") {
    for (auto R : {ChainRing::unramified(2, 3), ChainRing::eisenstein(2, {-2, 0}, 4)}) {
        auto S = R.reduced(R.precision() - 1);
        for (uint64_t i = 0; i < R.size(); ++i)
            for (uint64_t j = 0; j < R.size(); ++j) {
                Elem a = R.elem_at(i), b = R.elem_at(j);
                CHECK(R.reduce_elem(R.add(a, b), S) == S.add(R.reduce_elem(a, S), R.reduce_elem(b, S)));
                CHECK(R.reduce_elem(R.mul(a, b), S) == S.mul(R.reduce_elem(a, S), R.reduce_elem(b, S)));
            }
        CHECK(R.reduce_elem(R.one(), S) == S.one());
    }
}

TEST_CASE("pi is nilpotent of index exactly N") {
    auto e = ChainRing::eisenstein(2, {-2, 0}, 5);
    Elem x = e.one();
    for (int i = 0; i < 4; ++i) x = e.mul(x, e.pi());
    CHECK(x != e.zero());
    CHECK(e.mul(x, e.pi()) == e.zero());
}

TEST_CASE("canonical digits round trip") {
    auto e = ChainRing::eisenstein(3, {3, 3}, 3);
    for (uint64_t i = 0; i < e.size(); ++i) {
        Elem x = e.elem_at(i);
        CHECK(e.from_digits(e.digits(x)) == x);
    }
}

TEST_CASE("formatting") {
    auto z8 = ChainRing::unramified(2, 3);
    CHECK(z8.format(z8.from_int(5)) == "5");
    auto e = ChainRing::eisenstein(2, {-2, 0}, 4);
    CHECK(e.format(e.zero()) == "0");
    CHECK(e.format(e.pi()) == "t");
    CHECK(e.format(e.from_int(2)) == "t^2");
    CHECK(e.format(e.add(e.one(), e.pi())) == "1+t");
}
