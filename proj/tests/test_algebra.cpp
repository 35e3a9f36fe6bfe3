#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hochkit/algebra.hpp"
#include "hochkit/linalg.hpp"

#include <array>

using namespace hochkit;

namespace {

// F_2 x F_2 with componentwise multiplication; the factor swap is a
// non-inner automorphism.
Algebra product_algebra_f2(const ChainRing& f2) {
    std::vector<std::vector<std::vector<Elem>>> sc(2, std::vector<std::vector<Elem>>(2, std::vector<Elem>(2)));
    sc[0][0][0] = f2.one();
    sc[1][1][1] = f2.one();
    std::vector<Elem> unit = {f2.one(), f2.one()};
    return Algebra::from_struct_consts(f2, 2, sc, unit, {"u", "v"});
}

std::vector<std::vector<int>> s3_table() {
    // permutations of {0,1,2}: id, (01), (02), (12), (012), (021)
    std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
    auto compose = [&](int a, int b) { // perms[a] after perms[b]
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (int k = 0; k < 6; ++k)
            if (perms[k] == c) return k;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = compose(a, b);
    return t;
}

} // namespace

TEST_CASE("cyclic group algebras") {
    auto z4 = ChainRing::unramified(2, 2);
    Algebra c2 = Algebra::cyclic_group(z4, 2);
    CHECK(c2.rank() == 2);
    CHECK(c2.mul(c2.basis_vec(1), c2.basis_vec(1)) == c2.basis_vec(0)); // y^2 = 1

    auto z9 = ChainRing::unramified(3, 2);
    Algebra c3 = Algebra::cyclic_group(z9, 3);
    CHECK(c3.rank() == 3);
    CHECK(c3.mul(c3.basis_vec(1), c3.basis_vec(2)) == c3.basis_vec(0));
}

TEST_CASE("S_3 group algebra is noncommutative and associative") {
    auto f2 = ChainRing::unramified(2, 1);
    Algebra s3 = Algebra::group_algebra(f2, s3_table());
    CHECK(s3.rank() == 6);
    bool commutative = true;
    for (size_t i = 0; i < 6 && commutative; ++i)
        for (size_t j = 0; j < 6; ++j)
            if (s3.sc(i, j) != s3.sc(j, i)) { commutative = false; break; }
    CHECK(!commutative);
}

TEST_CASE("group table validation") {
    auto f2 = ChainRing::unramified(2, 1);
    // not associative / no identity
    CHECK_THROWS_AS(Algebra::group_algebra(f2, {{1, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(Algebra::group_algebra(f2, {{0, 1}, {1, 1}}), Error);
}

TEST_CASE("truncated polynomial algebras") {
    auto z4 = ChainRing::unramified(2, 2);
    Algebra a = Algebra::truncated_polynomial(z4, 2);
    CHECK(a.rank() == 2);
    CHECK(vec_is_zero(a.mul(a.basis_vec(1), a.basis_vec(1)))); // x^2 = 0
    auto z8 = ChainRing::unramified(2, 3);
    CHECK(Algebra::truncated_polynomial(z8, 2).rank() == 2);
    auto z9 = ChainRing::unramified(3, 2);
    Algebra b = Algebra::truncated_polynomial(z9, 3);
    CHECK(b.mul(b.basis_vec(1), b.basis_vec(2)) == std::vector<Elem>(3));
}

TEST_CASE("matrix algebras") {
    auto f2 = ChainRing::unramified(2, 1);
    Algebra base = Algebra::truncated_polynomial(f2, 1); // F_2 itself
    Algebra m2 = Algebra::matrix_algebra(base, 2);
    CHECK(m2.rank() == 4);
    // unit = E11 + E22
    std::vector<Elem> expected_unit(4);
    expected_unit[0] = f2.one();
    expected_unit[3] = f2.one();
    CHECK(m2.unit() == expected_unit);

    Algebra a = Algebra::truncated_polynomial(f2, 2);
    Algebra m1 = Algebra::matrix_algebra(a, 1);
    CHECK(m1.rank() == a.rank());
    for (size_t i = 0; i < a.rank(); ++i)
        for (size_t j = 0; j < a.rank(); ++j) CHECK(m1.sc(i, j) == a.sc(i, j));

    CHECK(Algebra::matrix_algebra(a, 2).rank() == 8);
}

TEST_CASE("enveloping algebras") {
    auto f2 = ChainRing::unramified(2, 1);
    Algebra a = Algebra::truncated_polynomial(f2, 2);
    Algebra ae = Algebra::enveloping(a);
    CHECK(ae.rank() == 4);

    // commutative input gives commutative enveloping algebra
    auto z4 = ChainRing::unramified(2, 2);
    Algebra c2 = Algebra::cyclic_group(z4, 2);
    Algebra c2e = Algebra::enveloping(c2);
    for (size_t i = 0; i < c2e.rank(); ++i)
        for (size_t j = 0; j < c2e.rank(); ++j) CHECK(c2e.sc(i, j) == c2e.sc(j, i));

    // M_2(F_2): enveloping has rank 16 and center of rank 1
    Algebra m2 = Algebra::matrix_algebra(Algebra::truncated_polynomial(f2, 1), 2);
    Algebra m2e = Algebra::enveloping(m2);
    CHECK(m2e.rank() == 16);
    Mat c = m2e.center();
    // oracle: brute-force count of central elements (2^16 too big; use the
    // span order of the computed kernel checked against direct centrality)
    for (size_t i = 0; i < c.rows; ++i) {
        auto z = c.row(i);
        for (size_t k = 0; k < m2e.rank(); ++k)
            CHECK(m2e.mul(z, m2e.basis_vec(k)) == m2e.mul(m2e.basis_vec(k), z));
    }
    CHECK(span_order(howell_form(c)) == 2); // rank 1 over F_2
}

TEST_CASE("reduce_algebra") {
    auto z4 = ChainRing::unramified(2, 2);
    Algebra a = Algebra::truncated_polynomial(z4, 2);
    Algebra a1 = a.reduced(1);
    CHECK(a1.ring().precision() == 1);
    CHECK(a.reduced(2).ring().precision() == 2);

    // reduce commutes with the preset constructors
    auto f2 = ChainRing::unramified(2, 1);
    Algebra direct = Algebra::truncated_polynomial(f2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) CHECK(a1.sc(i, j) == direct.sc(i, j));

    auto e4 = ChainRing::eisenstein(2, {-2, 0}, 4);
    Algebra g = Algebra::cyclic_group(e4, 2);
    Algebra g2 = g.reduced(2);
    CHECK(g2.ring().size() == 4);
    CHECK(g2.ring().mul(g2.ring().pi(), g2.ring().pi()) == g2.ring().zero()); // t^2 = 0 there
}

TEST_CASE("derivation validation") {
    auto f2 = ChainRing::unramified(2, 1);
    Algebra a1 = Algebra::truncated_polynomial(f2, 2);
    Mat d0(f2, 2, 2);
    d0.at(0, 1) = f2.one(); // x -> 1
    CHECK(validate_derivation(a1, LinearMap{d0}));
    Mat d1(f2, 2, 2);
    d1.at(1, 1) = f2.one(); // x -> x
    CHECK(validate_derivation(a1, LinearMap{d1}));

    auto z4 = ChainRing::unramified(2, 2);
    Algebra a2 = Algebra::truncated_polynomial(z4, 2);
    Mat bad(z4, 2, 2);
    bad.at(0, 1) = z4.one(); // x -> 1 fails Leibniz at precision 2
    CHECK(!validate_derivation(a2, LinearMap{bad}));
}

TEST_CASE("automorphism validation") {
    auto z4 = ChainRing::unramified(2, 2);
    Algebra a = Algebra::truncated_polynomial(z4, 2);
    Mat good = Mat::identity(z4, 2);
    good.at(1, 1) = z4.from_int(3); // x -> 3x
    CHECK(is_algebra_morphism(a, LinearMap{good}));
    CHECK_NOTHROW(validate_automorphism(a, LinearMap{good}));

    Mat notmult = Mat::identity(z4, 2);
    notmult.at(0, 1) = z4.one(); // x -> x + 1 is not multiplicative
    CHECK(!is_algebra_morphism(a, LinearMap{notmult}));
    CHECK_THROWS_AS(validate_automorphism(a, LinearMap{notmult}), Error);

    Mat noninv(z4, 2, 2);
    noninv.at(0, 0) = z4.one();
    noninv.at(1, 1) = z4.from_int(2); // x -> 2x kills the residue
    CHECK_THROWS_AS(validate_automorphism(a, LinearMap{noninv}), Error);
}

TEST_CASE("twisted bimodules") {
    auto z4 = ChainRing::unramified(2, 2);
    Algebra c2 = Algebra::cyclic_group(z4, 2);

    // identity twist gives the regular bimodule
    Bimodule reg = regular_bimodule(c2);
    Bimodule tid = twisted_bimodule(c2, identity_map(z4, 2), 2);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(tid.left[i] == reg.left[i]);
        CHECK(tid.right[i] == reg.right[i]);
    }

    // y -> 3y: right action of y is multiplication by 3y
    Mat am = Mat::identity(z4, 2);
    am.at(1, 1) = z4.from_int(3);
    Bimodule tw = twisted_bimodule(c2, LinearMap{am}, 2);
    std::vector<Elem> threey(2);
    threey[1] = z4.from_int(3);
    CHECK(tw.right[1] == c2.right_mult_matrix(threey));
    validate_bimodule(c2, tw);

    // composite twists: M_{alpha.beta} has the composed right action
    Mat bm = Mat::identity(z4, 2);
    bm.at(0, 1) = z4.from_int(2); // y -> y + 2
    CHECK(is_algebra_morphism(c2, LinearMap{bm}));
    Bimodule tab = twisted_bimodule(c2, LinearMap{mat_mul(am, bm)}, 2);
    Bimodule ta = twisted_bimodule(c2, LinearMap{am}, 2);
    for (size_t j = 0; j < 2; ++j) {
        // right action of e_j in M_{a.b} = right action of b(e_j) in M_a
        auto bj = LinearMap{bm}.apply(c2.basis_vec(j));
        Mat expect(z4, 2, 2);
        for (size_t l = 0; l < 2; ++l)
            expect = mat_add(expect, mat_scale(ta.right[l], bj[l]));
        CHECK(tab.right[j] == expect);
    }
}

TEST_CASE("inner twist is isomorphic to the regular bimodule") {
    auto f2 = ChainRing::unramified(2, 1);
    Algebra m2 = Algebra::matrix_algebra(Algebra::truncated_polynomial(f2, 1), 2);
    // c = permutation matrix E12 + E21, alpha = conjugation by c
    std::vector<Elem> c(4);
    c[1] = f2.one();
    c[2] = f2.one();
    REQUIRE(m2.is_unit_element(c));
    auto cinv = m2.inverse_element(c);
    Mat am(f2, 4, 4);
    for (size_t j = 0; j < 4; ++j) {
        auto img = m2.mul(c, m2.mul(m2.basis_vec(j), cinv));
        for (size_t i = 0; i < 4; ++i) am.at(i, j) = img[i];
    }
    LinearMap alpha{am};
    validate_automorphism(m2, alpha);
    Bimodule malpha = twisted_bimodule(m2, alpha, 1);
    // phi(m) = m c is a bimodule isomorphism M_alpha -> M
    Mat phi = m2.right_mult_matrix(c);
    CHECK(is_invertible_map(f2, phi));
    Bimodule reg = regular_bimodule(m2);
    for (size_t i = 0; i < 4; ++i) {
        CHECK(mat_mul(phi, malpha.left[i]) == mat_mul(reg.left[i], phi));
        CHECK(mat_mul(phi, malpha.right[i]) == mat_mul(reg.right[i], phi));
    }
}

TEST_CASE("product algebra factor swap is an automorphism") {
    auto f2 = ChainRing::unramified(2, 1);
    Algebra prod = product_algebra_f2(f2);
    Mat swap(f2, 2, 2);
    swap.at(0, 1) = f2.one();
    swap.at(1, 0) = f2.one();
    CHECK(is_algebra_morphism(prod, LinearMap{swap}));
}

TEST_CASE("basis change y -> x + 1") {
    auto f2 = ChainRing::unramified(2, 1);
    LinearMap iso = cyclic_to_truncated_iso(f2, 2);
    Algebra src = Algebra::cyclic_group(f2, 2);
    Algebra tgt = Algebra::truncated_polynomial(f2, 2);
    // algebra isomorphism: phi(y)^2 = phi(1)
    auto py = iso.apply(src.basis_vec(1));
    CHECK(tgt.mul(py, py) == iso.apply(src.basis_vec(0)));
    CHECK(is_invertible_map(f2, iso.m));

    auto f3 = ChainRing::unramified(3, 1);
    LinearMap iso3 = cyclic_to_truncated_iso(f3, 3);
    Algebra src3 = Algebra::cyclic_group(f3, 3);
    Algebra tgt3 = Algebra::truncated_polynomial(f3, 3);
    auto py3 = iso3.apply(src3.basis_vec(1));
    CHECK(tgt3.mul(py3, tgt3.mul(py3, py3)) == iso3.apply(src3.basis_vec(0)));
}

TEST_CASE("custom algebra validation catches broken structure constants") {
    auto f2 = ChainRing::unramified(2, 1);
    std::vector<std::vector<std::vector<Elem>>> sc(2, std::vector<std::vector<Elem>>(2, std::vector<Elem>(2)));
    // e0 = unit, but e1 * e1 = e1 with e1 * e0 = 0 breaks the unit axiom
    sc[0][0][0] = f2.one();
    sc[0][1][1] = f2.one();
    sc[1][1][1] = f2.one();
    std::vector<Elem> unit = {f2.one(), Elem{}};
    CHECK_THROWS_AS(Algebra::from_struct_consts(f2, 2, sc, unit), Error);
}
