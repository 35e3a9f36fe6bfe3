// Acceptance suite: runs every top-level criterion and prints one PASS/FAIL
// line per criterion.  Exits nonzero if any criterion fails.  An optional
// argv[1] names the bundled spec directory; the scenario files are then run
// end to end through the job executor as well.

#include "hochkit/derivlift.hpp"
#include "hochkit/execute.hpp"
#include "hochkit/morita.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace hochkit;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

LinearMap monomial_derivation(const Algebra& a, int i) {
    const ChainRing& R = a.ring();
    size_t m = a.rank();
    Mat d(R, m, m);
    for (size_t j = 1; j < m; ++j) {
        size_t target = j - 1 + static_cast<size_t>(i);
        if (target < m) d.at(target, j) = R.from_int(static_cast<int64_t>(j));
    }
    return LinearMap{d};
}

Cohomology hh1_of(const Algebra& abar) { return cohomology(abar, regular_bimodule(abar), 1); }

std::vector<uint64_t> key_of(const std::vector<Elem>& c) {
    std::vector<uint64_t> k;
    for (const Elem& e : c) k.push_back(e.packed);
    return k;
}

// ---------------------------------------------------------------- criterion 1
void criterion_hh1_dimension() {
    bool ok = true;
    std::string detail;
    struct Case { int64_t p; int s; };
    for (Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}}) {
        int ps = 1;
        for (int i = 0; i < c.s; ++i) ps *= static_cast<int>(c.p);
        auto F = ChainRing::unramified(c.p, 1);
        Algebra a = Algebra::truncated_polynomial(F, ps);
        Cohomology h = hh1_of(a);
        uint64_t expected = 1;
        for (int i = 0; i < ps; ++i) expected *= static_cast<uint64_t>(c.p);
        ok = ok && (h.order() == expected);
        // the d_i really are a basis: distinct nonzero classes spanning everything
        std::set<std::vector<uint64_t>> keys;
        std::vector<std::vector<Elem>> gens;
        Bimodule reg = regular_bimodule(a);
        for (int i = 0; i < ps; ++i) {
            auto coords = h.coords_of(cochain_from_derivation(a, reg, monomial_derivation(a, i)));
            ok = ok && !vec_is_zero(coords);
            keys.insert(key_of(coords));
            gens.push_back(coords);
        }
        ok = ok && (keys.size() == static_cast<size_t>(ps));
        Mat lattice = class_lattice(h, Mat::from_rows(h.pres.ring, gens, h.pres.num_generators()));
        ok = ok && (span_order(howell_form(lattice)) == expected);
        detail += "p=" + std::to_string(c.p) + ",p^s=" + std::to_string(ps) +
                  ":order=" + std::to_string(h.order()) + " ";
    }
    report(1, "HH^1 dimension formula for truncated polynomial algebras", ok, detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion_lift_dependence() {
    auto z16 = ChainRing::unramified(2, 4);
    auto f2 = ChainRing::unramified(2, 1);
    Algebra poly = Algebra::truncated_polynomial(z16, 2);
    Algebra group = Algebra::cyclic_group(z16, 2);
    Algebra polybar = poly.reduced(1);
    Algebra groupbar = group.reduced(1);
    Cohomology ph = hh1_of(polybar);
    Cohomology gh = hh1_of(groupbar);

    IntegrableChain pc = integrable_chain(poly, 1, 4, ph);
    IntegrableChain gc = integrable_chain(group, 1, 4, gh);

    bool ok = pc.levels.size() == 3 && gc.levels.size() == 3;
    // L_3 = L_4 on both sides, both of order 2 inside the order-4 group
    ok = ok && pc.levels[1].second.order() == 2 && pc.levels[2].second.order() == 2 &&
         pc.levels[1].second.elements == pc.levels[2].second.elements;
    ok = ok && gc.levels[1].second.order() == 2 && gc.levels[2].second.order() == 2 &&
         gc.levels[1].second.elements == gc.levels[2].second.elements;
    ok = ok && ph.order() == 4 && gh.order() == 4;

    // poly side is {0, d_1}
    Bimodule preg = regular_bimodule(polybar);
    auto d1 = ph.coords_of(cochain_from_derivation(polybar, preg, monomial_derivation(polybar, 1)));
    ok = ok && pc.levels[1].second.contains(d1);

    // group side transported through y = x + 1 is {0, d_0 + d_1}, a different subgroup
    LinearMap iso = cyclic_to_truncated_iso(f2, 2);
    std::set<std::vector<uint64_t>> transported;
    for (const auto& el : gc.levels[1].second.elements) {
        LinearMap d = derivation_from_cochain(gh.representative(el));
        LinearMap dt = conjugate_derivation(polybar, iso, d);
        transported.insert(key_of(ph.coords_of(cochain_from_derivation(polybar, preg, dt))));
    }
    Mat d01m = mat_add(monomial_derivation(polybar, 0).m, monomial_derivation(polybar, 1).m);
    auto d01 = ph.coords_of(cochain_from_derivation(polybar, preg, LinearMap{d01m}));
    ok = ok && transported.count(key_of(d01)) == 1 && transported.count(key_of(d1)) == 0;

    std::set<std::vector<uint64_t>> polyset;
    for (const auto& el : pc.levels[1].second.elements) polyset.insert(key_of(el));
    ok = ok && transported != polyset;

    report(2, "different lifts of kC_2 give different integrable subgroups", ok,
           "L_3=L_4 orders 2 and 2, subgroups differ");
}

// ---------------------------------------------------------------- criterion 3
void criterion_ramified_vanishing() {
    // pi^r O = (tau - 1) O with tau = -1 forces r = 2 for this ring; the
    // integrability level of Ex 6.1(a) is 1 (derivations on kP).
    auto e6 = ChainRing::eisenstein(2, {-2, 0}, 6);
    Algebra g = Algebra::cyclic_group(e6, 2);
    bool ok = e6.val(e6.sub(e6.neg(e6.one()), e6.one())) == 2; // val(tau - 1) = 2

    Mat am = Mat::identity(e6, 2);
    am.at(1, 1) = e6.neg(e6.one());
    AutR alpha = make_autr(g, am, 1);
    Algebra gbar = g.reduced(1);
    Cohomology gh = hh1_of(gbar);
    ok = ok && vec_is_zero(class_of_automorphism(g, alpha, gh));

    IntegrableChain chain = integrable_chain(g, 1, 6, gh);
    ok = ok && chain.inclusions_ok && chain.levels.back().second.order() == 1;
    std::string orders;
    for (auto& [s, grp] : chain.levels)
        orders += "L_" + std::to_string(s) + "=" + std::to_string(grp.order()) + " ";
    report(3, "ramified vanishing: class(y -> -y) = 0 and the chain reaches {0}", ok, orders);
}

// ---------------------------------------------------------------- criterion 4
void criterion_radical() {
    auto e3 = ChainRing::eisenstein(3, {3, 3}, 2);
    Algebra c3 = Algebra::cyclic_group(e3, 3);
    Elem tau = e3.add(e3.one(), e3.pi());
    bool ok = e3.mul(tau, e3.mul(tau, tau)) == e3.one();
    Mat am(e3, 3, 3);
    am.at(0, 0) = e3.one();
    am.at(1, 1) = tau;
    am.at(2, 2) = e3.mul(tau, tau);
    AutR alpha = make_autr(c3, am, 1);
    LinearMap mu = derivation_of_automorphism(c3, alpha);
    Algebra c3bar = c3.reduced(1);
    auto F = e3.reduced(1);
    Mat aug(F, 2, 3);
    aug.at(0, 0) = F.neg(F.one());
    aug.at(0, 1) = F.one();
    aug.at(1, 0) = F.neg(F.one());
    aug.at(1, 2) = F.one();
    ok = ok && !preserves_ideal(c3bar, mu, aug);
    report(4, "p = 3 integrable derivation does not preserve the Jacobson radical", ok);
}

// -------------------------------------------------- shared sample for 5 and 6
struct Sample {
    Algebra a2r; // algebra at precision exactly 2r
    AutR alpha;
    int r;
    std::string tag;
};

std::vector<Sample> automorphism_sample() {
    std::vector<Sample> out;
    auto z4 = ChainRing::unramified(2, 2);

    // all of Aut_1 for Z/4[x]/(x^2): x -> x + 2(a + bx)
    Algebra p4 = Algebra::truncated_polynomial(z4, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Mat m = Mat::identity(z4, 2);
            m.at(0, 1) = z4.from_int(2 * a);
            m.at(1, 1) = z4.from_int(1 + 2 * b);
            out.push_back({p4, make_autr(p4, m, 1), 1, "Z4[x]/x2"});
        }
    // all of Aut_1 for Z/4 C_2: y -> 2a + by, b odd
    Algebra g4 = Algebra::cyclic_group(z4, 2);
    for (int a = 0; a < 2; ++a)
        for (int b : {1, 3}) {
            Mat m = Mat::identity(z4, 2);
            m.at(0, 1) = z4.from_int(2 * a);
            m.at(1, 1) = z4.from_int(b);
            out.push_back({g4, make_autr(g4, m, 1), 1, "Z4C2"});
        }
    // Z/9[x]/(x^3): x -> x + 3w for eight choices of w
    auto z9 = ChainRing::unramified(3, 2);
    Algebra p9 = Algebra::truncated_polynomial(z9, 3);
    for (int w0 : {0, 1, 2})
        for (int w1 : {0, 1}) {
            if (w0 == 0 && w1 == 0) continue;
            std::vector<Elem> wx(3);
            wx[0] = z9.from_int(w0);
            wx[1] = z9.from_int(w1);
            // alpha(x) = x + 3 w, alpha(x^2) = (x + 3w)^2
            std::vector<Elem> ax = p9.basis_vec(1);
            for (size_t i = 0; i < 3; ++i) ax[i] = z9.add(ax[i], z9.mul(z9.from_int(3), wx[i]));
            Mat m(z9, 3, 3);
            m.at(0, 0) = z9.one();
            auto ax2 = p9.mul(ax, ax);
            for (size_t i = 0; i < 3; ++i) {
                m.at(i, 1) = ax[i];
                m.at(i, 2) = ax2[i];
            }
            out.push_back({p9, make_autr(p9, m, 1), 1, "Z9[x]/x3"});
        }
    // Z/9 C_3: y -> uy for the nontrivial cube roots of unity mod 9
    Algebra g9 = Algebra::cyclic_group(z9, 3);
    for (int u : {4, 7}) {
        Mat m(z9, 3, 3);
        m.at(0, 0) = z9.one();
        m.at(1, 1) = z9.from_int(u);
        m.at(2, 2) = z9.from_int(static_cast<int64_t>(u) * u % 9);
        out.push_back({g9, make_autr(g9, m, 1), 1, "Z9C3"});
    }
    // ramified level-2 samples over eisenstein(2, t^2 - 2, 4)
    auto e4 = ChainRing::eisenstein(2, {-2, 0}, 4);
    Algebra ge = Algebra::cyclic_group(e4, 2);
    {
        Mat m = Mat::identity(e4, 2);
        m.at(1, 1) = e4.neg(e4.one()); // y -> -y, difference valuation 2
        out.push_back({ge, make_autr(ge, m, 2), 2, "ram r=2 y->-y"});
        Mat m2 = Mat::identity(e4, 2);
        m2.at(1, 1) = e4.add(e4.one(), e4.from_int(2)); // y -> (1 + t^2) y
        out.push_back({ge, make_autr(ge, m2, 2), 2, "ram r=2 y->(1+t^2)y"});
        Mat m3 = Mat::identity(e4, 2);
        m3.at(0, 1) = e4.from_int(2); // y -> y + t^2: check (y + t^2)^2 = 1 + 2t^2 y + t^4 = 1... needs t^4 = 0 and 2 = t^2
        // (y + t^2)^2 = y^2 + 2 t^2 y + t^4 = 1 + t^4 y + 0 = 1: valid at precision 4
        out.push_back({ge, make_autr(ge, m3, 2), 2, "ram r=2 y->y+t^2"});
    }
    // level-1 eisenstein samples at precision 2
    auto e2 = ChainRing::eisenstein(2, {-2, 0}, 2);
    Algebra ge2 = Algebra::cyclic_group(e2, 2);
    {
        Mat m = Mat::identity(e2, 2);
        m.at(0, 1) = e2.pi(); // y -> y + t
        out.push_back({ge2, make_autr(ge2, m, 1), 1, "ram r=1 y->y+t"});
        Mat m2 = Mat::identity(e2, 2);
        m2.at(1, 1) = e2.add(e2.one(), e2.pi()); // y -> (1+t) y
        out.push_back({ge2, make_autr(ge2, m2, 1), 1, "ram r=1 y->(1+t)y"});
    }
    return out;
}

void criterion_prop41(const std::vector<Sample>& sample) {
    bool ok = sample.size() >= 20;
    std::string bad;
    for (const Sample& s : sample) {
        Algebra abar = s.a2r.reduced(s.r);
        Cohomology h = hh1_of(abar);
        auto cls = class_of_automorphism(s.a2r, s.alpha, h);
        auto tw = h.coords_of(twisted_bockstein_cochain(s.a2r, s.r, s.alpha.alpha));
        if (cls != tw) {
            ok = false;
            bad += s.tag + " ";
        }
    }
    report(5, "twisted Bockstein equals the class of the automorphism (" +
                  std::to_string(sample.size()) + " sampled)",
           ok, bad);
}

void criterion_prop42(const std::vector<Sample>& sample) {
    bool ok = true;
    bool sign_visible = false;
    for (const Sample& s : sample) {
        Algebra abar = s.a2r.reduced(s.r);
        Cohomology h = hh1_of(abar);
        auto cls = class_of_automorphism(s.a2r, s.alpha, h);
        auto ext = ext_pullback_class(s.a2r, s.alpha, h);
        ok = ok && (ext == class_neg(h, cls));
        if (ext != cls) sign_visible = true;
    }
    ok = ok && sign_visible;
    report(6, "pullback extension class is minus the automorphism class (sign seen at p=3)", ok);
}

// ---------------------------------------------------------------- criterion 7
void criterion_graded_derivation() {
    bool ok = true;
    for (auto [p, m] : {std::pair<int64_t, int>{2, 2}, {3, 3}}) {
        auto low = ChainRing::unramified(p, 1);
        auto high = ChainRing::unramified(p, 2);
        Algebra abar = Algebra::truncated_polynomial(low, m);
        Algebra a2 = Algebra::truncated_polynomial(high, m);
        Bimodule reg = regular_bimodule(abar);
        std::vector<Cohomology> hs;
        for (int n = 0; n <= 3; ++n) hs.push_back(cohomology(abar, reg, n));
        for (auto [dm, dn] : {std::pair<int, int>{0, 1}, {1, 0}, {1, 1}}) {
            for (const Cochain& zeta : hs[dm].basis)
                for (const Cochain& eta : hs[dn].basis) {
                    Cochain prod = cup_product(abar, zeta, eta);
                    auto lhs = hs[dm + dn + 1].coords_of(bockstein_cochain(a2, 1, prod));
                    Cochain t1 = cup_product(abar, bockstein_cochain(a2, 1, zeta), eta);
                    Cochain t2 = cup_product(abar, zeta, bockstein_cochain(a2, 1, eta));
                    Cochain sum = t1;
                    for (size_t i = 0; i < sum.v.size(); ++i)
                        sum.v[i] = (dm % 2 == 0) ? low.add(t1.v[i], t2.v[i]) : low.sub(t1.v[i], t2.v[i]);
                    ok = ok && (lhs == hs[dm + dn + 1].coords_of(sum));
                }
        }
    }
    report(7, "Bockstein is a graded derivation in degrees (0,1), (1,0), (1,1)", ok);
}

// ---------------------------------------------------------------- criterion 8
void criterion_les() {
    auto z4 = ChainRing::unramified(2, 2);
    auto e4 = ChainRing::eisenstein(2, {-2, 0}, 4);
    bool ok = les_exactness_report(Algebra::truncated_polynomial(z4, 2), 1, 2).all_exact;
    ok = ok && les_exactness_report(Algebra::cyclic_group(z4, 2), 1, 2).all_exact;
    ok = ok && les_exactness_report(Algebra::cyclic_group(e4, 2), 2, 2).all_exact;
    report(8, "long exact sequence exact at every node through degree 2", ok);
}

// ---------------------------------------------------------------- criterion 9
void criterion_level_independence() {
    bool ok = true;
    auto z4 = ChainRing::unramified(2, 2);
    auto z9 = ChainRing::unramified(3, 2);
    auto e4 = ChainRing::eisenstein(2, {-2, 0}, 4);
    std::vector<Algebra> algebras = {
        Algebra::truncated_polynomial(z4, 2), Algebra::cyclic_group(z4, 2),
        Algebra::cyclic_group(e4, 2), Algebra::truncated_polynomial(z9, 3),
        Algebra::cyclic_group(z9, 3)};
    for (const Algebra& a : algebras)
        for (int n = 0; n <= 2; ++n) ok = ok && level_compare(a, 1, 1, 2, n).equal;
    report(9, "cohomology presentations agree across bar-complex levels", ok);
}

// --------------------------------------------------------------- criterion 10
void criterion_pi_shift() {
    auto z9 = ChainRing::unramified(3, 2);
    auto z4 = ChainRing::unramified(2, 2);
    bool ok = pi_shift_hh1(Algebra::cyclic_group(z9, 3), 1).injective;
    ok = ok && pi_shift_hh1(Algebra::cyclic_group(z4, 2), 1).injective;
    report(10, "pi-shift HH^1(A/pi) -> HH^1(A/pi^2) is injective for both group algebras", ok);
}

// --------------------------------------------------------------- criterion 11
void criterion_morita() {
    auto z8 = ChainRing::unramified(2, 3);
    MoritaReport mp = morita_invariance_report(Algebra::truncated_polynomial(z8, 2), 1, 3, 2);
    MoritaReport mg = morita_invariance_report(Algebra::cyclic_group(z8, 2), 1, 3, 2);
    bool ok = mp.all_match && mp.transfer_bijective && mg.all_match && mg.transfer_bijective;
    std::string detail = "poly chain ";
    for (auto& [s, grp] : mp.base_chain.levels)
        detail += "L_" + std::to_string(s) + "=" + std::to_string(grp.order()) + " ";
    report(11, "Morita transfer matches integrable chains for both lifts (n = 2)", ok, detail);
}

// --------------------------------------------------------------- criterion 12
std::set<std::vector<uint64_t>> enumerate_span_acc(const Mat& m) {
    const ChainRing& R = m.ring;
    std::set<std::vector<uint64_t>> span;
    uint64_t total = 1;
    for (size_t i = 0; i < m.rows; ++i) total *= R.size();
    for (uint64_t c = 0; c < total; ++c) {
        uint64_t rem = c;
        std::vector<Elem> v(m.cols);
        for (size_t i = 0; i < m.rows; ++i) {
            Elem coeff = R.elem_at(rem % R.size());
            rem /= R.size();
            for (size_t j = 0; j < m.cols; ++j) v[j] = R.add(v[j], R.mul(coeff, m.at(i, j)));
        }
        span.insert(key_of(v));
    }
    return span;
}

void criterion_infrastructure() {
    bool ok = true;

    // Howell canonicity: equal spans (enumerated, <= 4096 elements) give equal forms
    std::mt19937 rng(424242);
    for (auto R : {ChainRing::unramified(2, 3), ChainRing::eisenstein(2, {-2, 0}, 3),
                   ChainRing::unramified(3, 2)}) {
        std::uniform_int_distribution<uint64_t> dist(0, R.size() - 1);
        for (int trial = 0; trial < 12; ++trial) {
            Mat m(R, 2, 3);
            for (Elem& e : m.a) e = R.elem_at(dist(rng));
            auto h = howell_form(m);
            // span-preserving scramble: row ops plus an appended combination
            Mat m2(R, 3, 3);
            Elem coeff = R.elem_at(dist(rng));
            for (size_t j = 0; j < 3; ++j) {
                m2.at(0, j) = R.add(m.at(0, j), R.mul(coeff, m.at(1, j)));
                m2.at(1, j) = m.at(1, j);
                m2.at(2, j) = R.mul(R.pi(), m.at(0, j));
            }
            ok = ok && (enumerate_span_acc(m) == enumerate_span_acc(m2));
            ok = ok && (howell_form(m2).H == h.H);
            ok = ok && (enumerate_span_acc(h.H) == enumerate_span_acc(m));
            ok = ok && (howell_form(h.H).H == h.H);
        }
    }

    // delta o delta = 0 on every test algebra in all computable degrees
    auto z4 = ChainRing::unramified(2, 2);
    auto z9 = ChainRing::unramified(3, 2);
    auto e4 = ChainRing::eisenstein(2, {-2, 0}, 4);
    std::vector<Algebra> algebras = {
        Algebra::truncated_polynomial(z4, 2), Algebra::cyclic_group(z4, 2),
        Algebra::cyclic_group(e4, 2), Algebra::truncated_polynomial(z9, 3),
        Algebra::cyclic_group(z9, 3)};
    for (const Algebra& a : algebras) {
        Bimodule reg = regular_bimodule(a);
        for (int n = 0; n <= 2; ++n) {
            Mat d1 = bar_differential_matrix(a, reg, n);
            Mat d2 = bar_differential_matrix(a, reg, n + 1);
            ok = ok && mat_mul(d2, d1).is_zero();
        }
    }

    // Bockstein lift-independence: 10 random alternative lifts per class
    struct Fam { Algebra a2r; int r; };
    std::vector<Fam> fams = {{Algebra::truncated_polynomial(z4, 2), 1},
                             {Algebra::cyclic_group(z4, 2), 1},
                             {Algebra::cyclic_group(e4, 2), 2}};
    for (Fam& f : fams) {
        const ChainRing& S = f.a2r.ring();
        ChainRing Rr = S.reduced(f.r);
        Algebra abar = f.a2r.reduced(f.r);
        Bimodule reg = regular_bimodule(abar);
        Bimodule reg2 = regular_bimodule(f.a2r);
        Cohomology h1 = cohomology(abar, reg, 1);
        Cohomology h2 = cohomology(abar, reg, 2);
        Mat dmat = bar_differential_matrix(f.a2r, reg2, 1);
        for (const Cochain& cls : h1.basis) {
            auto expected = h2.coords_of(bockstein_cochain(f.a2r, f.r, cls));
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<Elem> lifted(cls.v.size());
                for (size_t i = 0; i < cls.v.size(); ++i) {
                    Elem base = Rr.lift_elem(cls.v[i], S);
                    Elem noise = S.elem_at(rng() % S.size());
                    lifted[i] = S.add(base, S.mul(S.pi_pow(f.r), noise));
                }
                auto diff = mat_apply(dmat, lifted);
                Cochain divided = zero_cochain(abar, reg, 2);
                for (size_t i = 0; i < diff.size(); ++i)
                    divided.v[i] = S.exact_div_pi(diff[i], f.r, Rr);
                ok = ok && (h2.coords_of(divided) == expected);
            }
        }
    }

    report(12, "infrastructure: Howell canonicity, d o d = 0, Bockstein lift-independence", ok);
}

// ------------------------------------------------ bundled scenario specs
void run_bundled_specs(const std::string& dir) {
    struct Scenario {
        const char* file;
        int expect_code;
        const char* expect_substring;
    };
    const Scenario scenarios[] = {
        {"hh1_kc2.spec", 0, "order=4 exponents=[1,1] basis=d_0,d_1"},
        {"kc2_poly_lift.spec", 0, "L_3: order=2 generators=[d_1]"},
        {"kc2_group_lift.spec", 0, "L_3: order=2 generators=[y->y]"},
        {"ramified_r2.spec", 0, "L_6: order=1"},
        {"p3_radical.spec", 0, "preserves=no"},
        {"les_z4_poly.spec", 0, "verdict=exact"},
        {"morita_poly.spec", 0, "verdict=match"},
    };
    for (const Scenario& sc : scenarios) {
        std::ifstream in(dir + "/" + sc.file, std::ios::binary);
        bool ok = static_cast<bool>(in);
        std::string detail = sc.file;
        if (ok) {
            std::ostringstream ss;
            ss << in.rdbuf();
            ExecResult res = execute_spec_text(ss.str());
            ok = res.code == sc.expect_code && res.text.find(sc.expect_substring) != std::string::npos;
            // determinism: repeated runs are byte-identical
            ok = ok && execute_spec_text(ss.str()).text == res.text;
        } else {
            detail += " (missing)";
        }
        std::printf("%s scenario spec %s\n", ok ? "PASS" : "FAIL", detail.c_str());
        if (!ok) ++g_failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    criterion_hh1_dimension();
    criterion_lift_dependence();
    criterion_ramified_vanishing();
    criterion_radical();
    auto sample = automorphism_sample();
    criterion_prop41(sample);
    criterion_prop42(sample);
    criterion_graded_derivation();
    criterion_les();
    criterion_level_independence();
    criterion_pi_shift();
    criterion_morita();
    criterion_infrastructure();
    if (argc > 1) run_bundled_specs(argv[1]);
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
