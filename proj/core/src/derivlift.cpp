#include "hochkit/derivlift.hpp"

#include <algorithm>
#include <map>

namespace hochkit {

namespace {

int matrix_min_val(const ChainRing& R, const Mat& m) {
    int v = R.precision();
    for (const Elem& e : m.a) v = std::min(v, R.val(e));
    return v;
}

Mat reduce_matrix(const ChainRing& from, const Mat& m, const ChainRing& to) {
    Mat r(to, m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = from.reduce_elem(m.a[i], to);
    return r;
}

Mat lift_matrix(const ChainRing& from, const Mat& m, const ChainRing& to) {
    Mat r(to, m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = from.lift_elem(m.a[i], to);
    return r;
}

std::vector<Elem> matrix_col(const Mat& m, size_t j) {
    std::vector<Elem> c(m.rows);
    for (size_t i = 0; i < m.rows; ++i) c[i] = m.at(i, j);
    return c;
}

} // namespace

AutR make_autr(const Algebra& a_s, Mat alpha_matrix, int level) {
    if (level < 1) fail(Errc::NotLevelR, "level must be >= 1");
    LinearMap f{std::move(alpha_matrix)};
    validate_automorphism(a_s, f);
    Mat diff = mat_sub(f.m, Mat::identity(a_s.ring(), a_s.rank()));
    if (matrix_min_val(a_s.ring(), diff) < level)
        fail(Errc::NotLevelR, "automorphism does not induce the identity at precision " + std::to_string(level));
    return AutR{std::move(f), level};
}

AutR autr_compose(const Algebra& a_s, const AutR& f, const AutR& g) {
    return make_autr(a_s, mat_mul(f.alpha.m, g.alpha.m), std::min(f.level, g.level));
}

LinearMap derivation_from_cochain(const Cochain& c) {
    if (c.degree != 1 || c.mrank != c.algrank)
        fail(Errc::Internal, "expected a degree-1 cochain with regular-type coefficients");
    Mat m(c.ring, c.algrank, c.algrank);
    for (size_t j = 0; j < c.algrank; ++j)
        for (size_t i = 0; i < c.algrank; ++i) m.at(i, j) = c.v[j * c.mrank + i];
    return LinearMap{std::move(m)};
}

Cochain cochain_from_derivation(const Algebra& a, const Bimodule& m, const LinearMap& d) {
    Cochain c = zero_cochain(a, m, 1);
    for (size_t j = 0; j < a.rank(); ++j)
        for (size_t i = 0; i < m.rank; ++i) c.v[j * m.rank + i] = d.m.at(i, j);
    return c;
}

LinearMap derivation_of_automorphism(const Algebra& a_s, const AutR& alpha) {
    const ChainRing& S = a_s.ring();
    const int s = S.precision();
    const int r = alpha.level;
    if (s < 2 * r) fail(Errc::InsufficientPrecision, "derivation of automorphism needs precision >= 2r");
    ChainRing Rw = S.reduced(s - r);
    ChainRing Rr = S.reduced(r);
    Mat diff = mat_sub(alpha.alpha.m, Mat::identity(S, a_s.rank()));
    Mat mu(Rw, a_s.rank(), a_s.rank());
    for (size_t i = 0; i < diff.a.size(); ++i) mu.a[i] = S.exact_div_pi(diff.a[i], r, Rw);

    // Exact identity mu(ab) = a mu(b) + mu(a) b + pi^r mu(a) mu(b) at the
    // working precision s - r.
    Algebra aw = a_s.reduced(s - r);
    for (size_t i = 0; i < aw.rank(); ++i)
        for (size_t j = 0; j < aw.rank(); ++j) {
            std::vector<Elem> scw(aw.rank());
            for (size_t k = 0; k < aw.rank(); ++k) scw[k] = aw.sc(i, j)[k];
            auto lhs = mat_apply(mu, scw);
            auto rhs = vec_add(Rw, aw.mul(aw.basis_vec(i), matrix_col(mu, j)),
                               aw.mul(matrix_col(mu, i), aw.basis_vec(j)));
            auto quad = aw.mul(matrix_col(mu, i), matrix_col(mu, j));
            rhs = vec_add(Rw, rhs, vec_scale(Rw, Rw.pi_pow(r), quad));
            if (lhs != rhs) fail(Errc::Internal, "mu identity fails at working precision");
        }

    LinearMap mubar{reduce_matrix(Rw, mu, Rr)};
    Algebra ar = a_s.reduced(r);
    if (!validate_derivation(ar, mubar)) fail(Errc::Internal, "mu-bar is not a derivation");
    return mubar;
}

InnerResult is_inner(const Algebra& b, const LinearMap& alpha) {
    validate_automorphism(b, alpha);
    const ChainRing& R = b.ring();
    const size_t n = b.rank();
    // alpha(e_i) c - c e_i = 0 for all i, linear in c.
    Mat sys(R, n * n, n);
    for (size_t i = 0; i < n; ++i) {
        Mat block = mat_sub(b.left_mult_matrix(alpha.apply(b.basis_vec(i))),
                            b.right_mult_matrix(b.basis_vec(i)));
        for (size_t r2 = 0; r2 < n; ++r2)
            for (size_t c = 0; c < n; ++c) sys.at(i * n + r2, c) = block.at(r2, c);
    }
    auto sol = solve_affine(sys, std::vector<Elem>(n * n));
    const Mat& ker = sol->kernel;

    uint64_t total = 1;
    std::vector<int> free_exp(ker.rows);
    for (size_t i = 0; i < ker.rows; ++i) {
        size_t lead = 0;
        while (lead < ker.cols && ker.at(i, lead).packed == 0) ++lead;
        int d = R.val(ker.at(i, lead));
        free_exp[i] = R.precision() - d;
        for (int k = 0; k < free_exp[i]; ++k) {
            total *= static_cast<uint64_t>(R.p());
            if (total > (uint64_t{1} << 16)) return InnerResult{InnerResult::Indeterminate, {}};
        }
    }
    std::vector<uint64_t> limits(ker.rows);
    for (size_t i = 0; i < ker.rows; ++i) {
        uint64_t l = 1;
        for (int k = 0; k < free_exp[i]; ++k) l *= static_cast<uint64_t>(R.p());
        limits[i] = l;
    }
    std::vector<uint64_t> idx(ker.rows, 0);
    for (uint64_t count = 0; count < total; ++count) {
        std::vector<Elem> c(n);
        for (size_t i = 0; i < ker.rows; ++i) {
            if (idx[i] == 0) continue;
            Elem coeff{idx[i]};
            for (size_t j = 0; j < n; ++j) c[j] = R.add(c[j], R.mul(coeff, ker.at(i, j)));
        }
        if (!vec_is_zero(c) && b.is_unit_element(c)) return InnerResult{InnerResult::Yes, c};
        for (size_t i = ker.rows; i-- > 0;) {
            if (++idx[i] < limits[i]) break;
            idx[i] = 0;
        }
    }
    return InnerResult{InnerResult::No, {}};
}

std::vector<Elem> class_of_automorphism(const Algebra& a_s, const AutR& alpha, const Cohomology& hh1) {
    LinearMap mubar = derivation_of_automorphism(a_s, alpha);
    Algebra ar = a_s.reduced(alpha.level);
    return hh1.coords_of(cochain_from_derivation(ar, hh1.coefficients, mubar));
}

LiftOutcome lift_automorphism(const Algebra& a_s1, const AutR& alpha_s) {
    const ChainRing& Slow = alpha_s.alpha.m.ring;
    const int s = Slow.precision();
    if (a_s1.ring().precision() < s + 1)
        fail(Errc::BadPrecision, "lift target must have precision >= s + 1");
    Algebra b = a_s1.reduced(s + 1);
    const ChainRing& S = b.ring();
    const size_t n = b.rank();

    Mat ahat = lift_matrix(Slow, alpha_s.alpha.m, S);
    Algebra res = b.reduced(1);
    const ChainRing& F = res.ring();
    Bimodule regres = regular_bimodule(res);

    // Multiplicativity defect of the digit lift, divided by pi^s: a
    // 2-cochain over the residue algebra.
    Cochain defect = zero_cochain(res, regres, 2);
    for (size_t i = 0; i < n; ++i) {
        auto ai = mat_apply(ahat, b.basis_vec(i));
        for (size_t j = 0; j < n; ++j) {
            auto prod = b.mul(ai, mat_apply(ahat, b.basis_vec(j)));
            std::vector<Elem> scv(n);
            for (size_t k = 0; k < n; ++k) scv[k] = b.sc(i, j)[k];
            auto d = vec_sub(S, prod, mat_apply(ahat, scv));
            std::vector<Elem> dres(n);
            for (size_t k = 0; k < n; ++k) dres[k] = S.exact_div_pi(d[k], s, F);
            set_cochain_value(defect, i * n + j, dres);
        }
    }

    // Correction gamma with delta^1(gamma) = -defect lifts alpha.
    Mat d1 = bar_differential_matrix(res, regres, 1);
    std::vector<Elem> rhs(defect.v.size());
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = F.neg(defect.v[i]);
    auto sol = solve_affine(d1, rhs);
    if (!sol) {
        Cohomology hh2 = cohomology(res, regres, 2);
        LiftOutcome out;
        out.lifted = false;
        out.obstruction = hh2.coords_of(defect);
        return out;
    }
    LinearMap gamma = derivation_from_cochain(Cochain{1, n, n, F, sol->x0});
    Mat corrected = ahat;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Elem g = F.lift_elem(gamma.m.at(i, j), S);
            corrected.at(i, j) = S.add(corrected.at(i, j), S.mul(S.pi_pow(s), g));
        }
    LiftOutcome out;
    out.lifted = true;
    out.lifted_matrix = corrected;
    // Validation: the corrected map must be an automorphism at s + 1.
    make_autr(b, corrected, alpha_s.level);
    return out;
}

namespace {

// Per-class layered lifting search.  The state is a matrix M over the ring
// at precision s - r whose digits below `layer` are fixed; alpha = id +
// pi^r M must satisfy F(M) = M(ab) - a M(b) - M(a) b - pi^r M(a) M(b) = 0.
struct LiftSearch {
    const Algebra& aw;       // algebra at precision s - r
    const ChainRing& Rw;
    int r;
    int layers;              // s - r
    const Algebra& res;      // residue algebra
    const ChainRing& F;
    Mat d1;                  // residue bar differential C^1 -> C^2
    RowSolveContext d1solve; // factorized over columns of d1
    std::vector<Mat> branch_reps; // Z^1/B^1 coset representatives (residue matrices)

    LiftSearch(const Algebra& aw_, int r_, const Algebra& res_, const Bimodule& regres)
        : aw(aw_), Rw(aw_.ring()), r(r_), layers(aw_.ring().precision()), res(res_), F(res_.ring()),
          d1(bar_differential_matrix(res_, regres, 1)), d1solve(d1.transpose()) {
        // Coset representatives of inner derivations inside the residue
        // 1-cocycles; branches differing by an inner correction give
        // conjugate lifts and are explored once.
        const size_t n = res.rank();
        Mat z1 = d1solve.kernel();
        std::vector<std::vector<Elem>> inner_rows;
        for (size_t i = 0; i < n; ++i) {
            LinearMap ad = ad_map(res, res.basis_vec(i));
            std::vector<Elem> flat(n * n);
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) flat[j * n + k] = ad.m.at(k, j);
            inner_rows.push_back(std::move(flat));
        }
        Mat acc = Mat::from_rows(F, inner_rows, n * n);
        HowellForm acch = howell_form(acc);
        std::vector<std::vector<Elem>> complement;
        for (size_t i = 0; i < z1.rows; ++i) {
            auto row = z1.row(i);
            if (in_span(acch, row)) continue;
            complement.push_back(row);
            acc = vstack(acch.H, Mat::from_rows(F, {row}, n * n));
            acch = howell_form(acc);
        }
        // All F_p combinations of the complement basis, zero first.
        size_t q = complement.size();
        uint64_t count = 1;
        for (size_t i = 0; i < q; ++i) count *= static_cast<uint64_t>(F.p());
        for (uint64_t c = 0; c < count; ++c) {
            std::vector<Elem> flat(n * n);
            uint64_t rem = c;
            for (size_t i = 0; i < q; ++i) {
                uint64_t digit = rem % static_cast<uint64_t>(F.p());
                rem /= static_cast<uint64_t>(F.p());
                if (digit == 0) continue;
                Elem coeff = F.from_int(static_cast<int64_t>(digit));
                for (size_t k = 0; k < flat.size(); ++k)
                    flat[k] = F.add(flat[k], F.mul(coeff, complement[i][k]));
            }
            Mat rep(F, n, n);
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) rep.at(k, j) = flat[j * n + k];
            branch_reps.push_back(std::move(rep));
        }
    }

    std::vector<Elem> eval_defect(const Mat& M, size_t i, size_t j) const {
        std::vector<Elem> scv(aw.rank());
        for (size_t k = 0; k < aw.rank(); ++k) scv[k] = aw.sc(i, j)[k];
        auto lhs = mat_apply(M, scv);
        auto t2 = aw.mul(aw.basis_vec(i), matrix_col(M, j));
        auto t3 = aw.mul(matrix_col(M, i), aw.basis_vec(j));
        auto quad = aw.mul(matrix_col(M, i), matrix_col(M, j));
        auto rhs = vec_add(Rw, vec_add(Rw, t2, t3), vec_scale(Rw, Rw.pi_pow(r), quad));
        return vec_sub(Rw, lhs, rhs);
    }

    bool dfs(Mat& M, int layer) const {
        if (layer >= layers) return true;
        const size_t n = aw.rank();
        // Residue of F(M)/pi^layer as a 2-cochain target.
        std::vector<Elem> rhs(n * n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                auto d = eval_defect(M, i, j);
                for (size_t k = 0; k < n; ++k) {
                    if (Rw.val(d[k]) < layer) fail(Errc::Internal, "layer invariant broken");
                    int64_t digit = Rw.digit(d[k], layer);
                    rhs[(i * n + j) * n + k] = F.from_int(digit);
                }
            }
        auto base = d1solve.express(rhs);
        if (!base) return false;
        for (const Mat& rep : branch_reps) {
            Mat next = M;
            for (size_t cj = 0; cj < n; ++cj)
                for (size_t ci = 0; ci < n; ++ci) {
                    Elem x = F.add((*base)[cj * n + ci], rep.at(ci, cj));
                    if (x.packed == 0) continue;
                    Elem lifted = F.lift_elem(x, Rw);
                    next.at(ci, cj) = Rw.add(next.at(ci, cj), Rw.mul(Rw.pi_pow(layer), lifted));
                }
            if (dfs(next, layer + 1)) return true;
        }
        return false;
    }
};

std::vector<std::vector<Elem>> group_closure(const Cohomology& hh1,
                                             const std::vector<std::vector<Elem>>& gens) {
    std::vector<std::vector<Elem>> elems;
    elems.push_back(canonical_coords(hh1.pres, std::vector<Elem>(hh1.pres.num_generators())));
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : gens) {
            size_t cur = elems.size();
            for (size_t i = 0; i < cur; ++i) {
                auto sum = class_add(hh1, elems[i], g);
                if (std::find(elems.begin(), elems.end(), sum) == elems.end()) {
                    elems.push_back(sum);
                    grew = true;
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end(), [](const auto& x, const auto& y) {
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i].packed != y[i].packed) return x[i].packed < y[i].packed;
        return false;
    });
    return elems;
}

std::vector<int> abelian_exponents_from_orders(const std::vector<std::vector<Elem>>& elems,
                                               const Cohomology& hh1) {
    // Recover the partition from the counts of elements killed by p^k.
    const ChainRing& R = hh1.pres.ring;
    int64_t p = R.p();
    std::vector<uint64_t> killed; // killed[k] = #{x : p^k x = 0}
    killed.push_back(1);
    int maxk = 0;
    for (const auto& e : elems) {
        auto x = e;
        int k = 0;
        while (!vec_is_zero(x)) {
            std::vector<Elem> px(x.size());
            for (size_t i = 0; i < x.size(); ++i) px[i] = R.mul_int(x[i], p);
            x = canonical_coords(hh1.pres, px);
            ++k;
        }
        maxk = std::max(maxk, k);
    }
    killed.assign(maxk + 1, 0);
    for (const auto& e : elems) {
        auto x = e;
        int k = 0;
        while (!vec_is_zero(x)) {
            std::vector<Elem> px(x.size());
            for (size_t i = 0; i < x.size(); ++i) px[i] = R.mul_int(x[i], p);
            x = canonical_coords(hh1.pres, px);
            ++k;
        }
        for (int j = k; j <= maxk; ++j) ++killed[j];
    }
    // #summands with exponent >= k is log_p(killed[k]/killed[k-1]).
    std::vector<int> exps;
    for (int k = 1; k <= maxk; ++k) {
        uint64_t ratio = killed[k] / killed[k - 1];
        int count = 0;
        while (ratio > 1) { ratio /= static_cast<uint64_t>(p); ++count; }
        for (int c = 0; c < count; ++c) {
            if (static_cast<size_t>(c) >= exps.size()) exps.push_back(0);
        }
        for (int c = 0; c < count; ++c) exps[c] = k;
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

} // namespace

bool ClassSubgroup::contains(const std::vector<Elem>& coords) const {
    return std::find(elements.begin(), elements.end(), coords) != elements.end();
}

ClassSubgroup integrable_subgroup(const Algebra& a, int r, int s, const Cohomology& hh1) {
    if (r < 1 || s < 2 * r || s > a.ring().precision())
        fail(Errc::BadPrecision, "integrable subgroup needs 2r <= s <= precision");
    const size_t k = hh1.pres.num_generators();
    Algebra aw = a.reduced(s - r);
    Algebra res = a.reduced(1);
    Bimodule regres = regular_bimodule(res);
    LiftSearch search(aw, r, res, regres);

    auto liftable = [&](const std::vector<Elem>& coords) {
        Cochain rep = hh1.representative(coords);
        LinearMap mu = derivation_from_cochain(rep);
        Mat M = lift_matrix(hh1.pres.ring, mu.m, aw.ring());
        return search.dfs(M, r);
    };

    // Enumerate canonical coordinates; exploit the subgroup structure: a
    // refuted representative refutes its whole coset.
    std::vector<uint64_t> limits(k);
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) {
        uint64_t l = 1;
        for (int e = 0; e < hh1.pres.exponents[i]; ++e) l *= static_cast<uint64_t>(hh1.pres.ring.p());
        limits[i] = l;
        total *= l;
    }
    std::vector<std::vector<Elem>> generators;
    auto members = group_closure(hh1, generators);
    std::vector<std::vector<Elem>> refuted;

    std::vector<uint64_t> idx(k, 0);
    for (uint64_t count = 0; count < total; ++count) {
        std::vector<Elem> coords(k);
        for (size_t i = 0; i < k; ++i) coords[i] = Elem{idx[i]};
        bool skip = std::find(members.begin(), members.end(), coords) != members.end();
        if (!skip) {
            for (const auto& q : refuted) {
                auto diff = class_add(hh1, coords, class_neg(hh1, q));
                if (std::find(members.begin(), members.end(), diff) != members.end()) { skip = true; break; }
            }
        }
        if (!skip) {
            if (liftable(coords)) {
                generators.push_back(coords);
                members = group_closure(hh1, generators);
            } else {
                refuted.push_back(coords);
            }
        }
        for (size_t i = k; i-- > 0;) {
            if (++idx[i] < limits[i]) break;
            idx[i] = 0;
        }
    }

    ClassSubgroup out;
    out.elements = members;
    out.abelian_exponents = abelian_exponents_from_orders(members, hh1);
    // Greedy minimal generating set in deterministic order: largest order first.
    {
        std::vector<std::vector<Elem>> pool = members;
        std::stable_sort(pool.begin(), pool.end(), [&](const auto& x, const auto& y) {
            auto order_of = [&](std::vector<Elem> v) {
                int k2 = 0;
                while (!vec_is_zero(v)) {
                    std::vector<Elem> pv(v.size());
                    for (size_t i = 0; i < v.size(); ++i) pv[i] = hh1.pres.ring.mul_int(v[i], hh1.pres.ring.p());
                    v = canonical_coords(hh1.pres, pv);
                    ++k2;
                }
                return k2;
            };
            return order_of(x) > order_of(y);
        });
        std::vector<std::vector<Elem>> gens;
        auto span = group_closure(hh1, gens);
        for (const auto& x : pool) {
            if (span.size() == members.size()) break;
            if (std::find(span.begin(), span.end(), x) != span.end()) continue;
            gens.push_back(x);
            span = group_closure(hh1, gens);
        }
        out.generators = gens;
    }
    // Module closure under all ring scalars; guaranteed when r = 1.
    out.module_closed = true;
    for (const auto& x : out.elements) {
        for (uint64_t l = 0; l < hh1.pres.ring.size() && out.module_closed; ++l) {
            std::vector<Elem> sx(x.size());
            for (size_t i = 0; i < x.size(); ++i) sx[i] = hh1.pres.ring.mul(Elem{l}, x[i]);
            if (!out.contains(canonical_coords(hh1.pres, sx))) out.module_closed = false;
        }
        if (!out.module_closed) break;
    }
    if (out.module_closed) {
        Mat rows = Mat::from_rows(hh1.pres.ring, out.generators.empty()
                                                     ? std::vector<std::vector<Elem>>{}
                                                     : out.generators,
                                  k);
        out.lattice = class_lattice(hh1, rows);
    }
    return out;
}

IntegrableChain integrable_chain(const Algebra& a, int r, int s_max, const Cohomology& hh1) {
    if (s_max < 2 * r || s_max > a.ring().precision())
        fail(Errc::BadPrecision, "chain needs 2r <= s_max <= precision");
    IntegrableChain chain;
    chain.r = r;
    for (int s = 2 * r; s <= s_max; ++s)
        chain.levels.emplace_back(s, integrable_subgroup(a, r, s, hh1));
    for (size_t i = 0; i + 1 < chain.levels.size(); ++i) {
        const auto& big = chain.levels[i].second;
        const auto& small = chain.levels[i + 1].second;
        for (const auto& x : small.elements)
            if (!big.contains(x)) chain.inclusions_ok = false;
    }
    const auto& last = chain.levels.back().second;
    for (size_t i = 0; i < chain.levels.size(); ++i) {
        bool same = chain.levels[i].second.elements == last.elements;
        if (same) {
            chain.stable_from = chain.levels[i].first;
            break;
        }
    }
    return chain;
}

IntegrableChain integrable_chain(const Algebra& a, int r, int s_max) {
    Algebra ar = a.reduced(r);
    Cohomology hh1 = cohomology(ar, regular_bimodule(ar), 1);
    return integrable_chain(a, r, s_max, hh1);
}

std::vector<Elem> ext_pullback_class(const Algebra& a_s, const AutR& alpha, const Cohomology& hh1) {
    const int r = alpha.level;
    if (a_s.ring().precision() < 2 * r)
        fail(Errc::InsufficientPrecision, "pullback class needs precision >= 2r");
    Algebra b = a_s.reduced(2 * r);
    const ChainRing& S = b.ring();
    ChainRing R = S.reduced(r);
    const size_t n = b.rank();
    Mat am = reduce_matrix(a_s.ring(), alpha.alpha.m, S);
    AutR ared = make_autr(b, am, r);

    // X = {(u, v) : u - v in pi^r A} inside (A/pi^2r)_alpha (+) A/pi^2r.
    // sigma(u, v) = ((u - v)/pi^r, v mod pi^r) splits X/pi^r X into the Y
    // and Z copies of A/pi^r as left modules.
    auto sigma = [&](const std::vector<Elem>& u, const std::vector<Elem>& v) {
        std::vector<Elem> y(n), z(n);
        for (size_t i = 0; i < n; ++i) {
            Elem d = S.sub(u[i], v[i]);
            if (S.val(d) < r) fail(Errc::Internal, "pair is outside the pullback module");
            y[i] = S.exact_div_pi(d, r, R);
            z[i] = S.reduce_elem(v[i], R);
        }
        return std::make_pair(y, z);
    };

    // Right action of e_j on the image of (1, 1): in X it is
    // (alpha(e_j), e_j); its Y component is the read-off defect.
    Mat nu(R, n, n);
    for (size_t j = 0; j < n; ++j) {
        auto u = b.mul(b.unit(), ared.alpha.apply(b.basis_vec(j)));
        auto v = b.mul(b.unit(), b.basis_vec(j));
        auto [y, z] = sigma(u, v);
        std::vector<Elem> ered(n);
        for (size_t i = 0; i < n; ++i) ered[i] = S.reduce_elem(v[i], R);
        if (z != ered) fail(Errc::Internal, "Z copy not preserved modulo Y");
        for (size_t i = 0; i < n; ++i) nu.at(i, j) = y[i];
    }
    Algebra ar = a_s.reduced(r);
    LinearMap defect{nu};
    if (!validate_derivation(ar, defect)) fail(Errc::Internal, "right-action defect is not a derivation");
    // The extension convention reads the second-copy action as
    // (0,1).a = (-mu(a), a); the class of the sequence is that of -nu.
    Mat neg(R, n, n);
    for (size_t i = 0; i < n * n; ++i) neg.a[i] = R.neg(nu.a[i]);
    return hh1.coords_of(cochain_from_derivation(ar, hh1.coefficients, LinearMap{neg}));
}

bool preserves_ideal(const Algebra& abar, const LinearMap& d, const Mat& ideal_generators) {
    if (!validate_derivation(abar, d)) fail(Errc::ValidationError, "map is not a derivation");
    HowellForm h = howell_form(ideal_generators);
    for (size_t g = 0; g < h.H.rows; ++g) {
        auto row = h.H.row(g);
        for (size_t i = 0; i < abar.rank(); ++i) {
            if (!in_span(h, abar.mul(abar.basis_vec(i), row)) ||
                !in_span(h, abar.mul(row, abar.basis_vec(i))))
                fail(Errc::NotAnIdeal, "generators do not span a two-sided ideal");
        }
    }
    for (size_t g = 0; g < ideal_generators.rows; ++g)
        if (!in_span(h, d.apply(ideal_generators.row(g)))) return false;
    return true;
}

} // namespace hochkit
