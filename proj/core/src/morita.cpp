#include "hochkit/morita.hpp"

#include <algorithm>

namespace hochkit {

MoritaContext make_morita(const Algebra& a, int n) {
    MoritaContext ctx;
    ctx.base = a;
    ctx.n = n;
    ctx.matrix = Algebra::matrix_algebra(a, n);
    ctx.corner.assign(ctx.matrix.rank(), Elem{});
    // e = E_11 (x) 1
    for (size_t i = 0; i < a.rank(); ++i) ctx.corner[i] = a.unit()[i];
    auto e2 = ctx.matrix.mul(ctx.corner, ctx.corner);
    if (e2 != ctx.corner) fail(Errc::Internal, "corner element is not idempotent");
    return ctx;
}

namespace {

size_t mat_index(const MoritaContext& ctx, size_t u, size_t v, size_t i) {
    return (u * static_cast<size_t>(ctx.n) + v) * ctx.base.rank() + i;
}

} // namespace

LinearMap transfer_derivation(const MoritaContext& ctx, const LinearMap& d) {
    const ChainRing& R = d.m.ring;
    const size_t r = ctx.base.rank();
    const size_t nn = static_cast<size_t>(ctx.n);
    Mat big(R, ctx.matrix.rank(), ctx.matrix.rank());
    for (size_t u = 0; u < nn; ++u)
        for (size_t v = 0; v < nn; ++v)
            for (size_t j = 0; j < r; ++j)
                for (size_t i = 0; i < r; ++i)
                    big.at(mat_index(ctx, u, v, i), mat_index(ctx, u, v, j)) = d.m.at(i, j);
    LinearMap out{std::move(big)};
    int prec = R.precision();
    Algebra mat_at = ctx.matrix.ring().precision() == prec ? ctx.matrix : ctx.matrix.reduced(prec);
    if (!validate_derivation(mat_at, out)) fail(Errc::Internal, "transferred map fails Leibniz");
    return out;
}

LinearMap corner_derivation(const MoritaContext& ctx, const LinearMap& big) {
    const ChainRing& R = big.m.ring;
    const size_t r = ctx.base.rank();
    Algebra mat_at = ctx.matrix.ring().precision() == R.precision() ? ctx.matrix : ctx.matrix.reduced(R.precision());
    Algebra base_at = ctx.base.ring().precision() == R.precision() ? ctx.base : ctx.base.reduced(R.precision());
    std::vector<Elem> e(mat_at.rank());
    for (size_t i = 0; i < ctx.corner.size(); ++i) e[i] = ctx.matrix.ring().reduce_elem(ctx.corner[i], R);
    Mat small(R, r, r);
    for (size_t j = 0; j < r; ++j) {
        // a = E_11 (x) e_j sits in the corner; compress e D(e a e) e.
        std::vector<Elem> a(mat_at.rank());
        a[j] = R.one();
        auto img = big.apply(mat_at.mul(e, mat_at.mul(a, e)));
        img = mat_at.mul(e, mat_at.mul(img, e));
        // read off the (1,1) block, which is A
        for (size_t i = 0; i < r; ++i) small.at(i, j) = img[i];
    }
    LinearMap out{std::move(small)};
    if (!validate_derivation(base_at, out)) fail(Errc::Internal, "corner compression fails Leibniz");
    return out;
}

Mat transfer_class_matrix(const MoritaContext& ctx, const Cohomology& hh1_base, const Cohomology& hh1_matrix) {
    Mat img(hh1_matrix.pres.ring, hh1_base.pres.num_generators(), hh1_matrix.pres.num_generators());
    int prec = hh1_base.pres.ring.precision();
    Algebra mat_at = ctx.matrix.reduced(prec);
    for (size_t i = 0; i < hh1_base.basis.size(); ++i) {
        LinearMap d = derivation_from_cochain(hh1_base.basis[i]);
        LinearMap big = transfer_derivation(ctx, d);
        img.set_row(i, hh1_matrix.coords_of(cochain_from_derivation(mat_at, hh1_matrix.coefficients, big)));
    }
    return img;
}

MoritaReport morita_invariance_report(const Algebra& a, int r, int s_max, int n) {
    MoritaContext ctx = make_morita(a, n);
    Algebra abar = a.reduced(r);
    Algebra mbar = ctx.matrix.reduced(r);
    Cohomology hh1_base = cohomology(abar, regular_bimodule(abar), 1);
    Cohomology hh1_matrix = cohomology(mbar, regular_bimodule(mbar), 1);

    MoritaReport rep;
    rep.base_chain = integrable_chain(a, r, s_max, hh1_base);
    rep.matrix_chain = integrable_chain(ctx.matrix, r, s_max, hh1_matrix);

    Mat tm = transfer_class_matrix(ctx, hh1_base, hh1_matrix);
    // Group isomorphism check: order match plus trivial kernel.
    Mat ker = class_map_kernel_lattice(hh1_base, hh1_matrix, tm);
    bool injective = (ker == relation_lattice(hh1_base.pres));
    rep.transfer_bijective = injective && hh1_base.order() == hh1_matrix.order();

    auto transfer_coords = [&](const std::vector<Elem>& coords) {
        return canonical_coords(hh1_matrix.pres, row_times_mat(coords, tm));
    };
    for (size_t lvl = 0; lvl < rep.base_chain.levels.size(); ++lvl) {
        int s = rep.base_chain.levels[lvl].first;
        const ClassSubgroup& ls_a = rep.base_chain.levels[lvl].second;
        const ClassSubgroup& ls_m = rep.matrix_chain.levels[lvl].second;
        std::vector<std::vector<Elem>> mapped;
        for (const auto& x : ls_a.elements) mapped.push_back(transfer_coords(x));
        std::sort(mapped.begin(), mapped.end(), [](const auto& x, const auto& y) {
            for (size_t i = 0; i < x.size(); ++i)
                if (x[i].packed != y[i].packed) return x[i].packed < y[i].packed;
            return false;
        });
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        bool match = (mapped == ls_m.elements);
        rep.level_match.emplace_back(s, match);
        rep.all_match = rep.all_match && match;
    }
    rep.all_match = rep.all_match && rep.transfer_bijective;
    return rep;
}

} // namespace hochkit
