#include "hochkit/hochschild.hpp"

namespace hochkit {

namespace {

constexpr int kMaxDegree = 3;

void check_degree(int degree) {
    if (degree < 0 || degree > kMaxDegree)
        fail(Errc::DegreeTooHigh, "bar complex degree capped at " + std::to_string(kMaxDegree));
}

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

size_t cochain_dim(size_t algrank, size_t mrank, int degree) {
    return static_cast<size_t>(ipow(algrank, degree)) * mrank;
}

size_t tuple_index(size_t algrank, const std::vector<size_t>& tuple) {
    size_t idx = 0;
    for (size_t t : tuple) idx = idx * algrank + t;
    return idx;
}

Cochain zero_cochain(const Algebra& a, const Bimodule& m, int degree) {
    check_degree(degree);
    Cochain c;
    c.degree = degree;
    c.algrank = a.rank();
    c.mrank = m.rank;
    c.ring = m.ring;
    c.v.assign(cochain_dim(a.rank(), m.rank, degree), Elem{});
    return c;
}

std::vector<Elem> cochain_value(const Cochain& c, size_t tuple_idx) {
    return std::vector<Elem>(c.v.begin() + tuple_idx * c.mrank, c.v.begin() + (tuple_idx + 1) * c.mrank);
}

void set_cochain_value(Cochain& c, size_t tuple_idx, const std::vector<Elem>& val) {
    std::copy(val.begin(), val.end(), c.v.begin() + tuple_idx * c.mrank);
}

Mat bar_differential_matrix(const Algebra& a, const Bimodule& m, int degree) {
    check_degree(degree);
    const ChainRing& R = m.ring;
    const size_t n = a.rank();
    const size_t rows = cochain_dim(n, m.rank, degree + 1);
    const size_t cols = cochain_dim(n, m.rank, degree);
    Mat D(R, rows, cols);

    std::vector<size_t> T(degree + 1, 0);
    size_t num_out = ipow(n, degree + 1);
    for (size_t out = 0; out < num_out; ++out) {
        size_t rem = out;
        for (int k = degree; k >= 0; --k) {
            T[k] = rem % n;
            rem /= n;
        }
        const size_t rbase = out * m.rank;

        auto add_block = [&](size_t col_tuple, const Mat& block, bool negate) {
            const size_t cbase = col_tuple * m.rank;
            for (size_t i = 0; i < m.rank; ++i)
                for (size_t j = 0; j < m.rank; ++j) {
                    Elem e = block.at(i, j);
                    if (e.packed == 0) continue;
                    Elem& dst = D.at(rbase + i, cbase + j);
                    dst = negate ? R.sub(dst, e) : R.add(dst, e);
                }
        };
        auto add_scaled_identity = [&](size_t col_tuple, Elem scale, bool negate) {
            if (scale.packed == 0) return;
            const size_t cbase = col_tuple * m.rank;
            for (size_t i = 0; i < m.rank; ++i) {
                Elem& dst = D.at(rbase + i, cbase + i);
                dst = negate ? R.sub(dst, scale) : R.add(dst, scale);
            }
        };

        // a_1 . c(a_2, ..., a_{n+1})
        {
            size_t col_tuple = 0;
            for (int k = 1; k <= degree; ++k) col_tuple = col_tuple * n + T[k];
            add_block(col_tuple, m.left[T[0]], false);
        }
        // (-1)^i c(..., a_i a_{i+1}, ...)
        for (int i = 1; i <= degree; ++i) {
            const std::vector<Elem>& prod = a.sc(T[i - 1], T[i]);
            bool neg = (i % 2) == 1;
            for (size_t l = 0; l < n; ++l) {
                Elem coeff = a.ring().reduce_elem(prod[l], R);
                if (coeff.packed == 0) continue;
                size_t col_tuple = 0;
                for (int k = 0; k <= degree; ++k) {
                    if (k == i - 1) col_tuple = col_tuple * n + l;
                    else if (k == i) continue;
                    else col_tuple = col_tuple * n + T[k];
                }
                add_scaled_identity(col_tuple, coeff, neg);
            }
        }
        // (-1)^{n+1} c(a_1, ..., a_n) . a_{n+1}
        {
            size_t col_tuple = 0;
            for (int k = 0; k < degree; ++k) col_tuple = col_tuple * n + T[k];
            add_block(col_tuple, m.right[T[degree]], ((degree + 1) % 2) == 1);
        }
    }
    return D;
}

Cochain bar_differential(const Algebra& a, const Bimodule& m, const Cochain& c) {
    Mat D = bar_differential_matrix(a, m, c.degree);
    // The cap applies to the input degree; a degree-4 result is a valid
    // intermediate value (needed for ker of the degree-3 differential).
    Cochain out;
    out.degree = c.degree + 1;
    out.algrank = a.rank();
    out.mrank = m.rank;
    out.ring = m.ring;
    out.v = mat_apply(D, c.v);
    return out;
}

Cohomology cohomology(const Algebra& a, const Bimodule& m, int degree) {
    check_degree(degree);
    validate_bimodule(a, m);
    Cohomology h;
    h.algebra = a;
    h.coefficients = m;
    h.degree = degree;

    Mat Dn = bar_differential_matrix(a, m, degree);
    h.cocycles = row_kernel(Dn.transpose());
    if (degree == 0) {
        h.coboundaries = Mat(m.ring, 0, cochain_dim(a.rank(), m.rank, 0));
    } else {
        Mat Dprev = bar_differential_matrix(a, m, degree - 1);
        h.coboundaries = howell_form(Dprev.transpose()).H;
    }
    h.pres = subquotient_presentation(h.cocycles, h.coboundaries);
    for (size_t i = 0; i < h.pres.num_generators(); ++i) {
        Cochain c = zero_cochain(a, m, degree);
        c.v = h.pres.generators.row(i);
        h.basis.push_back(std::move(c));
    }
    return h;
}

bool Cohomology::is_cocycle(const Cochain& c) const {
    Mat D = bar_differential_matrix(algebra, coefficients, degree);
    return vec_is_zero(mat_apply(D, c.v));
}

std::vector<Elem> Cohomology::coords_of(const Cochain& cocycle) const {
    return presentation_coordinates(pres, coboundaries, cocycle.v);
}

Cochain Cohomology::representative(const std::vector<Elem>& coords) const {
    Cochain c = zero_cochain(algebra, coefficients, degree);
    c.v = row_times_mat(coords, pres.generators);
    return c;
}

std::vector<Elem> class_add(const Cohomology& h, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    return canonical_coords(h.pres, vec_add(h.pres.ring, x, y));
}

std::vector<Elem> class_neg(const Cohomology& h, const std::vector<Elem>& x) {
    std::vector<Elem> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = h.pres.ring.neg(x[i]);
    return canonical_coords(h.pres, std::move(r));
}

Cochain cup_product(const Algebra& amb, const Cochain& f, const Cochain& g) {
    int degree = f.degree + g.degree;
    check_degree(degree);
    const size_t n = f.algrank;
    if (f.mrank != n || g.mrank != n)
        fail(Errc::ValidationError, "cup product needs regular-type coefficients");
    const ChainRing& R = f.ring;
    Cochain out;
    out.degree = degree;
    out.algrank = n;
    out.mrank = n;
    out.ring = R;
    out.v.assign(cochain_dim(n, n, degree), Elem{});

    Algebra ar = amb.ring().precision() == R.precision() ? amb : amb.reduced(R.precision());
    size_t nf = ipow(n, f.degree), ng = ipow(n, g.degree);
    for (size_t tf = 0; tf < nf; ++tf) {
        auto vf = cochain_value(f, tf);
        if (vec_is_zero(vf)) continue;
        for (size_t tg = 0; tg < ng; ++tg) {
            auto vg = cochain_value(g, tg);
            if (vec_is_zero(vg)) continue;
            set_cochain_value(out, tf * ng + tg, ar.mul(vf, vg));
        }
    }
    return out;
}

namespace {

Cochain lift_cochain(const Algebra& a2r, const Bimodule& target_m, const Cochain& c) {
    Cochain out = zero_cochain(a2r, target_m, c.degree);
    for (size_t i = 0; i < c.v.size(); ++i) out.v[i] = c.ring.lift_elem(c.v[i], target_m.ring);
    return out;
}

Cochain divide_cochain(const Algebra& a2r, const Bimodule& low_m, const Cochain& c, int r) {
    Cochain out = zero_cochain(a2r, low_m, c.degree);
    for (size_t i = 0; i < c.v.size(); ++i) out.v[i] = c.ring.exact_div_pi(c.v[i], r, low_m.ring);
    return out;
}

} // namespace

Cochain bockstein_cochain(const Algebra& a2r, int r, const Cochain& rep) {
    if (a2r.ring().precision() != 2 * r)
        fail(Errc::InsufficientPrecision, "bockstein needs the algebra at precision exactly 2r");
    check_degree(rep.degree + 1);
    Bimodule m2r = regular_bimodule(a2r);
    Bimodule mr = reduced_regular_bimodule(a2r, r);
    Cochain lifted = lift_cochain(a2r, m2r, rep);
    Cochain diff = bar_differential(a2r, m2r, lifted);
    return divide_cochain(a2r, mr, diff, r);
}

Cochain twisted_bockstein_cochain(const Algebra& a2r, int r, const LinearMap& alpha) {
    if (a2r.ring().precision() != 2 * r)
        fail(Errc::InsufficientPrecision, "twisted bockstein needs the algebra at precision exactly 2r");
    const ChainRing& S = a2r.ring();
    for (size_t i = 0; i < a2r.rank(); ++i) {
        auto diff = vec_sub(S, alpha.apply(a2r.basis_vec(i)), a2r.basis_vec(i));
        for (const Elem& e : diff)
            if (S.val(e) < r) fail(Errc::NotIdentityModPiR, "automorphism does not induce id at precision r");
    }
    Bimodule malpha = twisted_bimodule(a2r, alpha, 2 * r);
    Bimodule mr = reduced_regular_bimodule(a2r, r);
    // 0-cochain: the canonical lift of 1 in (A/pi^2r)_alpha.
    Cochain v = zero_cochain(a2r, malpha, 0);
    v.v = a2r.unit();
    Cochain diff = bar_differential(a2r, malpha, v);
    // Degree-0 connecting with the Koszul sign: the first cochain
    // differential of this sequence is precomposition with -delta_1.
    for (Elem& e : diff.v) e = S.neg(e);
    return divide_cochain(a2r, mr, diff, r);
}

Mat relation_lattice(const ModulePresentation& pres) {
    const ChainRing& R = pres.ring;
    size_t k = pres.num_generators();
    Mat rel(R, k, k);
    for (size_t i = 0; i < k; ++i) rel.at(i, i) = R.pi_pow(pres.exponents[i]);
    return howell_form(rel).H;
}

Mat class_lattice(const Cohomology& h, const Mat& rows) {
    return howell_form(vstack(rows, relation_lattice(h.pres))).H;
}

Mat class_map_kernel_lattice(const Cohomology& src, const Cohomology& tgt, const Mat& images) {
    const ChainRing& Rs = src.pres.ring;
    const ChainRing& Rt = tgt.pres.ring;
    size_t k = src.pres.num_generators();
    size_t l = tgt.pres.num_generators();
    // c in kernel iff c * images lies in the target relation lattice:
    // row-kernel of [images; RelT] projected to the first k coordinates.
    Mat relT = relation_lattice(tgt.pres);
    Mat stacked(Rt, k + relT.rows, l);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < l; ++j) stacked.at(i, j) = images.at(i, j);
    for (size_t i = 0; i < relT.rows; ++i)
        for (size_t j = 0; j < l; ++j) stacked.at(k + i, j) = relT.at(i, j);
    Mat kern = row_kernel(stacked);
    // Coefficients were solved over the target ring; carry them back into
    // source coordinates.  Scalar actions on both presentations factor
    // through the torsion exponents, so truncation resp. lifting is exact.
    std::vector<std::vector<Elem>> proj;
    for (size_t i = 0; i < kern.rows; ++i) {
        auto full = kern.row(i);
        std::vector<Elem> c(full.begin(), full.begin() + k);
        if (Rt.precision() > Rs.precision())
            for (Elem& e : c) e = Rt.reduce_elem(e, Rs);
        else if (Rt.precision() < Rs.precision())
            for (Elem& e : c) e = Rt.lift_elem(e, Rs);
        proj.push_back(std::move(c));
    }
    if (Rt.precision() < Rs.precision()) {
        // Preimage of the reduction Rs^k -> Rt^k also contains pi^{Nt} Rs^k.
        for (size_t i = 0; i < k; ++i) {
            std::vector<Elem> row(k);
            row[i] = Rs.pi_pow(Rt.precision());
            proj.push_back(std::move(row));
        }
    }
    Mat projm = Mat::from_rows(Rs, proj, k);
    return howell_form(vstack(projm, relation_lattice(src.pres))).H;
}

LesReport les_exactness_report(const Algebra& a, int r, int max_degree) {
    if (a.ring().precision() < 2 * r)
        fail(Errc::InsufficientPrecision, "les report needs precision >= 2r");
    if (max_degree + 1 > kMaxDegree)
        fail(Errc::DegreeTooHigh, "les report capped at degree " + std::to_string(kMaxDegree - 1));
    Algebra b = a.reduced(2 * r);
    const ChainRing& S = b.ring();
    Bimodule m1 = reduced_regular_bimodule(b, r);
    Bimodule m2 = regular_bimodule(b);

    std::vector<Cohomology> h1, h2;
    for (int n = 0; n <= max_degree + 1; ++n) {
        h1.push_back(cohomology(b, m1, n));
        if (n <= max_degree) h2.push_back(cohomology(b, m2, n));
    }

    auto iota_images = [&](int n) {
        // HH^n(A/pi^r) -> HH^n(A/pi^2r): values times pi^r.
        Mat img(S, h1[n].pres.num_generators(), h2[n].pres.num_generators());
        for (size_t i = 0; i < h1[n].basis.size(); ++i) {
            Cochain c = zero_cochain(b, m2, n);
            for (size_t j = 0; j < c.v.size(); ++j) {
                Elem lifted = m1.ring.lift_elem(h1[n].basis[i].v[j], S);
                c.v[j] = S.mul(S.pi_pow(r), lifted);
            }
            img.set_row(i, h2[n].coords_of(c));
        }
        return img;
    };
    auto rho_images = [&](int n) {
        Mat img(m1.ring, h2[n].pres.num_generators(), h1[n].pres.num_generators());
        for (size_t i = 0; i < h2[n].basis.size(); ++i) {
            Cochain c = zero_cochain(b, m1, n);
            for (size_t j = 0; j < c.v.size(); ++j) c.v[j] = S.reduce_elem(h2[n].basis[i].v[j], m1.ring);
            img.set_row(i, h1[n].coords_of(c));
        }
        return img;
    };
    auto delta_images = [&](int n) {
        Mat img(m1.ring, h1[n].pres.num_generators(), h1[n + 1].pres.num_generators());
        for (size_t i = 0; i < h1[n].basis.size(); ++i)
            img.set_row(i, h1[n + 1].coords_of(bockstein_cochain(b, r, h1[n].basis[i])));
        return img;
    };

    LesReport rep;
    for (int n = 0; n <= max_degree; ++n) {
        Mat iota = iota_images(n);
        Mat rho = rho_images(n);
        Mat delta = delta_images(n);

        {
            // exactness at HH^n(A/pi^r): ker(iota_n) = im(delta_{n-1})
            Mat ker = class_map_kernel_lattice(h1[n], h2[n], iota);
            Mat im = (n == 0) ? relation_lattice(h1[0].pres)
                              : class_lattice(h1[n], delta_images(n - 1));
            rep.nodes.push_back({n, 0, h1[n].order(), ker == im});
        }
        {
            // exactness at HH^n(A/pi^2r): ker(rho_n) = im(iota_n)
            Mat ker = class_map_kernel_lattice(h2[n], h1[n], rho);
            Mat im = class_lattice(h2[n], iota);
            rep.nodes.push_back({n, 1, h2[n].order(), ker == im});
        }
        {
            // exactness at the second HH^n(A/pi^r): ker(delta_n) = im(rho_n)
            Mat ker = class_map_kernel_lattice(h1[n], h1[n + 1], delta);
            Mat im = class_lattice(h1[n], rho);
            rep.nodes.push_back({n, 2, h1[n].order(), ker == im});
        }
    }
    for (const LesNode& nd : rep.nodes) rep.all_exact = rep.all_exact && nd.exact;
    return rep;
}

LevelCompareResult level_compare(const Algebra& a, int r, int s1, int s2, int degree) {
    if (r < 1 || s1 < r || s2 < r || s1 > a.ring().precision() || s2 > a.ring().precision())
        fail(Errc::BadPrecision, "level_compare needs r <= s1, s2 <= precision");
    check_degree(degree);
    auto side = [&](int s) {
        Algebra as = a.reduced(s);
        Bimodule m = reduced_regular_bimodule(as, r);
        return cohomology(as, m, degree).pres;
    };
    ModulePresentation lhs = side(s1);
    ModulePresentation rhs = side(s2);
    return LevelCompareResult{lhs.exponents == rhs.exponents, lhs, rhs};
}

PiShiftResult pi_shift_hh1(const Algebra& a, int r) {
    if (a.ring().precision() < r + 1)
        fail(Errc::InsufficientPrecision, "pi shift needs precision >= r + 1");
    Algebra b = a.reduced(r + 1);
    Bimodule mlow = reduced_regular_bimodule(b, r);
    Bimodule mhigh = regular_bimodule(b);
    Cohomology src = cohomology(b, mlow, 1);
    Cohomology tgt = cohomology(b, mhigh, 1);
    Mat img(tgt.pres.ring, src.pres.num_generators(), tgt.pres.num_generators());
    for (size_t i = 0; i < src.basis.size(); ++i) {
        Cochain c = zero_cochain(b, mhigh, 1);
        for (size_t j = 0; j < c.v.size(); ++j) {
            Elem lifted = mlow.ring.lift_elem(src.basis[i].v[j], b.ring());
            c.v[j] = b.ring().mul(b.ring().pi(), lifted);
        }
        img.set_row(i, tgt.coords_of(c));
    }
    Mat ker = class_map_kernel_lattice(src, tgt, img);
    bool inj = (ker == relation_lattice(src.pres));
    return PiShiftResult{std::move(img), inj, std::move(src), std::move(tgt)};
}

} // namespace hochkit
