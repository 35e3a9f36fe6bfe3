#include "hochkit/linalg.hpp"

#include <algorithm>
#include <deque>

namespace hochkit {

Mat Mat::identity(const ChainRing& r, size_t n) {
    Mat m(r, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = r.one();
    return m;
}

Mat Mat::from_rows(const ChainRing& r, const std::vector<std::vector<Elem>>& rows, size_t cols) {
    Mat m(r, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

std::vector<Elem> Mat::row(size_t i) const {
    return std::vector<Elem>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void Mat::set_row(size_t i, const std::vector<Elem>& v) {
    std::copy(v.begin(), v.end(), a.begin() + i * cols);
}

Mat Mat::transpose() const {
    Mat t(ring, cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Mat::is_zero() const {
    for (const Elem& x : a)
        if (x.packed != 0) return false;
    return true;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    const ChainRing& R = x.ring;
    Mat r(R, x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            Elem s = x.at(i, k);
            if (s.packed == 0) continue;
            for (size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = R.add(r.at(i, j), R.mul(s, y.at(k, j)));
        }
    return r;
}

std::vector<Elem> mat_apply(const Mat& m, const std::vector<Elem>& x) {
    const ChainRing& R = m.ring;
    std::vector<Elem> r(m.rows);
    for (size_t j = 0; j < m.cols; ++j) {
        if (x[j].packed == 0) continue;
        for (size_t i = 0; i < m.rows; ++i)
            r[i] = R.add(r[i], R.mul(m.at(i, j), x[j]));
    }
    return r;
}

std::vector<Elem> row_times_mat(const std::vector<Elem>& x, const Mat& m) {
    const ChainRing& R = m.ring;
    std::vector<Elem> r(m.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        if (x[i].packed == 0) continue;
        for (size_t j = 0; j < m.cols; ++j)
            r[j] = R.add(r[j], R.mul(x[i], m.at(i, j)));
    }
    return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.ring.add(x.a[i], y.a[i]);
    return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.ring.sub(x.a[i], y.a[i]);
    return r;
}

Mat mat_scale(const Mat& x, Elem s) {
    Mat r = x;
    for (Elem& e : r.a) e = x.ring.mul(e, s);
    return r;
}

Mat vstack(const Mat& top, const Mat& bottom) {
    Mat r(top.ring, top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), r.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), r.a.begin() + top.a.size());
    return r;
}

std::vector<Elem> vec_add(const ChainRing& R, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    std::vector<Elem> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = R.add(x[i], y[i]);
    return r;
}

std::vector<Elem> vec_sub(const ChainRing& R, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    std::vector<Elem> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = R.sub(x[i], y[i]);
    return r;
}

std::vector<Elem> vec_scale(const ChainRing& R, Elem s, const std::vector<Elem>& x) {
    std::vector<Elem> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = R.mul(s, x[i]);
    return r;
}

bool vec_is_zero(const std::vector<Elem>& x) {
    for (const Elem& e : x)
        if (e.packed != 0) return false;
    return true;
}

namespace {

void row_axpy(const ChainRing& R, std::vector<Elem>& dst, Elem m, const std::vector<Elem>& src) {
    for (size_t j = 0; j < dst.size(); ++j)
        dst[j] = R.sub(dst[j], R.mul(m, src[j]));
}

} // namespace

HowellForm howell_form(const Mat& m) {
    const ChainRing& R = m.ring;
    const int N = R.precision();
    std::deque<std::vector<Elem>> work;
    for (size_t i = 0; i < m.rows; ++i) {
        auto r = m.row(i);
        if (!vec_is_zero(r)) work.push_back(std::move(r));
    }
    std::vector<std::vector<Elem>> result;
    std::vector<PivotInfo> pivots;
    for (size_t col = 0; col < m.cols; ++col) {
        // All rows in `work` have zeros in columns < col.
        int best = -1, bestval = N;
        for (size_t i = 0; i < work.size(); ++i) {
            int v = R.val(work[i][col]);
            if (v < bestval) { bestval = v; best = static_cast<int>(i); }
        }
        if (best < 0) continue;
        std::vector<Elem> row = std::move(work[best]);
        work.erase(work.begin() + best);
        int d = bestval;
        Elem unit = R.shift_down(row[col], d);
        Elem uinv = R.unit_inverse(unit);
        for (Elem& e : row) e = R.mul(uinv, e);
        for (auto& w : work) {
            if (w[col].packed == 0) continue;
            Elem mult = R.shift_down(w[col], d);
            row_axpy(R, w, mult, row);
        }
        if (d > 0) {
            std::vector<Elem> sat = vec_scale(R, R.pi_pow(N - d), row);
            if (!vec_is_zero(sat)) work.push_back(std::move(sat));
        }
        // Drop rows that became zero.
        for (size_t i = work.size(); i-- > 0;)
            if (vec_is_zero(work[i])) work.erase(work.begin() + i);
        result.push_back(std::move(row));
        pivots.push_back({col, d});
    }
    // Reduce entries above each pivot mod pi^d, left to right.
    for (size_t k = 0; k < result.size(); ++k) {
        const auto& [j, d] = pivots[k];
        for (size_t i = 0; i < k; ++i) {
            Elem high = R.shift_down(result[i][j], d);
            if (high.packed != 0) row_axpy(R, result[i], high, result[k]);
        }
    }
    HowellForm h;
    h.H = Mat::from_rows(R, result, m.cols);
    h.pivots = std::move(pivots);
    return h;
}

std::vector<Elem> howell_reduce(const HowellForm& h, std::vector<Elem> v) {
    const ChainRing& R = h.H.ring;
    for (size_t k = 0; k < h.pivots.size(); ++k) {
        const auto& [j, d] = h.pivots[k];
        if (v[j].packed == 0) continue;
        if (R.val(v[j]) < d) return v; // cannot be cleared; not in span
        Elem mult = R.shift_down(v[j], d);
        for (size_t c = 0; c < v.size(); ++c)
            v[c] = R.sub(v[c], R.mul(mult, h.H.at(k, c)));
    }
    return v;
}

bool in_span(const HowellForm& h, const std::vector<Elem>& v) {
    return vec_is_zero(howell_reduce(h, v));
}

uint64_t span_order(const HowellForm& h) {
    const ChainRing& R = h.H.ring;
    uint64_t order = 1;
    for (const auto& piv : h.pivots)
        for (int i = piv.exponent; i < R.precision(); ++i) order *= static_cast<uint64_t>(R.p());
    return order;
}

namespace {

// Howell form of [m | I]; rows with pivot inside m express combinations,
// rows with pivot in the I block have zero m-part and span the row kernel.
struct AugmentedHowell {
    HowellForm h;
    size_t split; // columns belonging to m
};

AugmentedHowell augmented_howell(const Mat& m) {
    const ChainRing& R = m.ring;
    Mat aug(R, m.rows, m.cols + m.rows);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = R.one();
    }
    return {howell_form(aug), m.cols};
}

} // namespace

Mat row_kernel(const Mat& m) {
    const ChainRing& R = m.ring;
    AugmentedHowell ah = augmented_howell(m);
    std::vector<std::vector<Elem>> kr;
    for (size_t k = 0; k < ah.h.pivots.size(); ++k) {
        if (ah.h.pivots[k].col < ah.split) continue;
        std::vector<Elem> row(m.rows);
        for (size_t j = 0; j < m.rows; ++j) row[j] = ah.h.H.at(k, ah.split + j);
        kr.push_back(std::move(row));
    }
    return Mat::from_rows(R, kr, m.rows);
}

std::optional<std::vector<Elem>> express_in_rows(const Mat& m, const std::vector<Elem>& v) {
    const ChainRing& R = m.ring;
    AugmentedHowell ah = augmented_howell(m);
    std::vector<Elem> residual = v;
    std::vector<Elem> coeff(m.rows);
    for (size_t k = 0; k < ah.h.pivots.size(); ++k) {
        const auto& [j, d] = ah.h.pivots[k];
        if (j >= ah.split) break;
        if (residual[j].packed == 0) continue;
        if (R.val(residual[j]) < d) return std::nullopt;
        Elem mult = R.shift_down(residual[j], d);
        for (size_t c = 0; c < residual.size(); ++c)
            residual[c] = R.sub(residual[c], R.mul(mult, ah.h.H.at(k, c)));
        for (size_t c = 0; c < m.rows; ++c)
            coeff[c] = R.add(coeff[c], R.mul(mult, ah.h.H.at(k, ah.split + c)));
    }
    if (!vec_is_zero(residual)) return std::nullopt;
    return coeff;
}

RowSolveContext::RowSolveContext(const Mat& m) : nrows_(m.rows) {
    AugmentedHowell ah = augmented_howell(m);
    h_ = std::move(ah.h);
    split_ = ah.split;
    std::vector<std::vector<Elem>> kr;
    for (size_t k = 0; k < h_.pivots.size(); ++k) {
        if (h_.pivots[k].col < split_) continue;
        std::vector<Elem> row(nrows_);
        for (size_t j = 0; j < nrows_; ++j) row[j] = h_.H.at(k, split_ + j);
        kr.push_back(std::move(row));
    }
    kernel_ = Mat::from_rows(m.ring, kr, nrows_);
}

std::optional<std::vector<Elem>> RowSolveContext::express(const std::vector<Elem>& v) const {
    const ChainRing& R = h_.H.ring;
    std::vector<Elem> residual = v;
    std::vector<Elem> coeff(nrows_);
    for (size_t k = 0; k < h_.pivots.size(); ++k) {
        const auto& [j, d] = h_.pivots[k];
        if (j >= split_) break;
        if (residual[j].packed == 0) continue;
        if (R.val(residual[j]) < d) return std::nullopt;
        Elem mult = R.shift_down(residual[j], d);
        for (size_t c = 0; c < residual.size(); ++c)
            residual[c] = R.sub(residual[c], R.mul(mult, h_.H.at(k, c)));
        for (size_t c = 0; c < nrows_; ++c)
            coeff[c] = R.add(coeff[c], R.mul(mult, h_.H.at(k, split_ + c)));
    }
    if (!vec_is_zero(residual)) return std::nullopt;
    return coeff;
}

std::optional<AffineSolution> solve_affine(const Mat& m, const std::vector<Elem>& b) {
    Mat t = m.transpose(); // rows of t are columns of m; x * t = b as rows
    auto coeff = express_in_rows(t, b);
    if (!coeff) return std::nullopt;
    AffineSolution s;
    s.kernel = row_kernel(t);
    // Canonical solution: the unique coset representative mod the kernel span.
    s.x0 = howell_reduce(howell_form(s.kernel), std::move(*coeff));
    return s;
}

SmithForm smith_form(const Mat& m) {
    const ChainRing& R = m.ring;
    const int N = R.precision();
    Mat d = m;
    Mat vinv = Mat::identity(R, m.cols);
    size_t pos = 0;
    std::vector<int> exps;
    while (pos < d.rows && pos < d.cols) {
        int bestval = N;
        size_t bi = pos, bj = pos;
        for (size_t i = pos; i < d.rows; ++i)
            for (size_t j = pos; j < d.cols; ++j) {
                int v = R.val(d.at(i, j));
                if (v < bestval) { bestval = v; bi = i; bj = j; }
            }
        if (bestval == N) break; // remaining block is zero
        // Move pivot to (pos, pos).  Column swaps mirror as row swaps on vinv.
        if (bi != pos)
            for (size_t j = 0; j < d.cols; ++j) std::swap(d.at(pos, j), d.at(bi, j));
        if (bj != pos) {
            for (size_t i = 0; i < d.rows; ++i) std::swap(d.at(i, pos), d.at(i, bj));
            for (size_t j = 0; j < vinv.cols; ++j) std::swap(vinv.at(pos, j), vinv.at(bj, j));
        }
        int dv = bestval;
        Elem uinv = R.unit_inverse(R.shift_down(d.at(pos, pos), dv));
        for (size_t j = 0; j < d.cols; ++j) d.at(pos, j) = R.mul(uinv, d.at(pos, j));
        for (size_t i = pos + 1; i < d.rows; ++i) {
            if (d.at(i, pos).packed == 0) continue;
            Elem mult = R.shift_down(d.at(i, pos), dv);
            for (size_t j = 0; j < d.cols; ++j)
                d.at(i, j) = R.sub(d.at(i, j), R.mul(mult, d.at(pos, j)));
        }
        for (size_t j = pos + 1; j < d.cols; ++j) {
            if (d.at(pos, j).packed == 0) continue;
            Elem mult = R.shift_down(d.at(pos, j), dv);
            for (size_t i = 0; i < d.rows; ++i)
                d.at(i, j) = R.sub(d.at(i, j), R.mul(mult, d.at(i, pos)));
            // Column op C_j -= mult C_pos on d means row op R_pos += mult R_j on V^{-1}.
            for (size_t c = 0; c < vinv.cols; ++c)
                vinv.at(pos, c) = R.add(vinv.at(pos, c), R.mul(mult, vinv.at(j, c)));
        }
        exps.push_back(dv);
        ++pos;
    }
    while (exps.size() < std::min(d.rows, d.cols)) exps.push_back(N);
    return SmithForm{std::move(exps), std::move(vinv)};
}

uint64_t ModulePresentation::order() const {
    uint64_t o = 1;
    for (int e : exponents)
        for (int i = 0; i < e; ++i) o *= static_cast<uint64_t>(ring.p());
    return o;
}

ModulePresentation subquotient_presentation(const Mat& z, const Mat& b) {
    const ChainRing& R = z.ring;
    const int N = R.precision();
    HowellForm hz = howell_form(z);
    const size_t k = hz.H.rows;

    ModulePresentation pres;
    pres.ring = R;
    pres.generators = Mat(R, 0, z.cols);

    // Relation rows: coefficient kernel of the generator map plus the
    // coefficients expressing each row of b over the generators.
    std::vector<std::vector<Elem>> rel;
    if (k == 0) {
        for (size_t i = 0; i < b.rows; ++i)
            if (!vec_is_zero(b.row(i))) fail(Errc::NotASubspace, "row of B outside span(Z)");
        return pres;
    }
    Mat kern = row_kernel(hz.H);
    for (size_t i = 0; i < kern.rows; ++i) rel.push_back(kern.row(i));
    for (size_t i = 0; i < b.rows; ++i) {
        auto c = express_in_rows(hz.H, b.row(i));
        if (!c) fail(Errc::NotASubspace, "row of B outside span(Z)");
        rel.push_back(std::move(*c));
    }

    SmithForm sf = smith_form(Mat::from_rows(R, rel, k));
    std::vector<int> exps(k, N);
    for (size_t i = 0; i < sf.diag_exponents.size(); ++i) exps[i] = sf.diag_exponents[i];

    std::vector<std::vector<Elem>> gens;
    std::vector<int> kept;
    for (size_t i = 0; i < k; ++i) {
        if (exps[i] == 0) continue;
        gens.push_back(row_times_mat(sf.vinv.row(i), hz.H));
        kept.push_back(exps[i]);
    }
    pres.exponents = std::move(kept);
    pres.generators = Mat::from_rows(R, gens, z.cols);
    return pres;
}

std::vector<Elem> canonical_coords(const ModulePresentation& pres, std::vector<Elem> c) {
    const ChainRing& R = pres.ring;
    for (size_t i = 0; i < c.size(); ++i) {
        int d = pres.exponents[i];
        // Keep digits below d: subtract the pi^d-and-up part.
        Elem high = R.shift_down(c[i], d);
        c[i] = R.sub(c[i], R.mul(R.pi_pow(d), high));
    }
    return c;
}

std::vector<Elem> presentation_coordinates(const ModulePresentation& pres, const Mat& b,
                                           const std::vector<Elem>& v) {
    const ChainRing& R = pres.ring;
    Mat stacked = vstack(pres.generators, b);
    auto c = express_in_rows(stacked, v);
    if (!c) fail(Errc::Internal, "vector not in span(generators) + span(relations)");
    std::vector<Elem> coords(c->begin(), c->begin() + pres.num_generators());
    (void)R;
    return canonical_coords(pres, std::move(coords));
}

} // namespace hochkit
