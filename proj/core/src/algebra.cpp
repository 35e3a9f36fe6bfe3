#include "hochkit/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hochkit {

std::vector<Elem> Algebra::basis_vec(size_t i) const {
    std::vector<Elem> v(rank_);
    v[i] = ring_.one();
    return v;
}

std::vector<Elem> Algebra::mul(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    std::vector<Elem> r(rank_);
    for (size_t i = 0; i < rank_; ++i) {
        if (x[i].packed == 0) continue;
        for (size_t j = 0; j < rank_; ++j) {
            if (y[j].packed == 0) continue;
            Elem c = ring_.mul(x[i], y[j]);
            const std::vector<Elem>& s = sc_[i][j];
            for (size_t k = 0; k < rank_; ++k)
                if (s[k].packed != 0) r[k] = ring_.add(r[k], ring_.mul(c, s[k]));
        }
    }
    return r;
}

Mat Algebra::left_mult_matrix(const std::vector<Elem>& x) const {
    Mat m(ring_, rank_, rank_);
    for (size_t j = 0; j < rank_; ++j) {
        auto col = mul(x, basis_vec(j));
        for (size_t i = 0; i < rank_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Mat Algebra::right_mult_matrix(const std::vector<Elem>& x) const {
    Mat m(ring_, rank_, rank_);
    for (size_t j = 0; j < rank_; ++j) {
        auto col = mul(basis_vec(j), x);
        for (size_t i = 0; i < rank_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Algebra Algebra::from_struct_consts(ChainRing ring, size_t rank,
                                    std::vector<std::vector<std::vector<Elem>>> sc,
                                    std::vector<Elem> unit,
                                    std::vector<std::string> basis_names) {
    Algebra a;
    a.ring_ = std::move(ring);
    a.rank_ = rank;
    a.sc_ = std::move(sc);
    a.unit_ = std::move(unit);
    if (basis_names.empty()) {
        for (size_t i = 0; i < rank; ++i) basis_names.push_back("e" + std::to_string(i));
    }
    a.basis_names_ = std::move(basis_names);

    // Associativity on all basis triples.
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j) {
            auto ij = a.sc_[i][j];
            for (size_t k = 0; k < rank; ++k) {
                auto lhs = a.mul(ij, a.basis_vec(k));
                auto rhs = a.mul(a.basis_vec(i), a.sc_[j][k]);
                if (lhs != rhs)
                    fail(Errc::ValidationError, "structure constants not associative at (" +
                                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                                    std::to_string(k) + ")");
            }
        }
    for (size_t i = 0; i < rank; ++i) {
        if (a.mul(a.unit_, a.basis_vec(i)) != a.basis_vec(i) ||
            a.mul(a.basis_vec(i), a.unit_) != a.basis_vec(i))
            fail(Errc::ValidationError, "unit axiom fails at basis " + std::to_string(i));
    }
    return a;
}

Algebra Algebra::group_algebra(const ChainRing& ring, const std::vector<std::vector<int>>& table,
                               std::vector<std::string> names) {
    const size_t n = table.size();
    if (n == 0) fail(Errc::NotAGroup, "empty table");
    for (const auto& row : table) {
        if (row.size() != n) fail(Errc::NotAGroup, "table not square");
        for (int v : row)
            if (v < 0 || static_cast<size_t>(v) >= n) fail(Errc::NotAGroup, "index out of range");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    fail(Errc::NotAGroup, "multiplication table not associative");
    int id = -1;
    for (size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (size_t i = 0; i < n; ++i)
            if (table[e][i] != static_cast<int>(i) || table[i][e] != static_cast<int>(i)) { ok = false; break; }
        if (ok) { id = static_cast<int>(e); break; }
    }
    if (id < 0) fail(Errc::NotAGroup, "no identity element");
    for (size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (size_t j = 0; j < n; ++j)
            if (table[i][j] == id && table[j][i] == id) { has_inverse = true; break; }
        if (!has_inverse) fail(Errc::NotAGroup, "element without inverse");
    }

    std::vector<std::vector<std::vector<Elem>>> sc(n, std::vector<std::vector<Elem>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Elem> v(n);
            v[table[i][j]] = ring.one();
            sc[i][j] = std::move(v);
        }
    std::vector<Elem> unit(n);
    unit[id] = ring.one();
    if (names.empty())
        for (size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    return from_struct_consts(ring, n, std::move(sc), std::move(unit), std::move(names));
}

Algebra Algebra::cyclic_group(const ChainRing& ring, int order) {
    if (order < 1) fail(Errc::NotAGroup, "order must be positive");
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) table[i][j] = (i + j) % order;
    std::vector<std::string> names;
    for (int i = 0; i < order; ++i)
        names.push_back(i == 0 ? "1" : (i == 1 ? "y" : "y^" + std::to_string(i)));
    return group_algebra(ring, table, std::move(names));
}

Algebra Algebra::truncated_polynomial(const ChainRing& ring, int m) {
    if (m < 1) fail(Errc::ValidationError, "m must be >= 1");
    size_t n = static_cast<size_t>(m);
    std::vector<std::vector<std::vector<Elem>>> sc(n, std::vector<std::vector<Elem>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Elem> v(n);
            if (i + j < n) v[i + j] = ring.one();
            sc[i][j] = std::move(v);
        }
    std::vector<Elem> unit(n);
    unit[0] = ring.one();
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
        names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    return from_struct_consts(ring, n, std::move(sc), std::move(unit), std::move(names));
}

Algebra Algebra::matrix_algebra(const Algebra& a, int n) {
    if (n < 1) fail(Errc::ValidationError, "n must be >= 1");
    const ChainRing& R = a.ring();
    size_t r = a.rank();
    size_t nn = static_cast<size_t>(n);
    size_t rank = nn * nn * r;
    auto idx = [&](size_t u, size_t v, size_t i) { return (u * nn + v) * r + i; };
    std::vector<std::vector<std::vector<Elem>>> sc(rank, std::vector<std::vector<Elem>>(rank));
    for (size_t u = 0; u < nn; ++u)
        for (size_t v = 0; v < nn; ++v)
            for (size_t i = 0; i < r; ++i)
                for (size_t u2 = 0; u2 < nn; ++u2)
                    for (size_t v2 = 0; v2 < nn; ++v2)
                        for (size_t j = 0; j < r; ++j) {
                            std::vector<Elem> out(rank);
                            if (v == u2) {
                                const std::vector<Elem>& s = a.sc(i, j);
                                for (size_t k = 0; k < r; ++k) out[idx(u, v2, k)] = s[k];
                            }
                            sc[idx(u, v, i)][idx(u2, v2, j)] = std::move(out);
                        }
    std::vector<Elem> unit(rank);
    for (size_t u = 0; u < nn; ++u)
        for (size_t i = 0; i < r; ++i) unit[idx(u, u, i)] = a.unit()[i];
    std::vector<std::string> names;
    for (size_t u = 0; u < nn; ++u)
        for (size_t v = 0; v < nn; ++v)
            for (size_t i = 0; i < r; ++i)
                names.push_back("E" + std::to_string(u + 1) + std::to_string(v + 1) + "*" + a.basis_name(i));
    return from_struct_consts(R, rank, std::move(sc), std::move(unit), std::move(names));
}

Algebra Algebra::enveloping(const Algebra& a) {
    const ChainRing& R = a.ring();
    size_t r = a.rank();
    size_t rank = r * r;
    auto idx = [&](size_t i, size_t i2) { return i * r + i2; };
    std::vector<std::vector<std::vector<Elem>>> sc(rank, std::vector<std::vector<Elem>>(rank));
    for (size_t i = 0; i < r; ++i)
        for (size_t i2 = 0; i2 < r; ++i2)
            for (size_t j = 0; j < r; ++j)
                for (size_t j2 = 0; j2 < r; ++j2) {
                    // (e_i (x) e_{i'}) (e_j (x) e_{j'}) = e_i e_j (x) e_{j'} e_{i'}
                    std::vector<Elem> out(rank);
                    const std::vector<Elem>& f = a.sc(i, j);
                    const std::vector<Elem>& s = a.sc(j2, i2);
                    for (size_t k = 0; k < r; ++k) {
                        if (f[k].packed == 0) continue;
                        for (size_t k2 = 0; k2 < r; ++k2)
                            if (s[k2].packed != 0) out[idx(k, k2)] = R.add(out[idx(k, k2)], R.mul(f[k], s[k2]));
                    }
                    sc[idx(i, i2)][idx(j, j2)] = std::move(out);
                }
    std::vector<Elem> unit(rank);
    for (size_t k = 0; k < r; ++k) {
        if (a.unit()[k].packed == 0) continue;
        for (size_t k2 = 0; k2 < r; ++k2)
            if (a.unit()[k2].packed != 0) unit[idx(k, k2)] = R.mul(a.unit()[k], a.unit()[k2]);
    }
    std::vector<std::string> names;
    for (size_t i = 0; i < r; ++i)
        for (size_t i2 = 0; i2 < r; ++i2)
            names.push_back(a.basis_name(i) + "(x)" + a.basis_name(i2));
    return from_struct_consts(R, rank, std::move(sc), std::move(unit), std::move(names));
}

Algebra Algebra::reduced(int r) const {
    if (r < 1 || r > ring_.precision()) fail(Errc::BadPrecision, "reduce to precision in [1, N]");
    if (r == ring_.precision()) return *this;
    ChainRing R = ring_.reduced(r);
    std::vector<std::vector<std::vector<Elem>>> sc(rank_, std::vector<std::vector<Elem>>(rank_));
    for (size_t i = 0; i < rank_; ++i)
        for (size_t j = 0; j < rank_; ++j) {
            std::vector<Elem> v(rank_);
            for (size_t k = 0; k < rank_; ++k) v[k] = ring_.reduce_elem(sc_[i][j][k], R);
            sc[i][j] = std::move(v);
        }
    std::vector<Elem> unit(rank_);
    for (size_t k = 0; k < rank_; ++k) unit[k] = ring_.reduce_elem(unit_[k], R);
    return from_struct_consts(R, rank_, std::move(sc), std::move(unit), basis_names_);
}

Mat Algebra::center() const {
    // z central iff (L_i - R_i) z = 0 for every basis element.
    Mat sys(ring_, rank_ * rank_, rank_);
    for (size_t i = 0; i < rank_; ++i) {
        Mat d = mat_sub(left_mult_matrix(basis_vec(i)), right_mult_matrix(basis_vec(i)));
        for (size_t r = 0; r < rank_; ++r)
            for (size_t c = 0; c < rank_; ++c) sys.at(i * rank_ + r, c) = d.at(r, c);
    }
    auto sol = solve_affine(sys, std::vector<Elem>(rank_ * rank_));
    return sol->kernel;
}

bool Algebra::is_unit_element(const std::vector<Elem>& x) const {
    return is_invertible_map(ring_, left_mult_matrix(x));
}

std::vector<Elem> Algebra::inverse_element(const std::vector<Elem>& x) const {
    Mat inv = invert_map(ring_, left_mult_matrix(x));
    return mat_apply(inv, unit_);
}

std::string Algebra::format_element(const std::vector<Elem>& x) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < rank_; ++i) {
        if (x[i].packed == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string c = ring_.format(x[i]);
        bool trivial_coeff = (x[i] == ring_.one());
        bool unit_basis = (basis_names_[i] == "1");
        if (unit_basis) {
            os << (c.find('+') != std::string::npos ? "(" + c + ")" : c);
        } else if (trivial_coeff) {
            os << basis_names_[i];
        } else {
            os << (c.find('+') != std::string::npos ? "(" + c + ")" : c) << "*" << basis_names_[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

LinearMap identity_map(const ChainRing& ring, size_t rank) {
    return LinearMap{Mat::identity(ring, rank)};
}

bool is_algebra_morphism(const Algebra& a, const LinearMap& f) {
    if (f.apply(a.unit()) != a.unit()) return false;
    for (size_t i = 0; i < a.rank(); ++i) {
        auto fi = f.apply(a.basis_vec(i));
        for (size_t j = 0; j < a.rank(); ++j) {
            auto lhs = f.apply(a.sc(i, j));
            auto rhs = a.mul(fi, f.apply(a.basis_vec(j)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool is_invertible_map(const ChainRing& ring, const Mat& m) {
    // Invertible over the local ring iff invertible over the residue field.
    const int64_t p = ring.p();
    size_t n = m.rows;
    std::vector<std::vector<int64_t>> a(n, std::vector<int64_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = ring.residue(m.at(i, j));
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] % p == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[c]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] % p == 0) continue;
            // a[i] -= (a[i][c]/a[c][c]) a[c] mod p
            int64_t inv = 1;
            for (int64_t k = 1; k < p; ++k)
                if ((a[c][c] * k) % p == 1) { inv = k; break; }
            int64_t f = (a[i][c] * inv) % p;
            for (size_t j = 0; j < n; ++j) a[i][j] = ((a[i][j] - f * a[c][j]) % p + p) % p;
        }
    }
    return true;
}

Mat invert_map(const ChainRing& ring, const Mat& m) {
    if (!is_invertible_map(ring, m)) fail(Errc::NotInvertible, "matrix not invertible");
    size_t n = m.rows;
    Mat inv(ring, n, n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Elem> e(n);
        e[j] = ring.one();
        auto sol = solve_affine(m, e);
        if (!sol) fail(Errc::Internal, "invertible matrix failed to solve");
        for (size_t i = 0; i < n; ++i) inv.at(i, j) = sol->x0[i];
    }
    return inv;
}

void validate_automorphism(const Algebra& a, const LinearMap& f) {
    if (!is_algebra_morphism(a, f)) fail(Errc::NotAMorphism, "map is not an algebra morphism");
    if (!is_invertible_map(a.ring(), f.m)) fail(Errc::NotInvertible, "morphism is not invertible");
}

bool validate_derivation(const Algebra& a, const LinearMap& d) {
    for (size_t i = 0; i < a.rank(); ++i) {
        auto di = d.apply(a.basis_vec(i));
        for (size_t j = 0; j < a.rank(); ++j) {
            auto lhs = d.apply(a.sc(i, j));
            auto rhs = vec_add(a.ring(), a.mul(a.basis_vec(i), d.apply(a.basis_vec(j))),
                               a.mul(di, a.basis_vec(j)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

LinearMap ad_map(const Algebra& a, const std::vector<Elem>& c) {
    return LinearMap{mat_sub(a.left_mult_matrix(c), a.right_mult_matrix(c))};
}

void validate_bimodule(const Algebra& a, const Bimodule& m) {
    const ChainRing& R = m.ring;
    auto act = [&](const std::vector<Mat>& mats, const std::vector<Elem>& x) {
        Mat s(R, m.rank, m.rank);
        for (size_t i = 0; i < a.rank(); ++i) {
            if (x[i].packed == 0) continue;
            Elem c = a.ring().reduce_elem(x[i], R);
            s = mat_add(s, mat_scale(mats[i], c));
        }
        return s;
    };
    Mat idm = Mat::identity(R, m.rank);
    if (!(act(m.left, a.unit()) == idm) || !(act(m.right, a.unit()) == idm))
        fail(Errc::ValidationError, "bimodule actions not unital");
    for (size_t i = 0; i < a.rank(); ++i)
        for (size_t j = 0; j < a.rank(); ++j) {
            if (!(mat_mul(m.left[i], m.left[j]) == act(m.left, a.sc(i, j))))
                fail(Errc::ValidationError, "left action not a homomorphism");
            if (!(mat_mul(m.right[j], m.right[i]) == act(m.right, a.sc(i, j))))
                fail(Errc::ValidationError, "right action not an anti-homomorphism");
            if (!(mat_mul(m.left[i], m.right[j]) == mat_mul(m.right[j], m.left[i])))
                fail(Errc::ValidationError, "left and right actions do not commute");
        }
}

Bimodule regular_bimodule(const Algebra& a) {
    Bimodule m;
    m.ring = a.ring();
    m.rank = a.rank();
    for (size_t i = 0; i < a.rank(); ++i) {
        m.left.push_back(a.left_mult_matrix(a.basis_vec(i)));
        m.right.push_back(a.right_mult_matrix(a.basis_vec(i)));
    }
    return m;
}

namespace {

Mat reduce_mat(const ChainRing& from, const Mat& m, const ChainRing& to) {
    Mat r(to, m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = from.reduce_elem(m.a[i], to);
    return r;
}

} // namespace

Bimodule reduced_regular_bimodule(const Algebra& a, int r) {
    if (r < 1 || r > a.ring().precision()) fail(Errc::BadPrecision, "bimodule precision out of range");
    ChainRing R = a.ring().reduced(r);
    Bimodule m;
    m.ring = R;
    m.rank = a.rank();
    for (size_t i = 0; i < a.rank(); ++i) {
        m.left.push_back(reduce_mat(a.ring(), a.left_mult_matrix(a.basis_vec(i)), R));
        m.right.push_back(reduce_mat(a.ring(), a.right_mult_matrix(a.basis_vec(i)), R));
    }
    return m;
}

Bimodule twisted_bimodule(const Algebra& a, const LinearMap& alpha, int r_target) {
    validate_automorphism(a, alpha);
    if (r_target < 1 || r_target > a.ring().precision())
        fail(Errc::BadPrecision, "twisted bimodule precision out of range");
    ChainRing R = a.ring().reduced(r_target);
    Bimodule m;
    m.ring = R;
    m.rank = a.rank();
    for (size_t i = 0; i < a.rank(); ++i) {
        m.left.push_back(reduce_mat(a.ring(), a.left_mult_matrix(a.basis_vec(i)), R));
        m.right.push_back(reduce_mat(a.ring(), a.right_mult_matrix(alpha.apply(a.basis_vec(i))), R));
    }
    return m;
}

LinearMap cyclic_to_truncated_iso(const ChainRing& residue_ring, int p) {
    if (residue_ring.precision() != 1)
        fail(Errc::BadPrecision, "basis-change iso lives over the residue field");
    Algebra target = Algebra::truncated_polynomial(residue_ring, p);
    // column j = (x+1)^j
    Mat m(residue_ring, p, p);
    std::vector<Elem> pow = target.basis_vec(0);
    std::vector<Elem> xp1(p);
    xp1[0] = residue_ring.one();
    if (p > 1) xp1[1] = residue_ring.one();
    for (int j = 0; j < p; ++j) {
        for (int i = 0; i < p; ++i) m.at(i, j) = pow[i];
        pow = target.mul(pow, xp1);
    }
    return LinearMap{m};
}

LinearMap conjugate_derivation(const Algebra& target, const LinearMap& phi, const LinearMap& d) {
    Mat phi_inv = invert_map(target.ring(), phi.m);
    LinearMap out{mat_mul(phi.m, mat_mul(d.m, phi_inv))};
    if (!validate_derivation(target, out))
        fail(Errc::Internal, "conjugated map is not a derivation");
    return out;
}

} // namespace hochkit
