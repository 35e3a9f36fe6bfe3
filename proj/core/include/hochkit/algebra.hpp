#pragma once

#include "hochkit/linalg.hpp"

#include <string>
#include <vector>

namespace hochkit {

/// Finite-rank associative unital algebra over a chain ring, given by
/// structure constants on a fixed ordered basis.  Associativity and the
/// unit axioms are validated on construction.
class Algebra {
public:
    Algebra() = default;

    static Algebra from_struct_consts(ChainRing ring, size_t rank,
                                      std::vector<std::vector<std::vector<Elem>>> sc,
                                      std::vector<Elem> unit,
                                      std::vector<std::string> basis_names = {});

    /// Group algebra from a multiplication table of basis indices.
    /// Validates the group axioms (NotAGroup otherwise).
    static Algebra group_algebra(const ChainRing& ring, const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> names = {});
    static Algebra cyclic_group(const ChainRing& ring, int order);
    /// R[x]/(x^m) with basis 1, x, ..., x^{m-1}.
    static Algebra truncated_polynomial(const ChainRing& ring, int m);
    /// M_n(A), basis e_{uv} (x) a_i ordered row-major by (u, v) then i.
    static Algebra matrix_algebra(const Algebra& a, int n);
    /// A (x) A^op, basis (i, i') at index i*rank + i'.
    static Algebra enveloping(const Algebra& a);

    const ChainRing& ring() const { return ring_; }
    size_t rank() const { return rank_; }
    const std::vector<Elem>& sc(size_t i, size_t j) const { return sc_[i][j]; }
    const std::vector<Elem>& unit() const { return unit_; }
    const std::string& basis_name(size_t i) const { return basis_names_[i]; }

    std::vector<Elem> basis_vec(size_t i) const;
    std::vector<Elem> mul(const std::vector<Elem>& x, const std::vector<Elem>& y) const;
    Mat left_mult_matrix(const std::vector<Elem>& x) const;
    Mat right_mult_matrix(const std::vector<Elem>& x) const;

    /// Same structure constants with every entry reduced to precision r.
    Algebra reduced(int r) const;

    /// Howell rows spanning the center {z : e_i z = z e_i for all i}.
    Mat center() const;

    bool is_unit_element(const std::vector<Elem>& x) const;
    std::vector<Elem> inverse_element(const std::vector<Elem>& x) const;

    std::string format_element(const std::vector<Elem>& x) const;

private:
    ChainRing ring_;
    size_t rank_ = 0;
    std::vector<std::vector<std::vector<Elem>>> sc_;
    std::vector<Elem> unit_;
    std::vector<std::string> basis_names_;
};

/// Linear map between (coordinate spaces of) algebras or bimodules; the
/// matrix columns are images of basis vectors.
struct LinearMap {
    Mat m;
    std::vector<Elem> apply(const std::vector<Elem>& x) const { return mat_apply(m, x); }
};

LinearMap identity_map(const ChainRing& ring, size_t rank);

/// alpha(e_i e_j) = alpha(e_i) alpha(e_j) and alpha(1) = 1.
bool is_algebra_morphism(const Algebra& a, const LinearMap& f);
/// Invertible over the chain ring (unit determinant of the residue matrix).
bool is_invertible_map(const ChainRing& ring, const Mat& m);
Mat invert_map(const ChainRing& ring, const Mat& m);
void validate_automorphism(const Algebra& a, const LinearMap& f); // throws NotAMorphism / NotInvertible
/// Leibniz on all basis pairs: d(e_i e_j) = e_i d(e_j) + d(e_i) e_j.
bool validate_derivation(const Algebra& a, const LinearMap& d);
/// The inner derivation [c, -].
LinearMap ad_map(const Algebra& a, const std::vector<Elem>& c);

/// Two-sided module over (left_rank = right_rank = rank of A) with explicit
/// action matrices per algebra basis element.  The module's scalar ring may
/// have lower precision than the algebra's.
struct Bimodule {
    ChainRing ring;
    size_t rank = 0;
    std::vector<Mat> left;  // left[i] = action of e_i
    std::vector<Mat> right; // right[j] = right action of e_j
};

void validate_bimodule(const Algebra& a, const Bimodule& m);
/// A itself as an A-A-bimodule.
Bimodule regular_bimodule(const Algebra& a);
/// A/pi^r as a bimodule over A (actions reduced to precision r).
Bimodule reduced_regular_bimodule(const Algebra& a, int r);
/// A/pi^{r_target} with the right action twisted through alpha:
/// m . a = m alpha(a).  alpha must be a validated automorphism.
Bimodule twisted_bimodule(const Algebra& a, const LinearMap& alpha, int r_target);

/// The residue isomorphism kC_p -> k[x]/(x^p), y |-> x + 1, as an explicit
/// basis change between the two presets over a precision-1 ring.
LinearMap cyclic_to_truncated_iso(const ChainRing& residue_ring, int p);
/// Conjugate a derivation through an algebra isomorphism: phi d phi^{-1}.
LinearMap conjugate_derivation(const Algebra& target, const LinearMap& phi, const LinearMap& d);

} // namespace hochkit
