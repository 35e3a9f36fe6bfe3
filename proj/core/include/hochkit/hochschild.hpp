#pragma once

#include "hochkit/algebra.hpp"

#include <cstdint>
#include <vector>

namespace hochkit {

/// Degree-n bar cochain: a total table over all rank^n basis tuples with
/// values in the coefficient bimodule, flattened as (tuple index) * mrank +
/// coordinate with tuples ordered lexicographically.
struct Cochain {
    int degree = 0;
    size_t algrank = 0;
    size_t mrank = 0;
    ChainRing ring; // scalar ring of the coefficient module
    std::vector<Elem> v;

    size_t dim() const { return v.size(); }
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

size_t cochain_dim(size_t algrank, size_t mrank, int degree);
Cochain zero_cochain(const Algebra& a, const Bimodule& m, int degree);
/// Value table accessors; `tuple` holds `degree` basis indices.
size_t tuple_index(size_t algrank, const std::vector<size_t>& tuple);
std::vector<Elem> cochain_value(const Cochain& c, size_t tuple_idx);
void set_cochain_value(Cochain& c, size_t tuple_idx, const std::vector<Elem>& val);

/// Matrix of the classical bar differential C^n -> C^{n+1},
/// (dc)(a_1..a_{n+1}) = a_1 c(a_2..) + sum (-1)^i c(.. a_i a_{i+1} ..)
///                      + (-1)^{n+1} c(a_1..a_n) a_{n+1}.
Mat bar_differential_matrix(const Algebra& a, const Bimodule& m, int degree);
Cochain bar_differential(const Algebra& a, const Bimodule& m, const Cochain& c);

/// ker/im presentation of HH^n(A; M) together with everything needed to
/// reduce a cocycle to canonical class coordinates.
struct Cohomology {
    Algebra algebra;
    Bimodule coefficients;
    int degree = 0;
    ModulePresentation pres;
    Mat cocycles;      // Howell rows of ker d^n
    Mat coboundaries;  // Howell rows of im d^{n-1}
    std::vector<Cochain> basis; // generator cocycles, one per presentation summand

    uint64_t order() const { return pres.order(); }
    std::vector<Elem> coords_of(const Cochain& cocycle) const;
    Cochain representative(const std::vector<Elem>& coords) const;
    bool is_cocycle(const Cochain& c) const;
};

Cohomology cohomology(const Algebra& a, const Bimodule& m, int degree);

/// Class coordinate arithmetic in a fixed presentation.
std::vector<Elem> class_add(const Cohomology& h, const std::vector<Elem>& x, const std::vector<Elem>& y);
std::vector<Elem> class_neg(const Cohomology& h, const std::vector<Elem>& x);

/// Front/back cup product of cochains with regular-type coefficients:
/// values are multiplied in `amb`.
Cochain cup_product(const Algebra& amb, const Cochain& f, const Cochain& g);

/// Connecting homomorphism of 0 -> A/pi^r -> A/pi^2r -> A/pi^r -> 0 on a
/// degree-n class: lift values digitwise to precision 2r, apply the bar
/// differential of A at precision 2r, divide exactly by pi^r.
/// `a2r` must be the algebra at precision exactly 2r.
Cochain bockstein_cochain(const Algebra& a2r, int r, const Cochain& rep);

/// Twisted Bockstein of Prop-style sequence 0 -> A/pi^r -> (A/pi^2r)_alpha
/// -> A/pi^r -> 0 applied to the identity class.  alpha must induce the
/// identity at precision r.  Returns a degree-1 cochain over A/pi^r whose
/// class equals the class of the derivation (alpha - id)/pi^r.
Cochain twisted_bockstein_cochain(const Algebra& a2r, int r, const LinearMap& alpha);

struct LesNode {
    int degree;
    int position; // 0: HH^n(A/pi^r) before iota, 1: HH^n(A/pi^2r), 2: HH^n(A/pi^r) before delta
    uint64_t order;
    bool exact;
};

struct LesReport {
    std::vector<LesNode> nodes;
    bool all_exact = true;
};

/// Exactness of the long exact sequence through max_degree, computed from
/// the algebra at precision 2r.
LesReport les_exactness_report(const Algebra& a, int r, int max_degree = 2);

struct LevelCompareResult {
    bool equal;
    ModulePresentation lhs, rhs;
};

/// HH^n computed over the bar complex of A/pi^{s1} and of A/pi^{s2}, both
/// with coefficients A/pi^r; reports whether the presentations coincide.
LevelCompareResult level_compare(const Algebra& a, int r, int s1, int s2, int degree);

struct PiShiftResult {
    Mat map;            // coordinates of images of HH^1(A/pi^r) generators
    bool injective;
    Cohomology source, target;
};

/// The map HH^1(A/pi^r) -> HH^1(A/pi^{r+1}) induced by multiplication with
/// pi on A; reports the induced matrix and whether its kernel is zero.
PiShiftResult pi_shift_hh1(const Algebra& a, int r);

/// Kernel of a map between presented modules given by generator images, as
/// a lattice (Howell rows in source coordinates including the source
/// relation rows).
Mat class_map_kernel_lattice(const Cohomology& src, const Cohomology& tgt, const Mat& images);
/// Lattice (Howell rows incl. relations) spanned by given class coordinate rows.
Mat class_lattice(const Cohomology& h, const Mat& rows);
/// The relation lattice pi^{d_i} e_i of a presentation (the zero subgroup).
Mat relation_lattice(const ModulePresentation& pres);

} // namespace hochkit
