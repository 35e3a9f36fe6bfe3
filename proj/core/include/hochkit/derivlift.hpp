#pragma once

#include "hochkit/hochschild.hpp"

#include <optional>
#include <set>

namespace hochkit {

/// Automorphism of A/pi^s inducing the identity on A/pi^level; validated on
/// construction (multiplicative, unital, invertible, valuation of
/// alpha - id at least level).
struct AutR {
    LinearMap alpha;
    int level = 1;
};

AutR make_autr(const Algebra& a_s, Mat alpha_matrix, int level);
AutR autr_compose(const Algebra& a_s, const AutR& f, const AutR& g); // f after g

/// Degree-1 cochains with reduced regular coefficients are exactly linear
/// maps; these convert between the two views.
LinearMap derivation_from_cochain(const Cochain& c);
Cochain cochain_from_derivation(const Algebra& a, const Bimodule& m, const LinearMap& d);

/// mu-bar = (alpha - id)/pi^level reduced to precision level; validated a
/// derivation there, and the exact identity mu(ab) = a mu(b) + mu(a) b +
/// pi^r mu(a) mu(b) is checked at working precision.
LinearMap derivation_of_automorphism(const Algebra& a_s, const AutR& alpha);

struct InnerResult {
    enum Kind { No, Yes, Indeterminate } kind = No;
    std::vector<Elem> witness; // unit c with alpha = conj(c), Yes only
};

/// Decides whether alpha is conjugation by a unit, by solving
/// alpha(e_i) c = c e_i and searching the solution module for a unit.
/// Solution modules larger than 2^16 report Indeterminate.
InnerResult is_inner(const Algebra& b, const LinearMap& alpha);

/// Class of mu-bar in the given HH^1(A/pi^level) context.
std::vector<Elem> class_of_automorphism(const Algebra& a_s, const AutR& alpha, const Cohomology& hh1);

struct LiftOutcome {
    bool lifted = false;
    Mat lifted_matrix;               // over the ring at precision s+1
    std::vector<Elem> obstruction;   // class coords in HH^2(A/pi), when not lifted
};

/// Try to lift an automorphism given at precision s to precision s+1 by a
/// correction pi^s gamma with gamma over the residue field; the failure
/// obstruction is the class of the multiplicativity defect in HH^2(A/pi).
LiftOutcome lift_automorphism(const Algebra& a_s1, const AutR& alpha_s);

/// Subgroup of the finite group HH^1(A/pi^r), kept as the full element set:
/// integrable classes form a group but not necessarily a module over the
/// coefficient ring.
struct ClassSubgroup {
    std::vector<std::vector<Elem>> elements; // canonical coords, sorted
    std::vector<std::vector<Elem>> generators;
    std::vector<int> abelian_exponents;      // subgroup = (+)_i Z/p^{e_i}
    uint64_t order() const { return elements.size(); }
    bool contains(const std::vector<Elem>& coords) const;
    bool module_closed = false;              // closed under ring scalars
    Mat lattice;                             // Howell lattice incl. relations, when module_closed
};

/// L_s: classes representable as (alpha - id)/pi^r for alpha an
/// automorphism of A/pi^s inducing the identity on A/pi^r.
ClassSubgroup integrable_subgroup(const Algebra& a, int r, int s, const Cohomology& hh1);

struct IntegrableChain {
    int r = 0;
    std::vector<std::pair<int, ClassSubgroup>> levels; // s = 2r .. s_max
    bool inclusions_ok = true;
    std::optional<int> stable_from; // smallest s with L_s = L_{s_max}
};

IntegrableChain integrable_chain(const Algebra& a, int r, int s_max, const Cohomology& hh1);
IntegrableChain integrable_chain(const Algebra& a, int r, int s_max);

/// Class of the pullback extension of the twisted sequence; equals the
/// negative of class_of_automorphism.
std::vector<Elem> ext_pullback_class(const Algebra& a_s, const AutR& alpha, const Cohomology& hh1);

/// d maps the span of the (validated two-sided ideal) generators into
/// itself.
bool preserves_ideal(const Algebra& abar, const LinearMap& d, const Mat& ideal_generators);

} // namespace hochkit
