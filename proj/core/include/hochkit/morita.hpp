#pragma once

#include "hochkit/derivlift.hpp"

namespace hochkit {

/// Morita context A vs M_n(A) with the corner idempotent e = E_11 (x) 1;
/// e M_n(A) e is canonically A again.
struct MoritaContext {
    Algebra base;
    int n = 1;
    Algebra matrix;
    std::vector<Elem> corner; // coordinates of e in the matrix algebra
};

MoritaContext make_morita(const Algebra& a, int n);

/// Entrywise transfer: D(E_uv (x) a) = E_uv (x) d(a); validated Leibniz.
LinearMap transfer_derivation(const MoritaContext& ctx, const LinearMap& d);

/// Corner compression a |-> e D(e a e) e read on e M_n e = A; inner maps to
/// inner, so this descends to classes.
LinearMap corner_derivation(const MoritaContext& ctx, const LinearMap& big);

/// Coordinates in HH^1(M_n(A-bar)) of the transfers of HH^1(A-bar)
/// generators.
Mat transfer_class_matrix(const MoritaContext& ctx, const Cohomology& hh1_base, const Cohomology& hh1_matrix);

struct MoritaReport {
    IntegrableChain base_chain;
    IntegrableChain matrix_chain;
    bool transfer_bijective = false;
    std::vector<std::pair<int, bool>> level_match; // per s: transfer(L_s(A)) == L_s(M_n(A))
    bool all_match = true;
};

/// Compute both integrable chains and verify the entrywise transfer maps
/// L_s(A) onto L_s(M_n(A)) for every level.
MoritaReport morita_invariance_report(const Algebra& a, int r, int s_max, int n);

} // namespace hochkit
