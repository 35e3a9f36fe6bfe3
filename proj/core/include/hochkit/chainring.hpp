#pragma once

#include "hochkit/error.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hochkit {

enum class RingKind { Unramified, Eisenstein };

/// Defining data of a finite chain ring O/pi^N.  For the unramified kind
/// O is the p-adic integers and pi = p.  For the Eisenstein kind O is
/// Z_p[t]/(E(t)) with E(t) = t^e + c_{e-1} t^{e-1} + ... + c_0 Eisenstein
/// at p, and pi = t.
struct RingSpec {
    RingKind kind = RingKind::Unramified;
    int64_t p = 2;
    int precision = 1;               // N, nilpotency index of pi
    std::vector<int64_t> eis_coeffs; // c_0..c_{e-1}, Eisenstein kind only

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Ring element in canonical digit form: packed = sum d_i p^i with the
/// digits d_i in {0,...,p-1} encoding x = sum d_i pi^i.  Two elements are
/// equal iff their packed values are equal.
struct Elem {
    uint64_t packed = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
};

/// Immutable handle to a constructed chain ring.  Cheap to copy, safe to
/// share across threads; every operation is pure.
class ChainRing {
public:
    ChainRing() = default;
    static ChainRing make(const RingSpec& spec);
    static ChainRing unramified(int64_t p, int precision);
    static ChainRing eisenstein(int64_t p, std::vector<int64_t> coeffs, int precision);

    const RingSpec& spec() const;
    int precision() const;    // N
    int64_t p() const;
    int ram_index() const;    // e; 1 for unramified
    uint64_t size() const;    // p^N

    Elem zero() const { return Elem{0}; }
    Elem one() const;
    Elem pi() const;
    Elem pi_pow(int k) const; // pi^k, zero when k >= N
    Elem from_int(int64_t n) const;
    Elem from_digits(const std::vector<int64_t>& d) const;
    std::vector<int64_t> digits(Elem x) const;
    int64_t digit(Elem x, int i) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem mul_int(Elem a, int64_t n) const;

    bool is_zero(Elem a) const { return a.packed == 0; }
    bool is_unit(Elem a) const;
    /// pi-adic valuation in [0, N]; val(0) = N.
    int val(Elem a) const;
    int64_t residue(Elem a) const; // image in F_p = O/(pi), as an integer in [0,p)
    Elem unit_inverse(Elem a) const;

    /// Digits of a from position j upward, reinterpreted at position 0 in
    /// this ring.  shift_down(a,j) * pi^j == a exactly whenever val(a) >= j.
    Elem shift_down(Elem a, int j) const;

    /// Exact division by pi^j.  The result lives in `target`, which must be
    /// this ring reduced to precision at most N - j.
    Elem exact_div_pi(Elem a, int j, const ChainRing& target) const;

    /// The ring O/pi^{N'} with the same defining data.
    ChainRing reduced(int new_precision) const;
    /// Truncate digits into a lower-precision ring of the same spec.
    Elem reduce_elem(Elem a, const ChainRing& target) const;
    /// Reinterpret digits in a higher-precision ring (the canonical lift).
    Elem lift_elem(Elem a, const ChainRing& target) const;

    bool same(const ChainRing& other) const;
    bool same_spec(const ChainRing& other) const; // ignoring precision

    /// Element with packed index i; iterating i over [0, size()) enumerates
    /// the whole ring.
    Elem elem_at(uint64_t i) const { return Elem{i}; }

    std::string format(Elem a) const;

private:
    struct Core;
    explicit ChainRing(std::shared_ptr<const Core> core) : core_(std::move(core)) {}
    std::shared_ptr<const Core> core_;
    const Core& core() const;
};

} // namespace hochkit
