#include "hochkit/chainring.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace hochkit {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::NotEisenstein: return "NotEisenstein";
        case Errc::ZeroPrecision: return "ZeroPrecision";
        case Errc::InsufficientValuation: return "InsufficientValuation";
        case Errc::NotASubspace: return "NotASubspace";
        case Errc::NotAGroup: return "NotAGroup";
        case Errc::NotAMorphism: return "NotAMorphism";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::DegreeTooHigh: return "DegreeTooHigh";
        case Errc::InsufficientPrecision: return "InsufficientPrecision";
        case Errc::NotIdentityModPiR: return "NotIdentityModPiR";
        case Errc::BadPrecision: return "BadPrecision";
        case Errc::NotLevelR: return "NotLevelR";
        case Errc::NotAnIdeal: return "NotAnIdeal";
        case Errc::ParseError: return "ParseError";
        case Errc::ValidationError: return "ValidationError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

constexpr int kMaxDigits = 62;

// Scratch digit buffer; entries may be arbitrary integers mid-computation.
using Digits = std::array<int64_t, kMaxDigits>;

} // namespace

struct ChainRing::Core {
    RingSpec spec;
    int N = 1;
    int64_t p = 2;
    int e = 1;                   // ramification index
    std::vector<uint64_t> ppow;  // p^0..p^N
    std::vector<int64_t> p_expansion; // digits of p in this ring, p_expansion[0] == 0

    void decode(Elem x, Digits& d) const {
        uint64_t v = x.packed;
        for (int i = 0; i < N; ++i) {
            d[i] = static_cast<int64_t>(v % static_cast<uint64_t>(p));
            v /= static_cast<uint64_t>(p);
        }
    }

    Elem encode(const Digits& d) const {
        uint64_t v = 0;
        for (int i = N - 1; i >= 0; --i) v = v * static_cast<uint64_t>(p) + static_cast<uint64_t>(d[i]);
        return Elem{v};
    }

    // Reduce arbitrary integer entries to canonical digits.  Carries are
    // pushed upward through the expansion of p; p_expansion[0] == 0 makes a
    // single left-to-right pass exact.
    void normalize(Digits& v) const {
        for (int i = 0; i < N; ++i) {
            int64_t d = v[i] % p;
            if (d < 0) d += p;
            int64_t q = (v[i] - d) / p;
            v[i] = d;
            if (q != 0) {
                for (int j = 1; j < N - i; ++j)
                    if (p_expansion[j] != 0) v[i + j] += q * p_expansion[j];
            }
        }
    }
};

namespace {

// Bootstrap arithmetic in Z/p^M [t] / (E(t)) used once per Eisenstein ring
// construction to compute the digit expansion of p.
struct BootPoly {
    int e;
    int64_t pm; // p^M
    std::vector<int64_t> eis; // c_0..c_{e-1}
    using P = std::vector<int64_t>;

    int64_t md(int64_t x) const {
        x %= pm;
        if (x < 0) x += pm;
        return x;
    }

    P mul(const P& a, const P& b) const {
        std::vector<int64_t> r(2 * e - 1, 0);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j) r[i + j] = md(r[i + j] + a[i] * b[j]);
        for (int k = 2 * e - 2; k >= e; --k) {
            int64_t c = r[k];
            if (c == 0) continue;
            r[k] = 0;
            for (int i = 0; i < e; ++i) r[k - e + i] = md(r[k - e + i] - c * md(eis[i]));
        }
        r.resize(e);
        return r;
    }

    P sub(P a, const P& b) const {
        for (int i = 0; i < e; ++i) a[i] = md(a[i] - b[i]);
        return a;
    }
    P scale(P a, int64_t s) const {
        for (int i = 0; i < e; ++i) a[i] = md(a[i] * md(s));
        return a;
    }
};

int64_t inv_mod(int64_t a, int64_t m) {
    int64_t t = 0, newt = 1, r = m, newr = a % m;
    if (newr < 0) newr += m;
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += m;
    return t;
}

std::vector<int64_t> compute_p_expansion(int64_t p, int N, const std::vector<int64_t>& eis) {
    int e = static_cast<int>(eis.size());
    int M = N + 2;
    int64_t pm = 1;
    for (int i = 0; i < M; ++i) {
        if (pm > (int64_t{1} << 31) / p)
            fail(Errc::ValidationError, "eisenstein ring precision too large for exact bootstrap");
        pm *= p;
    }
    BootPoly B{e, pm, eis};
    // u(t) = sum (c_i/p) t^i; t^e = -p u(t), u a unit.
    BootPoly::P u(e, 0);
    for (int i = 0; i < e; ++i) u[i] = B.md(eis[i] / p);
    // Invert u by Newton iteration from the residue inverse of its constant term.
    BootPoly::P v(e, 0);
    v[0] = inv_mod(((u[0] % p) + p) % p, p);
    for (int it = 0; it < 8; ++it) {
        BootPoly::P two(e, 0);
        two[0] = 2;
        v = B.mul(v, B.sub(two, B.mul(u, v)));
    }
    // w = p/t = -t^{e-1} u^{-1}
    BootPoly::P tpow(e, 0);
    tpow[e - 1] = 1;
    BootPoly::P w = B.scale(B.mul(tpow, v), pm - 1);
    // Extract digits of p: strip the residue, then divide by t via
    // x/t = (x - x_0)/t + (x_0/p) * (p/t).
    BootPoly::P x(e, 0);
    x[0] = B.md(p);
    std::vector<int64_t> out(N, 0);
    for (int i = 0; i < N; ++i) {
        int64_t d = x[0] % p;
        out[i] = d;
        x[0] = B.md(x[0] - d);
        if (x[0] % p != 0) fail(Errc::Internal, "digit extraction lost exactness");
        int64_t q = x[0] / p;
        BootPoly::P y(e, 0);
        for (int j = 0; j + 1 < e; ++j) y[j] = x[j + 1];
        x = B.sub(y, B.scale(w, B.md(-q)));
    }
    if (out[0] != 0) fail(Errc::Internal, "p has valuation zero");
    return out;
}

} // namespace

ChainRing ChainRing::make(const RingSpec& spec) {
    if (spec.precision < 1) fail(Errc::ZeroPrecision, "precision must be >= 1");
    if (!is_prime(spec.p)) fail(Errc::NonPrime, "p = " + std::to_string(spec.p) + " is not prime");
    auto core = std::make_shared<Core>();
    core->spec = spec;
    core->N = spec.precision;
    core->p = spec.p;
    if (spec.kind == RingKind::Unramified) {
        if (!spec.eis_coeffs.empty())
            fail(Errc::ValidationError, "unramified ring must not carry eisenstein coefficients");
        core->e = 1;
        core->p_expansion.assign(core->N, 0);
        if (core->N > 1) core->p_expansion[1] = 1;
    } else {
        int e = static_cast<int>(spec.eis_coeffs.size());
        if (e < 2) fail(Errc::NotEisenstein, "eisenstein polynomial must have degree >= 2");
        for (int64_t c : spec.eis_coeffs)
            if (c % spec.p != 0) fail(Errc::NotEisenstein, "coefficient not divisible by p");
        if (spec.eis_coeffs[0] % (spec.p * spec.p) == 0)
            fail(Errc::NotEisenstein, "constant coefficient divisible by p^2");
        core->e = e;
        core->p_expansion = compute_p_expansion(spec.p, core->N, spec.eis_coeffs);
    }
    if (core->N > kMaxDigits || std::pow(static_cast<double>(spec.p), spec.precision) > 9e18)
        fail(Errc::ValidationError, "ring too large for packed representation");
    core->ppow.resize(core->N + 1);
    core->ppow[0] = 1;
    for (int i = 1; i <= core->N; ++i) core->ppow[i] = core->ppow[i - 1] * static_cast<uint64_t>(spec.p);
    return ChainRing(std::move(core));
}

ChainRing ChainRing::unramified(int64_t p, int precision) {
    return make(RingSpec{RingKind::Unramified, p, precision, {}});
}

ChainRing ChainRing::eisenstein(int64_t p, std::vector<int64_t> coeffs, int precision) {
    return make(RingSpec{RingKind::Eisenstein, p, precision, std::move(coeffs)});
}

const ChainRing::Core& ChainRing::core() const {
    if (!core_) fail(Errc::Internal, "use of default-constructed ChainRing");
    return *core_;
}

const RingSpec& ChainRing::spec() const { return core().spec; }
int ChainRing::precision() const { return core().N; }
int64_t ChainRing::p() const { return core().p; }
int ChainRing::ram_index() const { return core().e; }
uint64_t ChainRing::size() const { return core().ppow[core().N]; }

Elem ChainRing::one() const { return Elem{1}; }

Elem ChainRing::pi() const { return pi_pow(1); }

Elem ChainRing::pi_pow(int k) const {
    const Core& c = core();
    if (k >= c.N) return Elem{0};
    if (k < 0) fail(Errc::Internal, "negative pi power");
    return Elem{c.ppow[k]};
}

Elem ChainRing::from_int(int64_t n) const {
    const Core& c = core();
    Digits v{};
    v[0] = n;
    c.normalize(v);
    return c.encode(v);
}

Elem ChainRing::from_digits(const std::vector<int64_t>& d) const {
    const Core& c = core();
    Digits v{};
    for (size_t i = 0; i < d.size() && i < static_cast<size_t>(c.N); ++i) v[i] = d[i];
    c.normalize(v);
    return c.encode(v);
}

std::vector<int64_t> ChainRing::digits(Elem x) const {
    const Core& c = core();
    Digits d{};
    c.decode(x, d);
    return std::vector<int64_t>(d.begin(), d.begin() + c.N);
}

int64_t ChainRing::digit(Elem x, int i) const {
    const Core& c = core();
    if (i < 0 || i >= c.N) return 0;
    return static_cast<int64_t>((x.packed / c.ppow[i]) % static_cast<uint64_t>(c.p));
}

Elem ChainRing::add(Elem a, Elem b) const {
    const Core& c = core();
    Digits u{}, v{};
    c.decode(a, u);
    c.decode(b, v);
    for (int i = 0; i < c.N; ++i) u[i] += v[i];
    c.normalize(u);
    return c.encode(u);
}

Elem ChainRing::sub(Elem a, Elem b) const {
    const Core& c = core();
    Digits u{}, v{};
    c.decode(a, u);
    c.decode(b, v);
    for (int i = 0; i < c.N; ++i) u[i] -= v[i];
    c.normalize(u);
    return c.encode(u);
}

Elem ChainRing::neg(Elem a) const { return sub(zero(), a); }

Elem ChainRing::mul(Elem a, Elem b) const {
    const Core& c = core();
    if (a.packed == 0 || b.packed == 0) return Elem{0};
    Digits u{}, v{}, w{};
    c.decode(a, u);
    c.decode(b, v);
    for (int i = 0; i < c.N; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < c.N - i; ++j) w[i + j] += u[i] * v[j];
    }
    c.normalize(w);
    return c.encode(w);
}

Elem ChainRing::mul_int(Elem a, int64_t n) const {
    const Core& c = core();
    Digits u{};
    c.decode(a, u);
    for (int i = 0; i < c.N; ++i) u[i] *= n;
    c.normalize(u);
    return c.encode(u);
}

bool ChainRing::is_unit(Elem a) const { return a.packed % static_cast<uint64_t>(core().p) != 0; }

int ChainRing::val(Elem a) const {
    const Core& c = core();
    if (a.packed == 0) return c.N;
    int v = 0;
    uint64_t x = a.packed;
    while (x % static_cast<uint64_t>(c.p) == 0) {
        x /= static_cast<uint64_t>(c.p);
        ++v;
    }
    return v;
}

int64_t ChainRing::residue(Elem a) const { return static_cast<int64_t>(a.packed % static_cast<uint64_t>(core().p)); }

Elem ChainRing::unit_inverse(Elem a) const {
    if (!is_unit(a)) fail(Errc::NotInvertible, "element is not a unit");
    Elem x = from_int(inv_mod(residue(a), p()));
    // Newton lifting x <- x(2 - a x); doubles the correct precision each step.
    Elem two = from_int(2);
    for (int prec = 1; prec < precision(); prec *= 2) x = mul(x, sub(two, mul(a, x)));
    return x;
}

Elem ChainRing::shift_down(Elem a, int j) const {
    const Core& c = core();
    if (j <= 0) return a;
    if (j >= c.N) return Elem{0};
    return Elem{a.packed / c.ppow[j]};
}

Elem ChainRing::exact_div_pi(Elem a, int j, const ChainRing& target) const {
    const Core& c = core();
    if (val(a) < j) fail(Errc::InsufficientValuation, "valuation " + std::to_string(val(a)) + " < " + std::to_string(j));
    if (!same_spec(target) || target.precision() > c.N - j)
        fail(Errc::BadPrecision, "exact_div_pi target must be the ring at precision <= N - j");
    Elem shifted = shift_down(a, j);
    return Elem{shifted.packed % target.size()};
}

ChainRing ChainRing::reduced(int new_precision) const {
    const Core& c = core();
    if (new_precision < 1 || new_precision > c.N)
        fail(Errc::BadPrecision, "reduce to precision in [1, N]");
    if (new_precision == c.N) return *this;
    RingSpec s = c.spec;
    s.precision = new_precision;
    return make(s);
}

Elem ChainRing::reduce_elem(Elem a, const ChainRing& target) const {
    if (!same_spec(target) || target.precision() > precision())
        fail(Errc::BadPrecision, "reduce_elem target must share the spec at lower precision");
    return Elem{a.packed % target.size()};
}

Elem ChainRing::lift_elem(Elem a, const ChainRing& target) const {
    if (!same_spec(target) || target.precision() < precision())
        fail(Errc::BadPrecision, "lift_elem target must share the spec at higher precision");
    return a;
}

bool ChainRing::same(const ChainRing& other) const {
    return core_ == other.core_ || spec() == other.spec();
}

bool ChainRing::same_spec(const ChainRing& other) const {
    const RingSpec& a = spec();
    const RingSpec& b = other.spec();
    return a.kind == b.kind && a.p == b.p && a.eis_coeffs == b.eis_coeffs;
}

std::string ChainRing::format(Elem a) const {
    const Core& c = core();
    if (c.spec.kind == RingKind::Unramified) return std::to_string(a.packed);
    if (a.packed == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < c.N; ++i) {
        int64_t d = digit(a, i);
        if (d == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << d;
        } else {
            if (d != 1) os << d << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace hochkit
