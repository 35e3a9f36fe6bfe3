#pragma once

#include "hochkit/chainring.hpp"

#include <optional>
#include <vector>

namespace hochkit {

/// Dense matrix over a chain ring, row-major.
struct Mat {
    ChainRing ring;
    size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(ChainRing r, size_t m, size_t n) : ring(std::move(r)), rows(m), cols(n), a(m * n) {}

    Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Elem& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static Mat identity(const ChainRing& r, size_t n);
    static Mat from_rows(const ChainRing& r, const std::vector<std::vector<Elem>>& rows, size_t cols);

    std::vector<Elem> row(size_t i) const;
    void set_row(size_t i, const std::vector<Elem>& v);
    Mat transpose() const;
    bool is_zero() const;

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

Mat mat_mul(const Mat& x, const Mat& y);
std::vector<Elem> mat_apply(const Mat& m, const std::vector<Elem>& x);       // m * column
std::vector<Elem> row_times_mat(const std::vector<Elem>& x, const Mat& m);   // row * m
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const Mat& x, Elem s);
Mat vstack(const Mat& top, const Mat& bottom);

std::vector<Elem> vec_add(const ChainRing&, const std::vector<Elem>&, const std::vector<Elem>&);
std::vector<Elem> vec_sub(const ChainRing&, const std::vector<Elem>&, const std::vector<Elem>&);
std::vector<Elem> vec_scale(const ChainRing&, Elem, const std::vector<Elem>&);
bool vec_is_zero(const std::vector<Elem>&);

struct PivotInfo {
    size_t col;
    int exponent; // pivot entry is pi^exponent
};

/// Howell canonical form of the row span.  Pivot entries are pi^d, entries
/// above a pivot are reduced mod pi^d, and the span saturation rows are
/// included, so equal row spans produce identical forms.
struct HowellForm {
    Mat H;
    std::vector<PivotInfo> pivots;
};

HowellForm howell_form(const Mat& m);

/// Reduce v against a Howell form; returns the residual.  v lies in the row
/// span iff the residual is zero.
std::vector<Elem> howell_reduce(const HowellForm& h, std::vector<Elem> v);
bool in_span(const HowellForm& h, const std::vector<Elem>& v);

/// Rows c with c * m == 0, as a Howell form.
Mat row_kernel(const Mat& m);

/// Number of elements of the row span of a Howell form: prod p^(N - d_i).
uint64_t span_order(const HowellForm& h);

struct AffineSolution {
    std::vector<Elem> x0; // one solution of m * x = b
    Mat kernel;           // Howell rows generating {x : m * x = 0}
};

/// Solve m * x = b over the chain ring.  Returns nullopt when b is not in
/// the column span (NoSolution is a result, not an error).
std::optional<AffineSolution> solve_affine(const Mat& m, const std::vector<Elem>& b);

/// Coefficients c with c * rows(m) = v, if any.
std::optional<std::vector<Elem>> express_in_rows(const Mat& m, const std::vector<Elem>& v);

/// Reusable factorization for repeated express/solve calls against the same
/// row matrix.
class RowSolveContext {
public:
    explicit RowSolveContext(const Mat& m);
    /// Coefficients c with c * rows = v, if any.
    std::optional<std::vector<Elem>> express(const std::vector<Elem>& v) const;
    /// Howell rows of {c : c * rows = 0}.
    const Mat& kernel() const { return kernel_; }

private:
    HowellForm h_;
    size_t split_ = 0;
    size_t nrows_ = 0;
    Mat kernel_;
};

/// Smith form over the chain ring: U m V = diag(pi^{d_0}, pi^{d_1}, ...)
/// with d_0 <= d_1 <= ...; vinv is V^{-1} (only V's inverse is needed by
/// callers, U is not tracked).
struct SmithForm {
    std::vector<int> diag_exponents; // length min(rows, cols)
    Mat vinv;                        // cols x cols
};

SmithForm smith_form(const Mat& m);

/// Finitely generated module over the ring as a direct sum of R/pi^{d_i}
/// with chosen generators in a fixed ambient coordinate space.  d_i = N
/// denotes a free summand; trivial summands are omitted.
struct ModulePresentation {
    ChainRing ring;
    std::vector<int> exponents; // weakly increasing, in (0, N]
    Mat generators;             // rows = ambient coordinates of generators
    uint64_t order() const;
    size_t num_generators() const { return exponents.size(); }
};

/// Invariant-factor presentation of span(z)/span(b).  Throws NotASubspace
/// when some row of b is outside span(z).
ModulePresentation subquotient_presentation(const Mat& z, const Mat& b);

/// Canonical coordinates of v (a row in span(z)) relative to a presentation
/// computed from (z, b): entry i is reduced mod pi^{d_i}.
std::vector<Elem> presentation_coordinates(const ModulePresentation& pres, const Mat& b,
                                           const std::vector<Elem>& v);

/// Truncate coordinate i to its canonical representative mod pi^{d_i}.
std::vector<Elem> canonical_coords(const ModulePresentation& pres, std::vector<Elem> c);

} // namespace hochkit
