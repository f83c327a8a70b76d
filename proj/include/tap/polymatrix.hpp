#pragma once

#include <vector>

#include "tap/laurent.hpp"

namespace tap {

/// Dense row-major matrix of Laurent polynomials.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<LaurentPoly> e;

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

    LaurentPoly& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const LaurentPoly& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    static PolyMatrix identity(int n);
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    bool is_zero() const;
};

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> e;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

    BigInt& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
};

/// Exact determinant by fraction-free elimination. Errors on non-square input.
LaurentPoly det_poly(const PolyMatrix& m);

/// gcd over all s x s minors, unit-normalized; 0 if all vanish. Enumeration
/// folds a running gcd and stops early once it reaches a unit.
LaurentPoly minors_gcd(const PolyMatrix& m, int s);

/// Rank of m over the rational function field Q(t).
int rank_over_fraction_field(const PolyMatrix& m);

/// Invariant factors d1 | d2 | ... of m over Q[t] (Laurent entries shifted
/// to polynomials first). Monic representatives; trailing zeros trimmed.
std::vector<LaurentPoly> smith_diagonal_over_rationals(const PolyMatrix& m);

/// Smith normal form diagonal over Z, nonnegative, d1 | d2 | ...
std::vector<BigInt> integer_smith(const IntMatrix& m);

namespace detail {

/// Row-side Smith data for kernel computations: diag entries of U*M*V and
/// the tracked inverse of the row transform U, so that for a row vector v,
/// v lies in ker(v -> v*M) iff the first `rank` coordinates of v*u_inv
/// vanish, and the remaining rows of U form a free basis of the kernel.
struct RowSmith {
    std::vector<LaurentPoly> diag;
    PolyMatrix u_inv;
    int rank = 0;
};

RowSmith row_smith_with_inverse(PolyMatrix m);

/// Product of the invariant factors over Q[t] of the maximal-rank size,
/// i.e. gcd of rank-sized minors up to a unit of Q[t] and a power of t.
/// Returns 1 for the zero matrix.
LaurentPoly invariant_factor_product(const PolyMatrix& m);

/// Shift all entries by a global power of t so every entry has
/// nonnegative exponents.
PolyMatrix clear_negative_exponents(const PolyMatrix& m, long* shift_out = nullptr);

}  // namespace detail

}  // namespace tap
