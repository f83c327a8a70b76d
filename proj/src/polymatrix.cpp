#include "tap/polymatrix.hpp"

#include <algorithm>
#include <numeric>

namespace tap {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
    PolyMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(rows, cols);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

namespace detail {

PolyMatrix clear_negative_exponents(const PolyMatrix& m, long* shift_out) {
    long neg = 0;
    for (const auto& p : m.e)
        if (!p.is_zero()) neg = std::min(neg, p.min_exp());
    PolyMatrix r = m;
    if (neg < 0)
        for (auto& p : r.e) p = p.shifted(-neg);
    if (shift_out) *shift_out = -neg;
    return r;
}

}  // namespace detail

namespace {

long deg_or_neg(const LaurentPoly& p) { return p.is_zero() ? -1 : p.max_exp(); }

// Fraction-free (Bareiss) elimination on a working copy with entries in
// Q[t]; returns rank, and the determinant when square via sign-adjusted
// final pivot.
struct BareissResult {
    int rank = 0;
    LaurentPoly det;  // valid only for square input
};

BareissResult bareiss(PolyMatrix a) {
    const int n = a.rows, m = a.cols;
    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(1);
    int r = 0;
    for (int c = 0; r < n && c < m; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                if (piv < 0 || deg_or_neg(a.at(i, c)) < deg_or_neg(a.at(piv, c))) piv = i;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(r, j));
            sign = -sign;
        }
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < m; ++j) {
                LaurentPoly num = a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j);
                auto q = divide_exact(num, prev);
                if (!q) throw std::logic_error("bareiss exact division failed");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, c) = LaurentPoly();
        }
        prev = a.at(r, c);
        ++r;
    }
    BareissResult res;
    res.rank = r;
    if (n == m) {
        if (r < n)
            res.det = LaurentPoly();
        else
            res.det = sign > 0 ? prev : -prev;
    }
    return res;
}

}  // namespace

LaurentPoly det_poly(const PolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    if (m.rows == 0) return LaurentPoly::constant(1);
    long shift = 0;
    PolyMatrix a = detail::clear_negative_exponents(m, &shift);
    BareissResult r = bareiss(std::move(a));
    // the matrix was scaled by t^shift, so the determinant picked up t^{shift*n}
    return r.det.shifted(-shift * m.rows);
}

LaurentPoly minors_gcd(const PolyMatrix& m, int s) {
    if (s < 0 || s > std::min(m.rows, m.cols)) throw std::invalid_argument("minor size out of range");
    if (s == 0) return LaurentPoly::constant(1);
    std::vector<int> ri(s), ci(s);
    std::iota(ri.begin(), ri.end(), 0);
    LaurentPoly g;
    auto advance = [](std::vector<int>& idx, int n) {
        int k = static_cast<int>(idx.size());
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    do {
        std::iota(ci.begin(), ci.end(), 0);
        do {
            PolyMatrix sub(s, s);
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
            LaurentPoly d = det_poly(sub);
            if (d.is_zero()) continue;
            g = g.is_zero() ? normalize_unit(d) : gcd_laurent(g, d);
            if (normalize_unit(g) == LaurentPoly::constant(1)) return LaurentPoly::constant(1);
        } while (advance(ci, m.cols));
    } while (advance(ri, m.rows));
    return g.is_zero() ? g : normalize_unit(g);
}

int rank_over_fraction_field(const PolyMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return bareiss(detail::clear_negative_exponents(m)).rank;
}

namespace detail {

RowSmith row_smith_with_inverse(PolyMatrix a) {
    a = clear_negative_exponents(a);
    const int n = a.rows, m = a.cols;
    RowSmith out;
    out.u_inv = PolyMatrix::identity(n);

    auto swap_rows = [&](int i, int j) {
        for (int c = 0; c < m; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int r = 0; r < n; ++r) std::swap(out.u_inv.at(r, i), out.u_inv.at(r, j));
    };
    // row_i -= f * row_j  <=>  (u_inv) col_j += f * col_i
    auto row_sub = [&](int i, const LaurentPoly& f, int j) {
        for (int c = 0; c < m; ++c) a.at(i, c) -= f * a.at(j, c);
        for (int r = 0; r < n; ++r) out.u_inv.at(r, j) += f * out.u_inv.at(r, i);
    };
    auto scale_row = [&](int i, const BigRat& f) {
        for (int c = 0; c < m; ++c) a.at(i, c) = a.at(i, c).scaled(f);
        BigRat inv = 1 / f;
        for (int r = 0; r < n; ++r) out.u_inv.at(r, i) = out.u_inv.at(r, i).scaled(inv);
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
    };
    auto col_sub = [&](int i, const LaurentPoly& f, int j) {
        for (int r = 0; r < n; ++r) a.at(r, i) -= f * a.at(r, j);
    };

    int k = 0;
    const int kmax = std::min(n, m);
    while (k < kmax) {
        int pi = -1, pj = -1;
        long best = -1;
        for (int i = k; i < n; ++i)
            for (int j = k; j < m; ++j)
                if (!a.at(i, j).is_zero()) {
                    long d = a.at(i, j).max_exp();
                    if (pi < 0 || d < best) {
                        best = d;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) break;
        if (pi != k) swap_rows(k, pi);
        if (pj != k) swap_cols(k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            // keep coefficients small
            BigRat c = content(a.at(k, k));
            if (c != 1) scale_row(k, 1 / c);
            for (int i = k + 1; i < n && clean; ++i) {
                if (a.at(i, k).is_zero()) continue;
                auto q = divide_exact(a.at(i, k), a.at(k, k));
                LaurentPoly f;
                if (q) {
                    f = *q;
                } else {
                    // quotient of Euclidean division
                    LaurentPoly rem = a.at(i, k);
                    long dk = a.at(k, k).max_exp();
                    const BigRat& lk = a.at(k, k).terms().rbegin()->second;
                    while (!rem.is_zero() && rem.max_exp() >= dk) {
                        BigRat fac = rem.terms().rbegin()->second / lk;
                        long sh = rem.max_exp() - dk;
                        f.add_term(sh, fac);
                        rem -= a.at(k, k).scaled(fac).shifted(sh);
                    }
                }
                row_sub(i, f, k);
                if (!a.at(i, k).is_zero()) {
                    swap_rows(k, i);  // strictly smaller degree pivot
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = k + 1; j < m && clean; ++j) {
                if (a.at(k, j).is_zero()) continue;
                auto q = divide_exact(a.at(k, j), a.at(k, k));
                LaurentPoly f;
                if (q) {
                    f = *q;
                } else {
                    LaurentPoly rem = a.at(k, j);
                    long dk = a.at(k, k).max_exp();
                    const BigRat& lk = a.at(k, k).terms().rbegin()->second;
                    while (!rem.is_zero() && rem.max_exp() >= dk) {
                        BigRat fac = rem.terms().rbegin()->second / lk;
                        long sh = rem.max_exp() - dk;
                        f.add_term(sh, fac);
                        rem -= a.at(k, k).scaled(fac).shifted(sh);
                    }
                }
                col_sub(j, f, k);
                if (!a.at(k, j).is_zero()) {
                    swap_cols(k, j);
                    clean = false;
                }
            }
        }
        ++k;
    }
    out.rank = k;
    out.diag.reserve(kmax);
    for (int i = 0; i < kmax; ++i) out.diag.push_back(a.at(i, i));
    return out;
}

LaurentPoly invariant_factor_product(const PolyMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return LaurentPoly::constant(1);
    RowSmith s = row_smith_with_inverse(m);
    LaurentPoly prod = LaurentPoly::constant(1);
    for (int i = 0; i < s.rank; ++i) prod = prod * s.diag[i];
    return prod;
}

}  // namespace detail

std::vector<LaurentPoly> smith_diagonal_over_rationals(const PolyMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return {};
    detail::RowSmith s = detail::row_smith_with_inverse(m);
    std::vector<LaurentPoly> d(s.diag.begin(), s.diag.begin() + s.rank);
    // fold the diagonal into a divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (divide_exact(d[i + 1], d[i])) continue;
            LaurentPoly g = gcd_laurent(d[i], d[i + 1]);
            LaurentPoly prod = d[i] * d[i + 1];
            auto l = divide_exact(prod, g);
            d[i] = g;
            d[i + 1] = *l;
            changed = true;
        }
    }
    for (auto& p : d) {
        // monic representative
        BigRat lead = p.terms().rbegin()->second;
        p = p.scaled(1 / lead);
    }
    return d;
}

std::vector<BigInt> integer_smith(const IntMatrix& m) {
    IntMatrix a = m;
    const int n = a.rows, mm = a.cols;
    const int kmax = std::min(n, mm);
    int k = 0;
    while (k < kmax) {
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = k; i < n; ++i)
            for (int j = k; j < mm; ++j)
                if (a.at(i, j) != 0) {
                    BigInt v = abs(a.at(i, j));
                    if (pi < 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) break;
        for (int j = 0; j < mm; ++j) std::swap(a.at(pi, j), a.at(k, j));
        for (int i = 0; i < n; ++i) std::swap(a.at(i, pj), a.at(i, k));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < n; ++i) {
                if (a.at(i, k) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, k).get_mpz_t(), a.at(k, k).get_mpz_t());
                for (int j = k; j < mm; ++j) a.at(i, j) -= q * a.at(k, j);
                if (a.at(i, k) != 0) {
                    for (int j = 0; j < mm; ++j) std::swap(a.at(i, j), a.at(k, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = k + 1; j < mm; ++j) {
                if (a.at(k, j) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(k, j).get_mpz_t(), a.at(k, k).get_mpz_t());
                for (int i = k; i < n; ++i) a.at(i, j) -= q * a.at(i, k);
                if (a.at(k, j) != 0) {
                    for (int i = 0; i < n; ++i) std::swap(a.at(i, j), a.at(i, k));
                    clean = false;
                }
            }
        }
        ++k;
    }
    std::vector<BigInt> d;
    for (int i = 0; i < kmax; ++i) d.push_back(i < k ? abs(a.at(i, i)) : BigInt(0));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < k; ++i) {
            if (d[i] != 0 && d[i + 1] % d[i] == 0) continue;
            BigInt g, l;
            mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[i + 1].get_mpz_t());
            l = d[i] / g * d[i + 1];
            d[i] = g;
            d[i + 1] = l;
            changed = true;
        }
    }
    return d;
}

}  // namespace tap
