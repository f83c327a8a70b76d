#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tap {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// One-variable Laurent polynomial with exact rational coefficients.
/// Invariant: no stored coefficient is zero; the zero polynomial is the
/// empty map.
class LaurentPoly {
public:
    using Terms = std::map<long, BigRat>;

    LaurentPoly() = default;

    static LaurentPoly constant(long c) { return monomial(BigRat(c), 0); }
    static LaurentPoly monomial(BigRat c, long exp);
    static LaurentPoly from_terms(Terms terms);
    /// Coefficients low-to-high starting at exponent `low`.
    static LaurentPoly from_coeffs(const std::vector<long>& coeffs, long low = 0);

    bool is_zero() const { return terms_.empty(); }
    long min_exp() const;
    long max_exp() const;
    const Terms& terms() const { return terms_; }
    BigRat coeff(long exp) const;

    void add_term(long exp, const BigRat& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    LaurentPoly scaled(const BigRat& c) const;
    /// Multiply by t^k.
    LaurentPoly shifted(long k) const;
    /// t -> 1/t.
    LaurentPoly involution() const;
    /// t -> t^n.
    LaurentPoly substituted_power(long n) const;
    BigRat evaluate(const BigRat& x) const;

    std::string str() const;

private:
    Terms terms_;
};

/// Canonical associate: min exponent 0, lowest-degree coefficient positive.
LaurentPoly normalize_unit(const LaurentPoly& p);

/// Exponent span, max - min. Undefined on zero.
long span_degree(const LaurentPoly& p);

/// Leading (highest-exponent) coefficient is +-1. Undefined on zero.
bool is_monic(const LaurentPoly& p);

/// gcd of all coefficients as positive rational (gcd of numerators over
/// lcm of denominators); 0 for the zero polynomial.
BigRat content(const LaurentPoly& p);

/// p / content(p): integer coefficients with gcd 1. Zero maps to zero.
LaurentPoly primitive_part(const LaurentPoly& p);

/// gcd in Z[t^{+-1}]: gcd of contents times primitive gcd (Euclid over Q,
/// then Gauss). Unit-normalized. Errors if both inputs are zero.
LaurentPoly gcd_laurent(const LaurentPoly& p, const LaurentPoly& q);

/// Exact quotient num/den, or nullopt if den is zero or does not divide.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// True for +-t^k.
bool is_unit(const LaurentPoly& p);

}  // namespace tap
