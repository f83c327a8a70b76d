#include "tap/laurent.hpp"

#include <sstream>
#include <vector>

namespace tap {

LaurentPoly LaurentPoly::monomial(BigRat c, long exp) {
    LaurentPoly p;
    c.canonicalize();
    if (c != 0) p.terms_[exp] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
    LaurentPoly p;
    for (auto& [e, c] : terms)
        if (c != 0) p.terms_.emplace(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long>& coeffs, long low) {
    LaurentPoly p;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.terms_[low + static_cast<long>(i)] = BigRat(coeffs[i]);
    return p;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

BigRat LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigRat(0) : it->second;
}

void LaurentPoly::add_term(long exp, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigRat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::involution() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::substituted_power(long n) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[e * n] = c;
    return r;
}

BigRat LaurentPoly::evaluate(const BigRat& x) const {
    BigRat acc(0);
    for (auto& [e, c] : terms_) {
        BigRat pw(1);
        long a = e < 0 ? -e : e;
        for (long i = 0; i < a; ++i) pw *= x;
        if (e < 0) pw = 1 / pw;
        acc += c * pw;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigRat a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = p.shifted(-p.min_exp());
    if (q.coeff(0) < 0) q = -q;
    return q;
}

long span_degree(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("degree of zero polynomial is undefined");
    return p.max_exp() - p.min_exp();
}

bool is_monic(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("monicness of zero polynomial is undefined");
    BigRat lead = p.terms().rbegin()->second;
    return lead == 1 || lead == -1;
}

BigRat content(const LaurentPoly& p) {
    if (p.is_zero()) return BigRat(0);
    BigInt num(0), den(1);
    for (auto& [e, c] : p.terms()) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        num = g;
        mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        den = g;
    }
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / content(p));
}

namespace {

// Remainder of poly division over Q, both arguments with min exponent >= 0.
LaurentPoly poly_rem(LaurentPoly a, const LaurentPoly& b) {
    long db = b.max_exp();
    const BigRat& lb = b.terms().rbegin()->second;
    while (!a.is_zero() && a.max_exp() >= db) {
        BigRat f = a.terms().rbegin()->second / lb;
        a -= b.scaled(f).shifted(a.max_exp() - db);
    }
    return a;
}

LaurentPoly poly_gcd_q(LaurentPoly a, LaurentPoly b) {
    a = normalize_unit(primitive_part(a));
    b = normalize_unit(primitive_part(b));
    while (!b.is_zero()) {
        LaurentPoly r = poly_rem(a, b);
        a = std::move(b);
        if (r.is_zero())
            b = LaurentPoly();
        else
            b = normalize_unit(primitive_part(r));
    }
    return a;
}

}  // namespace

LaurentPoly gcd_laurent(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    if (p.is_zero()) return normalize_unit(q);
    if (q.is_zero()) return normalize_unit(p);
    BigRat cp = content(p), cq = content(q);
    BigInt num, den;
    mpz_gcd(num.get_mpz_t(), cp.get_num().get_mpz_t(), cq.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), cp.get_den().get_mpz_t(), cq.get_den().get_mpz_t());
    BigRat c(num, den);
    c.canonicalize();
    LaurentPoly g = poly_gcd_q(p, q);
    return normalize_unit(g.scaled(c));
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return LaurentPoly();
    LaurentPoly a = num.shifted(-num.min_exp());
    LaurentPoly b = den.shifted(-den.min_exp());
    long shift = num.min_exp() - den.min_exp();
    LaurentPoly quo;
    long db = b.max_exp();
    const BigRat& lb = b.terms().rbegin()->second;
    while (!a.is_zero()) {
        if (a.max_exp() < db) return std::nullopt;
        BigRat f = a.terms().rbegin()->second / lb;
        long e = a.max_exp() - db;
        quo.add_term(e, f);
        a -= b.scaled(f).shifted(e);
    }
    return quo.shifted(shift);
}

bool is_unit(const LaurentPoly& p) {
    if (p.terms().size() != 1) return false;
    const BigRat& c = p.terms().begin()->second;
    return c == 1 || c == -1;
}

}  // namespace tap
