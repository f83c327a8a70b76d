#include "tap/twisted.hpp"

#include <stdexcept>

namespace tap {

GroupRingElem fox_derivative(const Word& w, int gen) {
    GroupRingElem res;
    Word prefix;
    auto bump = [&](const Word& key, int delta) {
        auto [it, fresh] = res.try_emplace(key, delta);
        if (!fresh) {
            it->second += delta;
            if (it->second == 0) res.erase(it);
        }
    };
    for (const Letter& l : w) {
        if (l.gen == gen) {
            if (l.sign > 0)
                bump(prefix, 1);
            else
                bump(word_concat(prefix, {{l.gen, -1}}), -1);
        }
        prefix = word_concat(prefix, {l});
    }
    return res;
}

GroupRingElem ring_add(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r = a;
    for (const auto& [w, c] : b) {
        auto [it, fresh] = r.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

GroupRingElem ring_mul(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Word w = word_concat(u, v);
            auto [it, fresh] = r.try_emplace(w, cu * cv);
            if (!fresh) {
                it->second += cu * cv;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

GroupRingElem ring_of_word(const Word& w) { return {{free_reduce(w), BigInt(1)}}; }

PolyMatrix TwistRep::sigma_word(const Word& w) const {
    const FiniteGroup& g = alpha.target;
    const int d = g.order();
    Perm p = alpha.evaluate(w);
    long e = phi.of_word(w);
    PolyMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        int j = g.index_of(g.table[i].then(p));
        m.at(i, j) = LaurentPoly::monomial(BigRat(1), e);
    }
    return m;
}

PolyMatrix TwistRep::sigma(const GroupRingElem& elem) const {
    const int d = dim();
    PolyMatrix m(d, d);
    for (const auto& [w, c] : elem) {
        const FiniteGroup& g = alpha.target;
        Perm p = alpha.evaluate(w);
        long e = phi.of_word(w);
        for (int i = 0; i < d; ++i)
            m.at(i, g.index_of(g.table[i].then(p))).add_term(e, BigRat(c));
    }
    return m;
}

ChainComplex build_complex(const Presentation& p, const TwistRep& rep) {
    const int d = rep.dim();
    const int k = p.num_generators();
    const int l = static_cast<int>(p.relators.size());
    ChainComplex c;
    c.d2 = PolyMatrix(l * d, k * d);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < k; ++j) {
            PolyMatrix b = rep.sigma(fox_derivative(p.relators[i], j));
            for (int u = 0; u < d; ++u)
                for (int v = 0; v < d; ++v) c.d2.at(i * d + u, j * d + v) = std::move(b.at(u, v));
        }
    c.d1 = PolyMatrix(k * d, d);
    for (int j = 0; j < k; ++j) {
        PolyMatrix b = rep.sigma_word({{j, 1}}) - PolyMatrix::identity(d);
        for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v) c.d1.at(j * d + u, v) = std::move(b.at(u, v));
    }
    if (l > 0 && !(c.d2 * c.d1).is_zero()) throw std::logic_error("chain condition violated");
    return c;
}

LaurentPoly delta_zero(const Presentation& p, const TwistRep& rep) {
    std::vector<Word> ker = kernel_schreier_generators(p, rep.alpha);
    long e = divisibility_of_restriction(rep.phi, ker);
    if (e == 0) return LaurentPoly();
    return LaurentPoly::monomial(BigRat(1), e) - LaurentPoly::constant(1);
}

LaurentPoly delta_zero_minors(const ChainComplex& c, int d) { return minors_gcd(c.d1, d); }

namespace {

struct Delta1Raw {
    LaurentPoly primitive;  // primitive part, unit-normalized; zero on rank deficit
};

Delta1Raw delta_one_raw(const ChainComplex& c) {
    const int kd = c.d1.rows;
    detail::RowSmith rs = detail::row_smith_with_inverse(c.d1);
    const int nullity = kd - rs.rank;
    Delta1Raw out;
    if (nullity == 0) {
        out.primitive = LaurentPoly::constant(1);
        return out;
    }
    PolyMatrix w = c.d2 * rs.u_inv;
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < rs.rank; ++j)
            if (!w.at(i, j).is_zero()) throw std::logic_error("relator row escapes kernel");
    PolyMatrix kmat(w.rows, nullity);
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < nullity; ++j) kmat.at(i, j) = std::move(w.at(i, rs.rank + j));
    detail::RowSmith krs = detail::row_smith_with_inverse(kmat);
    if (krs.rank < nullity) return out;  // zero
    LaurentPoly prod = LaurentPoly::constant(1);
    for (int i = 0; i < krs.rank; ++i) prod = prod * krs.diag[i];
    out.primitive = normalize_unit(primitive_part(prod));
    return out;
}

bool has_integer_coeffs(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c.get_den() != 1) return false;
    return true;
}

}  // namespace

LaurentPoly delta_one(const Presentation& p, const TwistRep& rep) {
    return delta_one_raw(build_complex(p, rep)).primitive;
}

DeltaBundle twisted_alexander(const Presentation& p, const TwistRep& rep) {
    const int d = rep.dim();
    const int k = p.num_generators();
    const int l = static_cast<int>(p.relators.size());
    ChainComplex c = build_complex(p, rep);
    DeltaBundle b;
    b.delta0 = delta_zero(p, rep);
    b.delta1 = delta_one_raw(c).primitive;

    for (int j = 0; j < k; ++j) {
        PolyMatrix blk(d, d);
        for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v) blk.at(u, v) = c.d1.at(j * d + u, v);
        LaurentPoly den = det_poly(blk);
        if (den.is_zero()) continue;
        b.column_used = j;
        b.wada_den = den;
        if (l == k - 1) {
            PolyMatrix mj(l * d, (k - 1) * d);
            for (int i = 0; i < l * d; ++i) {
                int cc = 0;
                for (int jj = 0; jj < k; ++jj) {
                    if (jj == j) continue;
                    for (int v = 0; v < d; ++v) mj.at(i, cc++) = c.d2.at(i, jj * d + v);
                }
            }
            b.wada_num = det_poly(mj);
        }
        break;
    }

    // delta1 * wada_den = wada_num * delta0 up to units pins the content
    if (b.column_used >= 0 && l == k - 1 && !b.wada_num.is_zero() && !b.delta0.is_zero() &&
        !b.delta1.is_zero()) {
        auto q = divide_exact(b.wada_num * b.delta0, b.wada_den);
        if (q && !q->is_zero()) {
            LaurentPoly cand = normalize_unit(*q);
            if (has_integer_coeffs(cand) && primitive_part(cand) == b.delta1) {
                b.delta1 = cand;
                b.content_known = true;
            }
        }
    }
    return b;
}

}  // namespace tap
