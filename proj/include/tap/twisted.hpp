#pragma once

#include <map>

#include "tap/homs.hpp"
#include "tap/polymatrix.hpp"

namespace tap {

/// Free-group ring element: finitely many reduced words with integer
/// coefficients. Zero coefficients are never stored.
using GroupRingElem = std::map<Word, BigInt>;

/// Fox derivative d(w)/d(gen). Satisfies d(uv) = d(u) + u d(v) and
/// d(x^-1) = -x^-1.
GroupRingElem fox_derivative(const Word& w, int gen);

GroupRingElem ring_add(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem ring_mul(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem ring_of_word(const Word& w);

/// sigma(x) = t^{phi(x)} P(alpha(x)) where P(g) is the right regular
/// representation on the element table: e_h -> e_{hg}.
struct TwistRep {
    Epimorphism alpha;
    PhiClass phi;

    int dim() const { return alpha.target.order(); }
    PolyMatrix sigma_word(const Word& w) const;  // monomial d x d matrix
    PolyMatrix sigma(const GroupRingElem& e) const;
};

/// Fox-matrix chain complex of the presentation 2-complex with sigma
/// coefficients: d2 (l*d x k*d) with block (i,j) = sigma(dr_i/dx_j), and
/// d1 (k*d x d) with block j = sigma(x_j) - I.
struct ChainComplex {
    PolyMatrix d2;
    PolyMatrix d1;
};

/// Builds the complex and verifies d2 * d1 = 0.
ChainComplex build_complex(const Presentation& p, const TwistRep& rep);

/// Order of H0: t^e - 1 where e is the divisibility of phi restricted to
/// ker(alpha); the zero polynomial when that restriction vanishes.
LaurentPoly delta_zero(const Presentation& p, const TwistRep& rep);

/// Independent route to delta_zero: gcd of the d x d minors of d1.
/// Feasible only for small k*d.
LaurentPoly delta_zero_minors(const ChainComplex& c, int d);

struct DeltaBundle {
    LaurentPoly delta0;
    LaurentPoly delta1;    // unit-normalized; integer content exact only
                           // when content_known
    LaurentPoly wada_num;  // det of d2 with block column column_used removed
    LaurentPoly wada_den;  // det(sigma(x_j) - I) for that column
    int column_used = -1;  // -1: no usable Wada column
    bool content_known = false;
};

/// Order of H1 up to rational content: kernel coordinates of the relator
/// rows via a tracked row transform of d1, then invariant factors.
/// Primitive, unit-normalized; zero when the relator image has deficient
/// rank.
LaurentPoly delta_one(const Presentation& p, const TwistRep& rep);

/// delta_zero + delta_one, with the integer content of delta_one pinned
/// through the Wada fraction det(M_j)/det(sigma(x_j)-1) = delta1/delta0
/// when the presentation has deficiency one and the fraction is exact.
DeltaBundle twisted_alexander(const Presentation& p, const TwistRep& rep);

}  // namespace tap
