#pragma once

#include <optional>
#include <vector>

#include "tap/groups.hpp"
#include "tap/polymatrix.hpp"
#include "tap/words.hpp"

namespace tap {

struct Epimorphism {
    FiniteGroup target;
    std::vector<Perm> images;  // one per presentation generator

    Perm evaluate(const Word& w) const { return evaluate_word(w, images, target.degree); }
    /// Relators map to the identity and the images generate the target.
    bool is_valid(const Presentation& p) const;
};

/// Homomorphism to Z by generator exponents. Relators must have phi-value 0.
struct PhiClass {
    std::vector<long> exponents;

    long of_gen(int g) const { return exponents.at(g); }
    long of_word(const Word& w) const;
    bool is_zero() const;
    bool is_primitive() const;  // gcd of exponents is 1
};

struct NotAHomomorphism : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Abelianization {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1
};

Abelianization abelianization(const Presentation& p);

/// Validates that every relator has phi-value 0; throws NotAHomomorphism.
PhiClass phi_from_exponents(const Presentation& p, const std::vector<long>& exponents);

/// All surjective relator-respecting generator-image tuples, in lexicographic
/// order of element-table indices. Backtracking with fully-assigned-relator
/// pruning. With dedupe, one representative per simultaneous-conjugation orbit.
std::vector<Epimorphism> enumerate_epimorphisms(const Presentation& p, const FiniteGroup& g,
                                                bool dedupe_conjugacy = false);

/// Same enumeration without the surjectivity filter.
std::vector<Epimorphism> enumerate_homomorphisms(const Presentation& p, const FiniteGroup& g);

/// Schreier generators of ker(alpha) from the coset graph on the element
/// table: one word per non-tree edge. tree_variant permutes the BFS
/// generator order (same kernel, different spanning tree).
std::vector<Word> kernel_schreier_generators(const Presentation& p, const Epimorphism& alpha,
                                             int tree_variant = 0);

/// gcd of |phi(w)| over the kernel generators; 0 if all values vanish.
long divisibility_of_restriction(const PhiClass& phi, const std::vector<Word>& kernel_gens);

struct SeparabilityWitness {
    std::optional<Epimorphism> witness;  // empty: NoneUpToBound
    int max_order_searched = 0;
};

/// Search catalog groups of order <= max_order for an epimorphism with
/// alpha(g) outside the subgroup generated by the images of subgroup_gens.
SeparabilityWitness separability_witness(const Presentation& p, const std::vector<Word>& subgroup_gens,
                                         const Word& g, const std::vector<FiniteGroup>& catalog,
                                         int max_order);

}  // namespace tap
