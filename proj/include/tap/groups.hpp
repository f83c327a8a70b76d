#pragma once

#include <span>
#include <string>
#include <vector>

#include "tap/words.hpp"

namespace tap {

struct Perm {
    std::vector<int> img;

    static Perm identity(int degree);
    int degree() const { return static_cast<int>(img.size()); }
    /// Composition: apply *this, then o.
    Perm then(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;
    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;
    std::string str() const;  // one-line image notation
};

/// Small permutation group with a fully enumerated, canonically sorted
/// element table.
struct FiniteGroup {
    std::string name;
    int degree = 1;
    std::vector<Perm> generators;
    std::vector<Perm> table;  // sorted by image tuple

    int order() const { return static_cast<int>(table.size()); }
    int index_of(const Perm& p) const;  // -1 if absent
    bool contains(const Perm& p) const { return index_of(p) >= 0; }

    static FiniteGroup from_generators(std::string name, int degree, std::vector<Perm> gens);
    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);     // order 2n, degree n
    static FiniteGroup symmetric(int n);
    static FiniteGroup alternating(int n);  // n = 4 or 5
};

/// Closure of a generating set under products; sorted.
std::vector<Perm> permutation_closure(std::span<const Perm> gens, int degree);

Perm evaluate_word(const Word& w, std::span<const Perm> images, int degree);

/// Deterministic catalog: cyclic, dihedral, symmetric, alternating groups
/// of order <= max_order, sorted by (order, name).
std::vector<FiniteGroup> group_catalog(int max_order);

}  // namespace tap
