#include "tap/homs.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace tap {

bool Epimorphism::is_valid(const Presentation& p) const {
    if (images.size() != p.generators.size()) return false;
    for (const Word& r : p.relators)
        if (!evaluate(r).is_identity()) return false;
    return static_cast<int>(permutation_closure(images, target.degree).size()) == target.order();
}

long PhiClass::of_word(const Word& w) const {
    long s = 0;
    for (const Letter& l : w) s += l.sign * exponents.at(l.gen);
    return s;
}

bool PhiClass::is_zero() const {
    return std::all_of(exponents.begin(), exponents.end(), [](long e) { return e == 0; });
}

bool PhiClass::is_primitive() const {
    long g = 0;
    for (long e : exponents) g = std::gcd(g, e);
    return g == 1;
}

Abelianization abelianization(const Presentation& p) {
    const int k = p.num_generators();
    const int l = static_cast<int>(p.relators.size());
    IntMatrix m(l, k);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = BigInt(exponent_sum(p.relators[i], j));
    std::vector<BigInt> d = integer_smith(m);
    Abelianization ab;
    int nonzero = 0;
    for (const BigInt& x : d) {
        if (x != 0) {
            ++nonzero;
            if (x > 1) ab.torsion.push_back(x);
        }
    }
    ab.free_rank = k - nonzero;
    return ab;
}

PhiClass phi_from_exponents(const Presentation& p, const std::vector<long>& exponents) {
    if (exponents.size() != p.generators.size())
        throw std::invalid_argument("one exponent per generator required");
    PhiClass phi{exponents};
    for (size_t i = 0; i < p.relators.size(); ++i)
        if (phi.of_word(p.relators[i]) != 0)
            throw NotAHomomorphism("relator " + std::to_string(i) + " has nonzero phi-value " +
                                   std::to_string(phi.of_word(p.relators[i])));
    return phi;
}

namespace {

// Lexicographically minimal representative under simultaneous conjugation.
bool is_conjugation_minimal(const std::vector<int>& idx, const FiniteGroup& g) {
    std::vector<int> conj(idx.size());
    for (const Perm& c : g.table) {
        Perm ci = c.inverse();
        for (size_t j = 0; j < idx.size(); ++j) conj[j] = g.index_of(ci.then(g.table[idx[j]]).then(c));
        if (conj < idx) return false;
    }
    return true;
}

}  // namespace

namespace {

std::vector<Epimorphism> enumerate_images(const Presentation& p, const FiniteGroup& g,
                                          bool require_surjective, bool dedupe_conjugacy) {
    const int k = p.num_generators();
    const int n = g.order();
    // relators become checkable once their highest generator is assigned
    std::vector<std::vector<const Word*>> ready(k + 1);
    for (const Word& r : p.relators) {
        int hi = -1;
        for (const Letter& l : r) hi = std::max(hi, l.gen);
        ready[hi + 1].push_back(&r);
    }
    std::vector<Epimorphism> out;
    std::vector<int> idx(k);
    std::vector<Perm> images(k);

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            if (require_surjective &&
                static_cast<int>(permutation_closure(images, g.degree).size()) != n)
                return;
            if (dedupe_conjugacy && !is_conjugation_minimal(idx, g)) return;
            out.push_back({g, images});
            return;
        }
        for (int i = 0; i < n; ++i) {
            idx[depth] = i;
            images[depth] = g.table[i];
            bool ok = true;
            for (const Word* r : ready[depth + 1])
                if (!evaluate_word(*r, std::span<const Perm>(images.data(), depth + 1), g.degree)
                         .is_identity()) {
                    ok = false;
                    break;
                }
            if (ok) self(self, depth + 1);
        }
    };
    if (k == 0) {
        if (!require_surjective || n == 1) out.push_back({g, {}});
        return out;
    }
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<Epimorphism> enumerate_epimorphisms(const Presentation& p, const FiniteGroup& g,
                                                bool dedupe_conjugacy) {
    return enumerate_images(p, g, true, dedupe_conjugacy);
}

std::vector<Epimorphism> enumerate_homomorphisms(const Presentation& p, const FiniteGroup& g) {
    return enumerate_images(p, g, false, false);
}

std::vector<Word> kernel_schreier_generators(const Presentation& p, const Epimorphism& alpha,
                                             int tree_variant) {
    const FiniteGroup& g = alpha.target;
    const int n = g.order();
    const int k = p.num_generators();
    std::vector<int> gen_order(k);
    std::iota(gen_order.begin(), gen_order.end(), 0);
    std::rotate(gen_order.begin(), gen_order.begin() + (k == 0 ? 0 : tree_variant % k), gen_order.end());

    // coset graph on elements, edges h -> h * alpha(x); BFS spanning tree
    int id = g.index_of(Perm::identity(g.degree));
    std::vector<Word> path(n);
    std::vector<bool> seen(n, false);
    seen[id] = true;
    std::queue<int> q;
    q.push(id);
    std::vector<std::vector<int>> step(k);  // step[x][i] = index of table[i]*alpha(x)
    for (int x = 0; x < k; ++x) {
        step[x].resize(n);
        for (int i = 0; i < n; ++i) step[x][i] = g.index_of(g.table[i].then(alpha.images[x]));
    }
    std::vector<std::vector<bool>> in_tree(k, std::vector<bool>(n, false));
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int x : gen_order) {
            int v = step[x][u];
            if (!seen[v]) {
                seen[v] = true;
                in_tree[x][u] = true;
                path[v] = word_concat(path[u], {{x, 1}});
                q.push(v);
            }
        }
    }
    std::vector<Word> gens;
    for (int u = 0; u < n; ++u)
        for (int x = 0; x < k; ++x) {
            if (in_tree[x][u]) continue;
            int v = step[x][u];
            gens.push_back(word_concat(word_concat(path[u], {{x, 1}}), word_inverse(path[v])));
        }
    return gens;
}

long divisibility_of_restriction(const PhiClass& phi, const std::vector<Word>& kernel_gens) {
    long g = 0;
    for (const Word& w : kernel_gens) g = std::gcd(g, phi.of_word(w));
    return g;
}

SeparabilityWitness separability_witness(const Presentation& p, const std::vector<Word>& subgroup_gens,
                                         const Word& g, const std::vector<FiniteGroup>& catalog,
                                         int max_order) {
    SeparabilityWitness res;
    res.max_order_searched = max_order;
    for (const FiniteGroup& grp : catalog) {
        if (grp.order() > max_order) continue;
        for (Epimorphism& e : enumerate_epimorphisms(p, grp)) {
            std::vector<Perm> sub_images;
            sub_images.reserve(subgroup_gens.size());
            for (const Word& w : subgroup_gens) sub_images.push_back(e.evaluate(w));
            std::vector<Perm> sub = permutation_closure(sub_images, grp.degree);
            Perm target = e.evaluate(g);
            if (!std::binary_search(sub.begin(), sub.end(), target)) {
                res.witness = std::move(e);
                return res;
            }
        }
    }
    return res;
}

}  // namespace tap
