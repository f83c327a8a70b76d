#include "tap/groups.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tap {

Perm Perm::identity(int degree) {
    Perm p;
    p.img.resize(degree);
    for (int i = 0; i < degree; ++i) p.img[i] = i;
    return p;
}

Perm Perm::then(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[i] = o.img[img[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
    return r;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Perm::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < img.size(); ++i) {
        if (i) os << " ";
        os << img[i];
    }
    return os.str();
}

std::vector<Perm> permutation_closure(std::span<const Perm> gens, int degree) {
    std::set<Perm> seen;
    std::vector<Perm> frontier{Perm::identity(degree)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : gens) {
                Perm q = p.then(g);
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Perm evaluate_word(const Word& w, std::span<const Perm> images, int degree) {
    Perm p = Perm::identity(degree);
    for (const Letter& l : w) {
        if (l.gen < 0 || l.gen >= static_cast<int>(images.size()))
            throw std::out_of_range("word letter indexes no image");
        p = p.then(l.sign > 0 ? images[l.gen] : images[l.gen].inverse());
    }
    return p;
}

int FiniteGroup::index_of(const Perm& p) const {
    auto it = std::lower_bound(table.begin(), table.end(), p);
    if (it == table.end() || !(*it == p)) return -1;
    return static_cast<int>(it - table.begin());
}

FiniteGroup FiniteGroup::from_generators(std::string name, int degree, std::vector<Perm> gens) {
    FiniteGroup g;
    g.name = std::move(name);
    g.degree = degree;
    g.table = permutation_closure(gens, degree);
    g.generators = std::move(gens);
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_generators("Z/1", 1, {Perm::identity(1)}); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n == 1) return trivial();
    Perm c;
    c.img.resize(n);
    for (int i = 0; i < n; ++i) c.img[i] = (i + 1) % n;
    return from_generators("Z/" + std::to_string(n), n, {c});
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 2) throw std::invalid_argument("dihedral needs n >= 2");
    Perm rot, ref;
    rot.img.resize(n);
    ref.img.resize(n);
    for (int i = 0; i < n; ++i) {
        rot.img[i] = (i + 1) % n;
        ref.img[i] = (n - i) % n;
    }
    return from_generators("D" + std::to_string(n), n, {rot, ref});
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 2) throw std::invalid_argument("symmetric needs n >= 2");
    Perm swap01 = Perm::identity(n), cyc;
    std::swap(swap01.img[0], swap01.img[1]);
    cyc.img.resize(n);
    for (int i = 0; i < n; ++i) cyc.img[i] = (i + 1) % n;
    return from_generators("S" + std::to_string(n), n, n == 2 ? std::vector<Perm>{swap01} : std::vector<Perm>{swap01, cyc});
}

FiniteGroup FiniteGroup::alternating(int n) {
    if (n != 4 && n != 5) throw std::invalid_argument("alternating supported for n = 4, 5");
    Perm three = Perm::identity(n);  // (0 1 2)
    three.img[0] = 1;
    three.img[1] = 2;
    three.img[2] = 0;
    Perm other = Perm::identity(n);
    if (n == 4) {  // (0 1)(2 3)
        other.img = {1, 0, 3, 2};
    } else {  // (0 1 2 3 4)
        other.img = {1, 2, 3, 4, 0};
    }
    return from_generators("A" + std::to_string(n), n, {three, other});
}

std::vector<FiniteGroup> group_catalog(int max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    std::vector<FiniteGroup> out;
    for (int n = 1; n <= max_order; ++n) out.push_back(FiniteGroup::cyclic(n));
    for (int n = 3; 2 * n <= max_order; ++n) out.push_back(FiniteGroup::dihedral(n));
    int fact = 2;
    for (int n = 3; n <= 5; ++n) {
        fact *= n;
        if (fact <= max_order) out.push_back(FiniteGroup::symmetric(n));
    }
    if (max_order >= 12) out.push_back(FiniteGroup::alternating(4));
    if (max_order >= 60) out.push_back(FiniteGroup::alternating(5));
    std::stable_sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.name < b.name;
    });
    return out;
}

}  // namespace tap
