#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tap/homs.hpp"

using namespace tap;

namespace {

Presentation trefoil() {
    Presentation p;
    p.generators = {"a", "b"};
    p.relators = {free_reduce({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}})};
    return p;
}

Presentation free_group(int n) {
    Presentation p;
    for (int i = 0; i < n; ++i) p.generators.push_back(std::string(1, static_cast<char>('a' + i)));
    return p;
}

// every image tuple, no pruning
long brute_force_epi_count(const Presentation& p, const FiniteGroup& g) {
    const int k = p.num_generators();
    const int n = g.order();
    std::vector<int> idx(k, 0);
    long count = 0;
    while (true) {
        std::vector<Perm> images;
        for (int i : idx) images.push_back(g.table[i]);
        bool ok = true;
        for (const Word& r : p.relators)
            if (!evaluate_word(r, images, g.degree).is_identity()) {
                ok = false;
                break;
            }
        if (ok && static_cast<int>(permutation_closure(images, g.degree).size()) == n) ++count;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - 1) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
    }
    return count;
}

}  // namespace

TEST_CASE("abelianization") {
    Abelianization tr = abelianization(trefoil());
    CHECK(tr.free_rank == 1);
    CHECK(tr.torsion.empty());

    Presentation z2;
    z2.generators = {"a"};
    z2.relators = {Word{{0, 1}, {0, 1}}};
    Abelianization a2 = abelianization(z2);
    CHECK(a2.free_rank == 0);
    CHECK(a2.torsion == std::vector<BigInt>{BigInt(2)});

    CHECK(abelianization(free_group(2)).free_rank == 2);
}

TEST_CASE("phi_from_exponents") {
    PhiClass phi = phi_from_exponents(trefoil(), {1, 1});
    CHECK(phi.is_primitive());
    CHECK_FALSE(phi.is_zero());
    CHECK(phi.of_word({{0, 1}, {1, -1}}) == 0);
    CHECK_THROWS_AS(phi_from_exponents(trefoil(), {1, 2}), NotAHomomorphism);
    PhiClass zero = phi_from_exponents(trefoil(), {0, 0});
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.is_primitive());
    CHECK_THROWS_AS(phi_from_exponents(trefoil(), {1}), std::invalid_argument);
}

TEST_CASE("epimorphism examples") {
    Presentation p = trefoil();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto epis = enumerate_epimorphisms(p, s3);
    CHECK(!epis.empty());
    bool found = false;
    for (const Epimorphism& e : epis) {
        CHECK(e.is_valid(p));
        if (e.images[0].img == std::vector<int>{1, 0, 2} &&
            e.images[1].img == std::vector<int>{0, 2, 1})
            found = true;
    }
    CHECK(found);

    auto z2 = enumerate_epimorphisms(p, FiniteGroup::cyclic(2));
    REQUIRE(z2.size() == 1);
    CHECK_FALSE(z2[0].images[0].is_identity());
    CHECK(z2[0].images[0] == z2[0].images[1]);

    Presentation torsion2;
    torsion2.generators = {"a"};
    torsion2.relators = {Word{{0, 1}, {0, 1}}};
    CHECK(enumerate_epimorphisms(torsion2, FiniteGroup::cyclic(3)).empty());
}

TEST_CASE("counts match brute force for |G| <= 12") {
    Presentation tre = trefoil();
    Presentation fig8;
    fig8.generators = {"a", "b"};
    fig8.relators = {free_reduce(
        {{0, 1}, {1, 1}, {0, -1}, {1, -1}, {0, 1}, {1, -1}, {0, -1}, {1, 1}, {0, 1}, {1, -1}})};
    for (const FiniteGroup& g : group_catalog(12))
        for (const Presentation* p : {&tre, &fig8})
            CHECK(static_cast<long>(enumerate_epimorphisms(*p, g).size()) ==
                  brute_force_epi_count(*p, g));
}

TEST_CASE("conjugacy dedupe picks orbit representatives") {
    Presentation p = trefoil();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto all = enumerate_epimorphisms(p, s3);
    auto reps = enumerate_epimorphisms(p, s3, true);
    CHECK(reps.size() <= all.size());
    CHECK(!reps.empty());
    // each full-orbit member is conjugate to some representative
    for (const Epimorphism& e : all) {
        bool matched = false;
        for (const Perm& c : s3.table) {
            for (const Epimorphism& r : reps) {
                bool same = true;
                for (size_t i = 0; i < e.images.size(); ++i)
                    if (!(c.inverse().then(e.images[i]).then(c) == r.images[i])) same = false;
                matched |= same;
            }
        }
        CHECK(matched);
    }
}

TEST_CASE("kernel schreier generators") {
    Presentation fr = free_group(1);
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    Epimorphism a3{z3, {z3.generators[0]}};
    auto ker = kernel_schreier_generators(fr, a3);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == Word{{0, 1}, {0, 1}, {0, 1}});

    Presentation p = trefoil();
    FiniteGroup triv = FiniteGroup::trivial();
    Epimorphism e1{triv, {Perm::identity(1), Perm::identity(1)}};
    auto k1 = kernel_schreier_generators(p, e1);
    REQUIRE(k1.size() == 2);
    CHECK(k1[0] == Word{{0, 1}});
    CHECK(k1[1] == Word{{1, 1}});

    auto z2e = enumerate_epimorphisms(p, FiniteGroup::cyclic(2));
    auto k2 = kernel_schreier_generators(p, z2e[0]);
    // |G|(k-1) + 1 Schreier generators, each in the kernel
    CHECK(k2.size() == 2 * (2 - 1) + 1);
    for (const Word& w : k2) {
        CHECK(z2e[0].evaluate(w).is_identity());
        CHECK(total_exponent(w) % 2 == 0);
    }
}

TEST_CASE("divisibility of the restriction") {
    Presentation p = trefoil();
    PhiClass phi = phi_from_exponents(p, {1, 1});

    FiniteGroup triv = FiniteGroup::trivial();
    Epimorphism e1{triv, {Perm::identity(1), Perm::identity(1)}};
    CHECK(divisibility_of_restriction(phi, kernel_schreier_generators(p, e1)) == 1);

    auto z2e = enumerate_epimorphisms(p, FiniteGroup::cyclic(2));
    CHECK(divisibility_of_restriction(phi, kernel_schreier_generators(p, z2e[0])) == 2);

    CHECK(divisibility_of_restriction(phi, {}) == 0);
    CHECK(divisibility_of_restriction(phi, {Word{{0, 1}, {1, -1}}}) == 0);
}

TEST_CASE("divisibility is spanning-tree independent") {
    Presentation p = trefoil();
    PhiClass phi = phi_from_exponents(p, {1, 1});
    for (const FiniteGroup& g : group_catalog(8))
        for (const Epimorphism& e : enumerate_epimorphisms(p, g)) {
            long d0 = divisibility_of_restriction(phi, kernel_schreier_generators(p, e, 0));
            long d1 = divisibility_of_restriction(phi, kernel_schreier_generators(p, e, 1));
            CHECK(d0 == d1);
        }
}

TEST_CASE("phi mod n quotients give divisibility n") {
    Presentation p = trefoil();
    PhiClass phi = phi_from_exponents(p, {1, 1});
    for (int n = 2; n <= 6; ++n) {
        FiniteGroup zn = FiniteGroup::cyclic(n);
        Epimorphism e{zn, {zn.generators[0], zn.generators[0]}};
        REQUIRE(e.is_valid(p));
        CHECK(divisibility_of_restriction(phi, kernel_schreier_generators(p, e)) == n);
    }
}

TEST_CASE("separability witnesses") {
    Presentation fr = free_group(1);
    auto cat = group_catalog(6);
    SeparabilityWitness w =
        separability_witness(fr, {Word{{0, 1}, {0, 1}}}, Word{{0, 1}}, cat, 6);
    REQUIRE(w.witness);
    CHECK(w.witness->target.name == "Z/2");

    SeparabilityWitness none =
        separability_witness(fr, {Word{{0, 1}}}, Word{{0, 1}}, cat, 6);
    CHECK_FALSE(none.witness.has_value());
    CHECK(none.max_order_searched == 6);

    Presentation p = trefoil();
    SeparabilityWitness tw = separability_witness(p, {Word{{0, 1}}}, Word{{1, 1}}, cat, 6);
    REQUIRE(tw.witness);
    Perm gb = tw.witness->evaluate(Word{{1, 1}});
    auto sub = permutation_closure(std::vector<Perm>{tw.witness->images[0]},
                                   tw.witness->target.degree);
    CHECK_FALSE(std::binary_search(sub.begin(), sub.end(), gb));
}

TEST_CASE("homomorphism enumeration includes non-surjective maps") {
    Presentation fr = free_group(1);
    CHECK(enumerate_homomorphisms(fr, FiniteGroup::cyclic(4)).size() == 4);
    CHECK(enumerate_epimorphisms(fr, FiniteGroup::cyclic(4)).size() == 2);
}
