#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tap/fibercheck.hpp"
#include "tap/frontend.hpp"

using namespace tap;

namespace {

Epimorphism trivial_epi(const Presentation& p) {
    return {FiniteGroup::trivial(),
            std::vector<Perm>(p.generators.size(), Perm::identity(1))};
}

}  // namespace

TEST_CASE("expected_degree") {
    CHECK(expected_degree(1, 0, 1) == 2);
    CHECK(expected_degree(2, 0, 2) == 4);
    CHECK(expected_degree(6, 2, 1) == 14);
    CHECK_THROWS_AS(expected_degree(2, 1, 0), std::domain_error);
    CHECK_THROWS_AS(expected_degree(-1, 0, 1), std::invalid_argument);
}

TEST_CASE("check_epi on the fibered 0-surgeries") {
    for (const char* label : {"trefoil_0surgery", "figure8_0surgery"}) {
        const CorpusEntry& e = corpus_entry(label);
        ManifoldInput in = e.file.manifold();
        CriterionResult r = check_epi(in, trivial_epi(in.presentation));
        CHECK(r.status == Status::NONZERO_OK);
        REQUIRE(r.monic);
        CHECK(*r.monic);
        REQUIRE(r.actual_deg);
        CHECK(*r.actual_deg == 2);
        REQUIRE(r.expected_deg);
        CHECK(*r.expected_deg == 2);
        CHECK(r.div_phi_g == 1);
        CHECK(normalize_unit(primitive_part(r.bundle.delta1)) ==
              torus_bundle_delta(e.monodromy));
    }
}

TEST_CASE("engineered degree mismatch") {
    ManifoldInput in;
    in.presentation.generators = {"a"};
    in.phi = PhiClass{{1}};
    in.closed = true;
    in.thurston_norm = 5;
    in.label = "synthetic";
    CriterionResult r = check_epi(in, trivial_epi(in.presentation));
    CHECK(r.status == Status::DEGREE_MISMATCH);
    REQUIRE(r.expected_deg);
    CHECK(*r.expected_deg == 7);
    CHECK(*r.actual_deg == 0);
}

TEST_CASE("phi = 0 is inapplicable") {
    ManifoldInput in;
    in.presentation.generators = {"a"};
    in.phi = PhiClass{{0}};
    CriterionResult r = check_epi(in, trivial_epi(in.presentation));
    CHECK(r.status == Status::INAPPLICABLE);
}

TEST_CASE("check_epi is reproducible") {
    const CorpusEntry& e = corpus_entry("figure8_0surgery");
    ManifoldInput in = e.file.manifold();
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    auto epis = enumerate_epimorphisms(in.presentation, z2);
    REQUIRE(!epis.empty());
    CriterionResult a = check_epi(in, epis[0]);
    CriterionResult b = check_epi(in, epis[0]);
    CHECK(a.status == b.status);
    CHECK(a.bundle.delta1 == b.bundle.delta1);
    CHECK(result_json(a) == result_json(b));
}

TEST_CASE("search: unknot exterior is consistent at any order") {
    const CorpusEntry& e = corpus_entry("unknot");
    SearchOutcome out = search_obstruction(e.file.manifold(), 12);
    CHECK_FALSE(out.verdict.obstruction_found);
    CHECK(out.verdict.epis_checked > 0);
    CHECK_FALSE(out.verdict.budget_exceeded);
    for (const CriterionResult& r : out.results)
        CHECK(normalize_unit(r.bundle.delta1) == LaurentPoly::constant(1));
}

TEST_CASE("search: figure-8 0-surgery consistent up to order 6") {
    const CorpusEntry& e = corpus_entry("figure8_0surgery");
    SearchOutcome out = search_obstruction(e.file.manifold(), 6);
    CHECK_FALSE(out.verdict.obstruction_found);
    for (const CriterionResult& r : out.results) CHECK(r.status == Status::NONZERO_OK);
}

TEST_CASE("budget stops the sweep") {
    const CorpusEntry& e = corpus_entry("figure8_0surgery");
    Budget b;
    b.max_epis = 1;
    SearchOutcome out = search_obstruction(e.file.manifold(), 12, false, b);
    CHECK(out.verdict.budget_exceeded);
    CHECK(out.verdict.epis_checked <= 1);
}

TEST_CASE("search determinism") {
    const CorpusEntry& e = corpus_entry("trefoil_0surgery");
    SearchOutcome a = search_obstruction(e.file.manifold(), 6);
    SearchOutcome b = search_obstruction(e.file.manifold(), 6);
    CHECK(a.verdict.epis_checked == b.verdict.epis_checked);
    REQUIRE(a.results.size() == b.results.size());
    for (size_t i = 0; i < a.results.size(); ++i)
        CHECK(result_json(a.results[i]) == result_json(b.results[i]));
}

TEST_CASE("norm_estimate") {
    const CorpusEntry& e = corpus_entry("figure8_0surgery");
    ManifoldInput in = e.file.manifold();
    CriterionResult r = check_epi(in, trivial_epi(in.presentation));
    CHECK(norm_estimate({r}) == BigRat(0));
    CHECK_THROWS(norm_estimate({}));

    const CorpusEntry& tre = corpus_entry("trefoil");
    ManifoldInput tin = tre.file.manifold();
    CriterionResult tr = check_epi(tin, trivial_epi(tin.presentation));
    CHECK(norm_estimate({tr}) == BigRat(0));
}

TEST_CASE("reparametrization coherence of check_epi") {
    const CorpusEntry& e = corpus_entry("trefoil");
    for (long n : {2L, 3L}) {
        ManifoldInput in = e.file.manifold();
        CriterionResult base = check_epi(in, trivial_epi(in.presentation));
        in.phi = PhiClass{{n, n}};
        CriterionResult scaled = check_epi(in, trivial_epi(in.presentation));
        REQUIRE(base.actual_deg);
        REQUIRE(scaled.actual_deg);
        CHECK(*scaled.actual_deg == n * *base.actual_deg);
        CHECK(*scaled.monic == *base.monic);
    }
}
