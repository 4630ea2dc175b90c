#include <doctest.h>

#include "comb_proof.hpp"
#include "formula.hpp"
#include "proof_io.hpp"
#include "sequent.hpp"

using namespace combiproof;

namespace {

Formula nnf(const std::string& text) { return to_nnf(parse_formula(text)); }

// The worked Peirce proof: lower ((~P|Q)&~P)|P, upper (~P&~P)|(P|P),
// crossing axioms, map 0->0, 1->2, 2->3, 3->3.
CombinatorialProof peirce_fixture() {
    CombinatorialProof p;
    p.lower = nnf("((~P | Q) & ~P) | P");
    p.upper = nnf("(~P & ~P) | (P | P)");
    p.linking.pairs = {{0, 3}, {1, 2}};
    p.map = {0, 2, 3, 3};
    return p;
}

}  // namespace

TEST_CASE("label preservation names the first offending leaf") {
    CombinatorialProof p = peirce_fixture();
    CHECK(check_labels(p.upper, p.lower, p.map).ok);

    Formula same = nnf("~P | P");
    CHECK(check_labels(same, same, {0, 1}).ok);

    CheckResult swapped = check_labels(p.upper, p.lower, {0, 2, 1, 3});
    CHECK_FALSE(swapped.ok);
    CHECK(swapped.error.find("leaf 2") != std::string::npos);

    CHECK_FALSE(check_labels(p.upper, p.lower, {0, 2, 3}).ok);      // not total
    CHECK_FALSE(check_labels(p.upper, p.lower, {0, 2, 3, 9}).ok);   // out of range
}

TEST_CASE("clique preservation demands exact cliques in the image") {
    CombinatorialProof p = peirce_fixture();
    CHECK(check_cliques(p.upper, p.lower, p.map).ok);

    // both upper ~P leaves onto lower leaf 0: the image {0} of {0,1} is not
    // maximal (extendable by leaf 2), hence not a clique
    CheckResult collapsed = check_cliques(p.upper, p.lower, {0, 0, 3, 3});
    CHECK_FALSE(collapsed.ok);
    CHECK(collapsed.error.find("{0,1}") != std::string::npos);

    Formula same = nnf("~P | P");
    CHECK(check_cliques(same, same, {0, 1}).ok);
}

TEST_CASE("verification accepts the stored Peirce proof") {
    Verdict v = verify(peirce_fixture(), false);
    CHECK(v.accepted);
    CHECK(v.to_line() == "ACCEPTED");
}

TEST_CASE("rejections carry the stage and a witness") {
    CombinatorialProof p = peirce_fixture();

    SUBCASE("non-dual pairs fail at the linking stage") {
        p.linking.pairs = {{0, 1}, {2, 3}};
        Verdict v = verify(p, false);
        CHECK_FALSE(v.accepted);
        CHECK(v.stage == Stage::Linking);
        CHECK(v.to_line().find("REJECTED: linking:") == 0);
        CHECK(v.to_line().find("not dual") != std::string::npos);
    }

    SUBCASE("disconnected nets fail at the net stage without mix") {
        Formula cells = nnf("(~P | P) | (~Q | Q)");
        CombinatorialProof q{cells, cells, Linking{{{0, 1}, {2, 3}}}, {0, 1, 2, 3}};
        Verdict v = verify(q, false);
        CHECK_FALSE(v.accepted);
        CHECK(v.stage == Stage::Net);
        CHECK(v.witness.find("disconnected") != std::string::npos);
        CHECK(verify(q, true).accepted);
    }

    SUBCASE("label violations fail at the labels stage") {
        p.map = {0, 2, 1, 3};
        Verdict v = verify(p, false);
        CHECK_FALSE(v.accepted);
        CHECK(v.stage == Stage::Labels);
        CHECK(v.witness.find("leaf 2") != std::string::npos);
    }

    SUBCASE("clique violations fail at the cliques stage") {
        p.map = {0, 0, 3, 3};
        Verdict v = verify(p, false);
        CHECK_FALSE(v.accepted);
        CHECK(v.stage == Stage::Cliques);
        CHECK(v.witness.find("{0,1}") != std::string::npos);
    }

    SUBCASE("stage order is linking before everything else") {
        p.linking.pairs = {{0, 1}, {2, 3}};  // breaks duality
        p.map = {0, 0, 3, 3};                // also breaks cliques
        CHECK(verify(p, false).stage == Stage::Linking);
    }

    SUBCASE("cyclic nets report a cyclic switching") {
        Formula conj = nnf("~P & P");
        CombinatorialProof q{conj, conj, Linking{{{0, 1}}}, {0, 1}};
        Verdict v = verify(q, false);
        CHECK_FALSE(v.accepted);
        CHECK(v.stage == Stage::Net);
        CHECK(v.witness.find("cyclic") != std::string::npos);
    }
}

TEST_CASE("acceptance is monotone in mix") {
    Rng rng(59);
    std::size_t accepted = 0;
    for (int i = 0; i < 600; ++i) {
        Formula upper = random_linkable_formula(rng, 1 + i % 5, 3);
        Linking l = random_linking(rng, upper);
        CombinatorialProof p{upper, upper, l, {}};
        p.map.resize(upper.leaf_count());
        for (LeafId u = 0; u < upper.leaf_count(); ++u) p.map[u] = u;
        const Verdict strict = verify(p, false);
        const Verdict mixed = verify(p, true);
        if (strict.accepted) {
            CHECK(mixed.accepted);
            ++accepted;
        }
    }
    CHECK(accepted > 10);
}

TEST_CASE("every accepted proof has a tautological lower formula") {
    Rng rng(61);
    std::size_t accepted = 0;
    for (int i = 0; i < 400; ++i) {
        Formula f = random_formula(rng, 9, 3);
        auto proof = prove_combinatorial(f);
        if (!proof) continue;
        for (bool mix : {false, true}) {
            if (verify(*proof, mix).accepted) {
                ++accepted;
                CHECK(is_tautology(proof->lower));
            }
        }
    }
    CHECK(accepted > 50);
}

TEST_CASE("verification is a pure function of its arguments") {
    CombinatorialProof p = peirce_fixture();
    Verdict a = verify(p, false);
    Verdict b = verify(p, false);
    CHECK(a.accepted == b.accepted);
    CHECK(a.to_line() == b.to_line());
}
