#ifndef COMBIPROOF_SEQUENT_HPP
#define COMBIPROOF_SEQUENT_HPP

// A cut-free one-sided sequent calculus over NNF formulas, read
// disjunctively, with a complete proof-search strategy and the translation
// from sequent proofs to combinatorial proofs.
//
// Rules (positions are 0-based into the ordered member list):
//
//   Axiom              |- L, L'           two dual literals
//   OrIntro{pos}       replaces the adjacent members A, B at pos, pos+1 of
//                      the premise by A|B
//   AndIntro           from |- Gamma, A and |- Delta, B infer
//                      |- Gamma, Delta, A&B (active formulas last,
//                      contexts split multiplicatively)
//   Contract{keep,drop} premise holds identical members at keep < drop;
//                      the conclusion erases the one at drop
//   Weaken{pos}        the conclusion inserts an arbitrary member at pos
//
// prove() searches with the fixed strategy: saturate top-level Or
// (invertible), close on a dual literal pair via Axiom + Weaken, otherwise
// branch on the leftmost And with the full remaining context on both sides
// and contract the duplicates afterwards.  It succeeds exactly on valid
// sequents.

#include <cstddef>
#include <optional>
#include <vector>

#include "comb_proof.hpp"
#include "formula.hpp"

namespace combiproof {

using Sequent = std::vector<Formula>;

enum class Rule : std::uint8_t { Axiom, OrIntro, AndIntro, Contract, Weaken };

const char* rule_name(Rule r) noexcept;

struct SequentProof {
    Sequent conclusion;
    Rule rule = Rule::Axiom;
    std::size_t position = 0;          // OrIntro, Weaken
    std::size_t keep = 0, drop = 0;    // Contract
    std::vector<SequentProof> premises;
};

// Verifies every rule application; errors carry the preorder node index.
CheckResult check_sequent_proof(const SequentProof& p);

std::optional<SequentProof> prove(const Formula& goal);
std::optional<SequentProof> prove_sequent(const Sequent& goal);

struct TranslateOptions {
    // Re-check the translation invariants (leaf map containment, label and
    // clique preservation, linking duality) after every inductive step.
    // Expensive; meant for tests.
    bool validate_steps = false;
};

// Builds a combinatorial proof of the left-associated disjunction of the
// conclusion sequent.  Throws std::invalid_argument when the proof does not
// pass check_sequent_proof, std::logic_error if step validation trips.
CombinatorialProof translate(const SequentProof& p, const TranslateOptions& opts = {});

// translate(prove(f)); the result always verifies with mix=false.
std::optional<CombinatorialProof> prove_combinatorial(const Formula& f);

}  // namespace combiproof

#endif  // COMBIPROOF_SEQUENT_HPP
