#ifndef COMBIPROOF_PROOF_IO_HPP
#define COMBIPROOF_PROOF_IO_HPP

// Serialization, figure emission, random instance generation and the
// fuzz/differential harness.
//
// Proof documents are flat JSON objects with exactly the fields
//   lower (string), upper (string), links ([[int,int],...]),
//   map ([int,...]), mix (bool, optional, default false)
// Formulas are surface-syntax text; leaf indices refer to left-to-right
// order after NNF normalization.  Unknown fields are rejected: documents
// are certificates, and strictness prevents silent misreads.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "comb_proof.hpp"
#include "formula.hpp"
#include "net.hpp"

namespace combiproof {

// Thrown on malformed proof documents; the message names the field path.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedProof {
    CombinatorialProof proof;
    bool mix = false;
};

// Parses and structurally validates (field types, index ranges, map
// length); duality, partition and clique conditions stay with verify().
LoadedProof load_proof(const std::string& text);

// Canonical form: fixed key order, links normalized; load_proof of the
// output reproduces the proof, and save(load(s)) is a fixpoint.
std::string save_proof(const CombinatorialProof& p, bool mix = false);

// DOT figure: the two formula trees as clustered ranked layers, one node
// per leaf, bold arcs for axiom links, dashed edges for the leaf map.
std::string emit_figure(const CombinatorialProof& p);

using Rng = std::mt19937_64;

// Deterministic for a fixed seed; leaf count <= max_leaves.
Formula random_formula(std::uint64_t seed, std::size_t max_leaves, std::size_t max_vars);
Formula random_formula(Rng& rng, std::size_t max_leaves, std::size_t max_vars);

// A formula whose literals pair up exactly (pair_count dual pairs), plus a
// uniformly random valid linking for it.
Formula random_linkable_formula(Rng& rng, std::size_t pair_count, std::size_t max_vars);
Linking random_linking(Rng& rng, const Formula& f);

struct DifferentialConfig {
    std::size_t iterations = 1000;
    std::uint64_t seed = 1;
    std::size_t max_leaves = 10;
    std::size_t max_vars = 4;
    std::size_t mutants_per_proof = 4;
    // Override point for fault-injection tests; defaults to dr_check_fast.
    std::function<bool(const Formula&, const Linking&, bool)> fast_checker;
};

struct DifferentialReport {
    std::size_t formulas = 0;
    std::size_t tautologies = 0;
    std::size_t proofs_verified = 0;
    std::size_t net_instances = 0;
    std::size_t documents_round_tripped = 0;
    std::size_t mutants_checked = 0;
    std::size_t mutants_accepted = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Cross-checks every pair of routes the project provides:
//   prove succeeds  <=>  is_tautology, and every translated proof verifies
//   with mix=false; dr_check_fast == dr_check_exhaustive on random linked
//   instances in both modes; documents survive save/load; mutated accepted
//   proofs still have tautological lower formulas.
DifferentialReport run_differential(const DifferentialConfig& config);

}  // namespace combiproof

#endif  // COMBIPROOF_PROOF_IO_HPP
