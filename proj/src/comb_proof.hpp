#ifndef COMBIPROOF_COMB_PROOF_HPP
#define COMBIPROOF_COMB_PROOF_HPP

// Combinatorial proofs: an MLL proof net on an upper formula together with
// a label- and clique-preserving function from the upper leaves onto the
// leaves of the (lower) formula being proved.
//
// Nothing is validated at construction; verify() decides everything and
// reports the first failing stage with a minimal witness, in the fixed
// stage order linking -> net -> labels -> cliques.

#include <string>
#include <vector>

#include "formula.hpp"
#include "net.hpp"

namespace combiproof {

// upper LeafId -> lower LeafId, indexed by upper leaf.
using LeafMap = std::vector<LeafId>;

struct CombinatorialProof {
    Formula lower;
    Formula upper;
    Linking linking;  // on upper
    LeafMap map;      // upper -> lower
};

// Label preservation: each upper leaf carries the same literal as its
// image.  Also rejects maps that are not total on the upper leaves.
CheckResult check_labels(const Formula& upper, const Formula& lower, const LeafMap& map);

// Clique preservation: the image of every clique of upper is a clique of
// lower (an exact clique, not merely a subset of one).  Assumes
// check_labels passed.
CheckResult check_cliques(const Formula& upper, const Formula& lower, const LeafMap& map);

enum class Stage { Linking, Net, Labels, Cliques };

const char* stage_name(Stage s) noexcept;

struct Verdict {
    bool accepted = true;
    Stage stage = Stage::Linking;  // meaningful when rejected
    std::string witness;

    // "ACCEPTED" or "REJECTED: <stage>: <witness>"
    std::string to_line() const;
    explicit operator bool() const { return accepted; }
};

Verdict verify(const CombinatorialProof& p, bool mix);

// Linking and net stages only (the leaf map plays no part).
Verdict verify_net(const Formula& upper, const Linking& linking, bool mix);

}  // namespace combiproof

#endif  // COMBIPROOF_COMB_PROOF_HPP
