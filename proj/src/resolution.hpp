#ifndef COMBIPROOF_RESOLUTION_HPP
#define COMBIPROOF_RESOLUTION_HPP

// Or-resolutions and cliques of an NNF formula.
//
// An or-resolution deletes one argument subtree from every surviving Or
// node; a clique is the leaf set of some resolution.  Resolutions carry
// choices only for Or nodes that survive the choices made above them, which
// makes the resolution -> leaf-set map injective and the counting recursion
//   R(leaf) = 1,  R(A & B) = R(A) * R(B),  R(A | B) = R(A) + R(B)
// exact.
//
// is_clique() decides membership through the pairwise characterization
// (all meets And, maximal with that property) instead of enumerating
// resolutions; the equivalence of the two routes is a tested invariant,
// not an assumption.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "formula.hpp"

namespace combiproof {

enum class Branch : std::uint8_t { Left, Right };

struct Resolution {
    // Or-NodeId -> kept child, for surviving Or nodes only.
    std::map<NodeId, Branch> choice;

    bool operator==(const Resolution&) const = default;
};

// Sorted leaf ids; set semantics.
using Clique = std::vector<LeafId>;

// Every distinct resolution exactly once, depth-first, Left before Right.
std::vector<Resolution> enumerate_resolutions(const Formula& f);

// Leaf set selected by a resolution.  Throws std::invalid_argument if the
// choice map is not exactly the surviving Or set.
Clique resolution_leaves(const Formula& f, const Resolution& r);

// All cliques of f, i.e. the image of resolution_leaves over all
// resolutions.
std::set<Clique> cliques(const Formula& f);

// Pairwise-And + maximality characterization; agrees with membership in
// cliques(f).  Duplicate ids in s collapse; invalid ids throw.
bool is_clique(const Formula& f, const Clique& s);

std::uint64_t count_resolutions(const Formula& f);

}  // namespace combiproof

#endif  // COMBIPROOF_RESOLUTION_HPP
