#ifndef COMBIPROOF_NET_HPP
#define COMBIPROOF_NET_HPP

// Axiom linkings on a formula read as MLL (And = tensor, Or = par) and the
// switching correctness criterion.
//
// A switching picks one child edge for every Or node; the induced graph has
// the formula nodes as vertices, both child edges of every And, the chosen
// child edge of every Or, and one edge per axiom pair.  The net is correct
// when every switching graph is acyclic and connected; with MIX enabled the
// connectedness requirement is dropped.
//
// dr_check_exhaustive walks all 2^(#Or) switchings and is the oracle.
// dr_check_fast decides the same predicate in polynomial time:
//
//   * "some switching has a cycle" reduces to "the axiom matching is not
//     the unique perfect matching" of a small auxiliary graph built from
//     per-node gadgets (pars admit no transition between their two child
//     edges, tensors and leaves admit all transitions); alternating cycles
//     of that matching are exactly the realizable switching cycles.
//     Uniqueness is decided by peeling matched bridge edges.
//   * once every switching is known to be acyclic, all switchings are
//     forests with the same vertex and edge counts, so they all have
//     #nodes - (2*#And + #Or + #pairs) components; connectedness reduces
//     to that number being 1.
//
// The two checkers are kept deliberately independent and their agreement is
// enforced by differential tests, not assumed.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"
#include "resolution.hpp"  // Branch

namespace combiproof {

struct Linking {
    // Unordered dual-literal pairs partitioning the leaf set.
    std::vector<std::pair<LeafId, LeafId>> pairs;

    // Pairs as (min,max), sorted; the serialization order.
    Linking normalized() const;

    bool operator==(const Linking&) const = default;
};

// Total choice of one child per Or node (no survival condition, unlike
// Resolution).
struct Switching {
    std::map<NodeId, Branch> choice;

    bool operator==(const Switching&) const = default;
};

struct SwitchGraph {
    std::size_t vertex_count = 0;  // vertices are the NodeIds of the formula
    std::vector<std::pair<NodeId, NodeId>> edges;
};

struct CheckResult {
    bool ok = true;
    std::string error;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string msg) { return {false, std::move(msg)}; }
    explicit operator bool() const { return ok; }
};

// Partition + duality check; the error names the offending leaf or pair.
CheckResult validate_linking(const Formula& f, const Linking& l);

// Throws std::invalid_argument on an invalid linking or a non-total
// switching.
SwitchGraph switch_graph(const Formula& f, const Linking& l, const Switching& s);

bool is_acyclic(const SwitchGraph& g);
std::size_t component_count(const SwitchGraph& g);

// The ordinal enumeration of switchings: bit i of `index` selects the child
// of the i-th Or node in ascending NodeId order (0 = Left).
Switching switching_from_index(const Formula& f, std::uint64_t index);

bool dr_check_exhaustive(const Formula& f, const Linking& l, bool mix);
bool dr_check_fast(const Formula& f, const Linking& l, bool mix);

// First failing switching in enumeration order, with a short reason
// ("cyclic" or "disconnected"); nullopt when the net is correct for the
// given mode.  Used for witness reporting.
struct NetFailure {
    Switching switching;
    std::string reason;
};
std::optional<NetFailure> find_failing_switching(const Formula& f, const Linking& l, bool mix);

}  // namespace combiproof

#endif  // COMBIPROOF_NET_HPP
