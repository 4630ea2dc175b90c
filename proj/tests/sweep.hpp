#ifndef COMBIPROOF_TESTS_SWEEP_HPP
#define COMBIPROOF_TESTS_SWEEP_HPP

// Exhaustive enumeration of NNF formulas by leaf count, with variables
// canonical in first-occurrence order (one representative per renaming
// class), checking both theorem directions against an independent bitmask
// truth table:
//
//   prove succeeds      <=>  the formula is a tautology
//   prove succeeded      =>  the translated combinatorial proof verifies
//                            with mix = false
//
// The case count grows fast: 320 formulas at 3 leaves, ~10.5 million at 6,
// ~3.9e8 at 7 and ~1.5e10 at 8, so the sweep takes a wall-clock budget and
// reports per-tier completion honestly instead of running for hours.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "comb_proof.hpp"
#include "formula.hpp"
#include "sequent.hpp"

namespace combiproof::tests {

struct SweepTier {
    std::size_t leaves = 0;
    std::uint64_t cases = 0;
    std::uint64_t tautologies = 0;
    bool completed = false;
};

struct SweepResult {
    std::vector<SweepTier> tiers;
    std::vector<std::string> discrepancies;  // capped at 32 entries
    bool completed = false;                  // every tier finished in budget
    double seconds = 0.0;

    std::uint64_t total_cases() const {
        std::uint64_t n = 0;
        for (const SweepTier& t : tiers) n += t.cases;
        return n;
    }
};

namespace sweep_detail {

// Full binary tree shapes in preorder; children indices are absolute.
struct Shape {
    struct Node {
        int left = -1, right = -1;  // leaf when left < 0
    };
    std::vector<Node> nodes;
    std::vector<int> internal_nodes;  // preorder
    std::vector<int> leaf_nodes;      // left-to-right
};

inline std::vector<Shape> shapes_with_leaves(std::size_t n) {
    if (n == 1) {
        Shape s;
        s.nodes.push_back({});
        s.leaf_nodes.push_back(0);
        return {s};
    }
    std::vector<Shape> out;
    for (std::size_t k = 1; k < n; ++k) {
        for (const Shape& left : shapes_with_leaves(k)) {
            for (const Shape& right : shapes_with_leaves(n - k)) {
                Shape s;
                s.nodes.push_back({1, static_cast<int>(1 + left.nodes.size())});
                s.internal_nodes.push_back(0);
                auto splice = [&s](const Shape& src, int base) {
                    for (Shape::Node node : src.nodes) {
                        if (node.left >= 0) {
                            node.left += base;
                            node.right += base;
                        }
                        s.nodes.push_back(node);
                    }
                    for (int i : src.internal_nodes) s.internal_nodes.push_back(i + base);
                    for (int i : src.leaf_nodes) s.leaf_nodes.push_back(i + base);
                };
                splice(left, 1);
                splice(right, static_cast<int>(1 + left.nodes.size()));
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

// Truth-table masks over kMaxSweepVars variables; row r assigns variable v
// the bit (r >> v) & 1.
inline constexpr std::size_t kMaxSweepVars = 6;

inline std::uint64_t variable_mask(std::size_t var, std::size_t vars) {
    const std::size_t rows = std::size_t{1} << vars;
    std::uint64_t m = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if ((r >> var) & 1) m |= std::uint64_t{1} << r;
    return m;
}

}  // namespace sweep_detail

inline SweepResult theorem_sweep(std::size_t max_leaves, std::size_t max_vars,
                                 std::chrono::seconds budget) {
    using namespace sweep_detail;
    if (max_vars > kMaxSweepVars) throw std::invalid_argument("sweep variable bound too large");

    const auto start = std::chrono::steady_clock::now();
    const auto deadline = start + budget;

    SweepResult result;
    result.completed = true;

    const std::size_t rows = std::size_t{1} << max_vars;
    const std::uint64_t full = rows == 64 ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << rows) - 1);
    std::vector<std::uint64_t> var_masks(max_vars);
    for (std::size_t v = 0; v < max_vars; ++v) var_masks[v] = variable_mask(v, max_vars);

    static const char* const names[kMaxSweepVars] = {"P", "Q", "R", "S", "T", "U"};

    std::uint64_t since_clock_check = 0;
    bool out_of_budget = false;

    for (std::size_t n = 1; n <= max_leaves && !out_of_budget; ++n) {
        SweepTier tier;
        tier.leaves = n;

        const std::vector<Shape> shapes = shapes_with_leaves(n);
        std::vector<std::size_t> leaf_var(n);
        std::vector<bool> leaf_neg(n);
        std::vector<std::uint64_t> node_mask;
        std::vector<Literal> lits(n);

        for (const Shape& shape : shapes) {
            const std::size_t internal = shape.internal_nodes.size();

            // skeleton Formula per connective labelling, relabelled per case
            for (std::uint64_t conn = 0; conn >> internal == 0; ++conn) {
                std::vector<Connective> ops(shape.nodes.size(), Connective::And);
                for (std::size_t i = 0; i < internal; ++i)
                    if ((conn >> i) & 1) ops[shape.internal_nodes[i]] = Connective::Or;

                // template with placeholder literals
                auto build = [&](auto&& self, int at) -> Formula {
                    const Shape::Node& node = shape.nodes[at];
                    if (node.left < 0) return Formula::leaf(Literal{"P", false});
                    return Formula::combine(ops[at], self(self, node.left),
                                            self(self, node.right));
                };
                const Formula skeleton = build(build, 0);

                // odometer over canonical leaf labelings
                auto enumerate_with_masks = [&](auto&& self, std::size_t leaf,
                                                std::size_t vars_used) -> bool {
                    if (out_of_budget) return false;
                    if (leaf == n) {
                        if (++since_clock_check >= 4096) {
                            since_clock_check = 0;
                            if (std::chrono::steady_clock::now() >= deadline) {
                                out_of_budget = true;
                                return false;
                            }
                        }
                        ++tier.cases;

                        node_mask.assign(shape.nodes.size(), 0);
                        for (std::size_t i = 0; i < n; ++i) {
                            const std::uint64_t m = var_masks[leaf_var[i]];
                            node_mask[shape.leaf_nodes[i]] = leaf_neg[i] ? (~m & full) : m;
                        }
                        for (std::size_t i = shape.nodes.size(); i-- > 0;) {
                            const Shape::Node& node = shape.nodes[i];
                            if (node.left < 0) continue;
                            node_mask[i] = ops[i] == Connective::And
                                               ? (node_mask[node.left] & node_mask[node.right])
                                               : (node_mask[node.left] | node_mask[node.right]);
                        }
                        const bool taut = (node_mask[0] & full) == full;

                        for (std::size_t i = 0; i < n; ++i)
                            lits[i] = Literal{names[leaf_var[i]], leaf_neg[i]};
                        const Formula f = skeleton.relabel_leaves(lits);

                        auto proof = prove(f);
                        if (proof.has_value() != taut) {
                            if (result.discrepancies.size() < 32)
                                result.discrepancies.push_back(
                                    std::string(taut ? "prove failed on tautology "
                                                     : "prove succeeded on non-tautology ") +
                                    to_string(f));
                        } else if (proof) {
                            ++tier.tautologies;
                            Verdict v = verify(translate(*proof), false);
                            if (!v.accepted && result.discrepancies.size() < 32)
                                result.discrepancies.push_back("translated proof of " +
                                                               to_string(f) +
                                                               " rejected: " + v.to_line());
                        }
                        return true;
                    }
                    const std::size_t var_limit = std::min(vars_used + 1, max_vars);
                    for (std::size_t v = 0; v < var_limit; ++v) {
                        for (int neg = 0; neg < 2; ++neg) {
                            leaf_var[leaf] = v;
                            leaf_neg[leaf] = neg != 0;
                            if (!self(self, leaf + 1, std::max(vars_used, v + 1))) return false;
                        }
                    }
                    return true;
                };

                if (!enumerate_with_masks(enumerate_with_masks, 0, 0)) break;
            }
            if (out_of_budget) break;
        }

        tier.completed = !out_of_budget;
        result.tiers.push_back(tier);
        if (out_of_budget) result.completed = false;
    }

    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace combiproof::tests

#endif  // COMBIPROOF_TESTS_SWEEP_HPP
