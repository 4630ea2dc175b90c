#ifndef COMBIPROOF_FORMULA_HPP
#define COMBIPROOF_FORMULA_HPP

// Classical propositional formulas in negation normal form.
//
// Two representations:
//
//   InputFormula — the surface-syntax parse tree, with ~, &, |, -> and
//                  arbitrary nesting.  Produced by parse_formula().
//   Formula      — a binary tree whose internal nodes are And/Or and whose
//                  leaves carry literals.  Negation occurs only inside leaf
//                  literals.  Leaves are numbered 0..n-1 left to right, and
//                  every node has a NodeId assigned in preorder (root = 0),
//                  so ids are deterministic for a given tree shape.
//
// Formulas are immutable after construction and every operation here is a
// pure function; values can be shared freely across threads.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace combiproof {

using NodeId = std::uint32_t;
using LeafId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

enum class Connective : std::uint8_t { And, Or };

const char* connective_name(Connective c) noexcept;

// A propositional variable or its negation.
struct Literal {
    std::string variable;
    bool negated = false;

    bool is_dual_of(const Literal& o) const {
        return variable == o.variable && negated != o.negated;
    }
    Literal dual() const { return Literal{variable, !negated}; }
    std::string to_string() const { return negated ? "~" + variable : variable; }

    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;
};

// Thrown by parse_formula(); offset is the byte position of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Thrown by evaluate() when the assignment misses a variable.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ── InputFormula ────────────────────────────────────────────────────────────
// Surface syntax tree; transient, only lives between parsing and to_nnf().

struct InputNode;
using InputNodePtr = std::unique_ptr<InputNode>;

struct InputNode {
    enum class Kind : std::uint8_t { Var, Not, And, Or, Implies };

    Kind kind;
    std::string var;       // Kind::Var only
    InputNodePtr left;     // unary ops use left only
    InputNodePtr right;

    static InputNodePtr make_var(std::string name);
    static InputNodePtr make_not(InputNodePtr a);
    static InputNodePtr make_binary(Kind k, InputNodePtr a, InputNodePtr b);
};

class InputFormula {
public:
    explicit InputFormula(InputNodePtr root) : root_(std::move(root)) {}
    const InputNode& root() const { return *root_; }

private:
    InputNodePtr root_;
};

// ── Formula ─────────────────────────────────────────────────────────────────

class Formula {
public:
    struct Node {
        bool is_leaf = false;
        Connective op = Connective::And;  // internal nodes only
        Literal lit;                      // leaves only
        NodeId left = kNoNode;
        NodeId right = kNoNode;
        NodeId parent = kNoNode;
        LeafId leaf_id = 0;               // leaves only
        std::uint32_t depth = 0;

        bool operator==(const Node&) const = default;
    };

    struct Leaf {
        LeafId id;
        Literal lit;
        NodeId node;
    };

    // A default-constructed Formula is empty and only useful as an
    // assignment target; every accessor on it throws.
    Formula() = default;

    static Formula leaf(Literal lit);
    static Formula combine(Connective op, const Formula& a, const Formula& b);

    NodeId root() const { return 0; }
    const Node& node(NodeId id) const;
    std::size_t node_count() const { return nodes_.size(); }

    const std::vector<Leaf>& leaves() const { return leaves_; }
    std::size_t leaf_count() const { return leaves_.size(); }
    const Literal& leaf_literal(LeafId id) const;
    NodeId leaf_node(LeafId id) const;

    std::size_t and_count() const { return and_count_; }
    std::size_t or_count() const { return or_count_; }

    // Or-node ids in ascending order; the canonical enumeration order for
    // switchings and resolutions.
    const std::vector<NodeId>& or_nodes() const { return or_nodes_; }

    // Deep copy of the subtree rooted at `id`, re-indexed from scratch.
    Formula subformula(NodeId id) const;

    // Same tree shape with the leaf literals replaced (left-to-right).
    Formula relabel_leaves(const std::vector<Literal>& lits) const;

    bool operator==(const Formula& o) const { return nodes_ == o.nodes_; }

private:
    void index();  // rebuild leaves_/or_nodes_/counts after nodes_ changes

    std::vector<Node> nodes_;
    std::vector<Leaf> leaves_;
    std::vector<NodeId> or_nodes_;
    std::size_t and_count_ = 0;
    std::size_t or_count_ = 0;
};

using Assignment = std::map<std::string, bool>;

// Parses surface text.  Grammar: atoms [A-Za-z][A-Za-z0-9_]*, `~` or `!`
// for negation, `&`, `|`, `->`, parentheses.  Precedence ~ > & > | > ->;
// `->` associates right, `&` and `|` left.  Whitespace is insignificant.
InputFormula parse_formula(std::string_view text);

// Desugars -> and pushes negations down to the atoms.
Formula to_nnf(const InputFormula& f);

// Minimal-but-unambiguous text; parse_formula + to_nnf of the result
// reproduces the tree exactly.
std::string to_string(const Formula& f);

// Label of the least common ancestor of two distinct leaves.
Connective meet(const Formula& f, LeafId a, LeafId b);

bool evaluate(const Formula& f, const Assignment& assignment);

// Distinct variable names, sorted.
std::vector<std::string> variables(const Formula& f);

// Exhaustive truth-table check over all 2^k assignments.  Deliberately the
// simplest possible implementation: this is the semantic oracle the rest of
// the project is tested against.  Callers bound the variable count
// (kDefaultVariableCap unless they have a reason not to).
bool is_tautology(const Formula& f);

inline constexpr std::size_t kDefaultVariableCap = 16;

}  // namespace combiproof

#endif  // COMBIPROOF_FORMULA_HPP
