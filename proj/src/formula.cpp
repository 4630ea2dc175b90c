#include "formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace combiproof {

const char* connective_name(Connective c) noexcept {
    return c == Connective::And ? "and" : "or";
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

// ── InputFormula ────────────────────────────────────────────────────────────

InputNodePtr InputNode::make_var(std::string name) {
    auto n = std::make_unique<InputNode>();
    n->kind = Kind::Var;
    n->var = std::move(name);
    return n;
}

InputNodePtr InputNode::make_not(InputNodePtr a) {
    auto n = std::make_unique<InputNode>();
    n->kind = Kind::Not;
    n->left = std::move(a);
    return n;
}

InputNodePtr InputNode::make_binary(Kind k, InputNodePtr a, InputNodePtr b) {
    auto n = std::make_unique<InputNode>();
    n->kind = k;
    n->left = std::move(a);
    n->right = std::move(b);
    return n;
}

// ── Parser ──────────────────────────────────────────────────────────────────
// Recursive descent, one level per precedence tier.

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    InputNodePtr parse() {
        auto f = parse_implies();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "unexpected trailing input");
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    bool try_consume(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    // right-associative
    InputNodePtr parse_implies() {
        auto lhs = parse_or();
        if (try_consume("->"))
            return InputNode::make_binary(InputNode::Kind::Implies, std::move(lhs), parse_implies());
        return lhs;
    }

    InputNodePtr parse_or() {
        auto lhs = parse_and();
        while (true) {
            skip_ws();
            // do not eat the `|` of a future `||`-style token; grammar has only `|`
            if (!try_consume("|")) return lhs;
            lhs = InputNode::make_binary(InputNode::Kind::Or, std::move(lhs), parse_and());
        }
    }

    InputNodePtr parse_and() {
        auto lhs = parse_unary();
        while (try_consume("&"))
            lhs = InputNode::make_binary(InputNode::Kind::And, std::move(lhs), parse_unary());
        return lhs;
    }

    InputNodePtr parse_unary() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '~' || c == '!') {
            ++pos_;
            return InputNode::make_not(parse_unary());
        }
        if (c == '(') {
            ++pos_;
            auto inner = parse_implies();
            skip_ws();
            if (pos_ == text_.size() || text_[pos_] != ')')
                throw ParseError(pos_, "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_')
                    ++pos_;
                else
                    break;
            }
            return InputNode::make_var(std::string(text_.substr(start, pos_ - start)));
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

InputFormula parse_formula(std::string_view text) {
    return InputFormula(Parser(text).parse());
}

// ── Formula construction ────────────────────────────────────────────────────

void Formula::index() {
    leaves_.clear();
    or_nodes_.clear();
    and_count_ = or_count_ = 0;
    // nodes_ is in preorder with the left subtree first, so walking ids in
    // order meets leaves left to right.
    for (NodeId id = 0; id < nodes_.size(); ++id) {
        Node& n = nodes_[id];
        if (n.is_leaf) {
            n.leaf_id = static_cast<LeafId>(leaves_.size());
            leaves_.push_back(Leaf{n.leaf_id, n.lit, id});
        } else if (n.op == Connective::And) {
            ++and_count_;
        } else {
            ++or_count_;
            or_nodes_.push_back(id);
        }
    }
}

Formula Formula::leaf(Literal lit) {
    Formula f;
    Node n;
    n.is_leaf = true;
    n.lit = std::move(lit);
    f.nodes_.push_back(std::move(n));
    f.index();
    return f;
}

Formula Formula::combine(Connective op, const Formula& a, const Formula& b) {
    Formula f;
    f.nodes_.reserve(1 + a.nodes_.size() + b.nodes_.size());
    Node root;
    root.is_leaf = false;
    root.op = op;
    root.left = 1;
    root.right = static_cast<NodeId>(1 + a.nodes_.size());
    f.nodes_.push_back(root);

    auto append = [&f](const Formula& src, NodeId base) {
        for (const Node& n : src.nodes_) {
            Node m = n;
            if (m.left != kNoNode) m.left += base;
            if (m.right != kNoNode) m.right += base;
            m.parent = (m.parent == kNoNode) ? 0 : m.parent + base;
            m.depth += 1;
            f.nodes_.push_back(std::move(m));
        }
    };
    append(a, 1);
    append(b, static_cast<NodeId>(1 + a.nodes_.size()));
    f.index();
    return f;
}

const Formula::Node& Formula::node(NodeId id) const {
    if (id >= nodes_.size()) throw std::out_of_range("node id out of range");
    return nodes_[id];
}

const Literal& Formula::leaf_literal(LeafId id) const {
    if (id >= leaves_.size()) throw std::out_of_range("leaf id out of range");
    return leaves_[id].lit;
}

NodeId Formula::leaf_node(LeafId id) const {
    if (id >= leaves_.size()) throw std::out_of_range("leaf id out of range");
    return leaves_[id].node;
}

Formula Formula::subformula(NodeId id) const {
    const Node& n = node(id);
    if (n.is_leaf) return leaf(n.lit);
    return combine(n.op, subformula(n.left), subformula(n.right));
}

Formula Formula::relabel_leaves(const std::vector<Literal>& lits) const {
    if (lits.size() != leaves_.size())
        throw std::invalid_argument("relabel_leaves: literal count mismatch");
    Formula f = *this;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        f.nodes_[leaves_[i].node].lit = lits[i];
        f.leaves_[i].lit = lits[i];
    }
    return f;
}

// ── NNF ─────────────────────────────────────────────────────────────────────

namespace {

Formula nnf_of(const InputNode& n, bool positive) {
    using K = InputNode::Kind;
    switch (n.kind) {
        case K::Var:
            return Formula::leaf(Literal{n.var, !positive});
        case K::Not:
            return nnf_of(*n.left, !positive);
        case K::And:
            return Formula::combine(positive ? Connective::And : Connective::Or,
                                    nnf_of(*n.left, positive), nnf_of(*n.right, positive));
        case K::Or:
            return Formula::combine(positive ? Connective::Or : Connective::And,
                                    nnf_of(*n.left, positive), nnf_of(*n.right, positive));
        case K::Implies:
            // A -> B  becomes  ~A | B before the polarity is applied
            return Formula::combine(positive ? Connective::Or : Connective::And,
                                    nnf_of(*n.left, !positive), nnf_of(*n.right, positive));
    }
    throw std::logic_error("unreachable input node kind");
}

}  // namespace

Formula to_nnf(const InputFormula& f) { return nnf_of(f.root(), true); }

// ── Printing ────────────────────────────────────────────────────────────────

namespace {

void print_node(const Formula& f, NodeId id, std::string& out) {
    const Formula::Node& n = f.node(id);
    if (n.is_leaf) {
        out += n.lit.to_string();
        return;
    }
    const char* sep = n.op == Connective::And ? " & " : " | ";
    auto child = [&](NodeId c, bool is_right) {
        const Formula::Node& cn = f.node(c);
        // Same-connective left children print bare (chains re-parse
        // left-associatively); everything else internal is parenthesised.
        bool parens = !cn.is_leaf && (cn.op != n.op || is_right);
        if (parens) out += '(';
        print_node(f, c, out);
        if (parens) out += ')';
    };
    child(n.left, false);
    out += sep;
    child(n.right, true);
}

}  // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print_node(f, f.root(), out);
    return out;
}

// ── Queries ─────────────────────────────────────────────────────────────────

Connective meet(const Formula& f, LeafId a, LeafId b) {
    if (a == b) throw std::invalid_argument("meet requires two distinct leaves");
    NodeId x = f.leaf_node(a);
    NodeId y = f.leaf_node(b);
    while (x != y) {
        if (f.node(x).depth >= f.node(y).depth)
            x = f.node(x).parent;
        else
            y = f.node(y).parent;
    }
    return f.node(x).op;
}

bool evaluate(const Formula& f, const Assignment& assignment) {
    // Iterative over the preorder vector to keep recursion depth flat.
    std::vector<signed char> value(f.node_count(), -1);
    for (NodeId id = static_cast<NodeId>(f.node_count()); id-- > 0;) {
        const Formula::Node& n = f.node(id);
        if (n.is_leaf) {
            auto it = assignment.find(n.lit.variable);
            if (it == assignment.end())
                throw EvalError("assignment misses variable " + n.lit.variable);
            value[id] = n.lit.negated ? !it->second : it->second;
        } else {
            bool l = value[n.left] != 0;
            bool r = value[n.right] != 0;
            value[id] = n.op == Connective::And ? (l && r) : (l || r);
        }
    }
    return value[0] != 0;
}

std::vector<std::string> variables(const Formula& f) {
    std::set<std::string> names;
    for (const auto& leaf : f.leaves()) names.insert(leaf.lit.variable);
    return {names.begin(), names.end()};
}

bool is_tautology(const Formula& f) {
    const std::vector<std::string> vars = variables(f);
    if (vars.size() >= 64) throw std::invalid_argument("too many variables for truth table");
    Assignment a;
    for (const auto& v : vars) a[v] = false;
    const std::uint64_t rows = std::uint64_t{1} << vars.size();
    for (std::uint64_t row = 0; row < rows; ++row) {
        std::uint64_t bit = 1;
        for (const auto& v : vars) {
            a[v] = (row & bit) != 0;
            bit <<= 1;
        }
        if (!evaluate(f, a)) return false;
    }
    return true;
}

}  // namespace combiproof
