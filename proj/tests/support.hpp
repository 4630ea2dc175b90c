#ifndef COMBIPROOF_TESTS_SUPPORT_HPP
#define COMBIPROOF_TESTS_SUPPORT_HPP

// Test-only oracles and helpers.  Everything here is deliberately
// implemented along different routes than the library code it checks.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "formula.hpp"
#include "resolution.hpp"

namespace combiproof::tests {

// ── Clique family oracle ─────────────────────────────────────────────────────
// Defined by the structural laws instead of resolution enumeration:
// cliques(leaf) = {{leaf}}, cliques(A|B) = cliques(A) u cliques(B),
// cliques(A&B) = pairwise unions.  Operates on global leaf ids.

inline std::set<Clique> clique_family_oracle(const Formula& f, NodeId at = 0) {
    const Formula::Node& n = f.node(at);
    if (n.is_leaf) return {{n.leaf_id}};
    std::set<Clique> left = clique_family_oracle(f, n.left);
    std::set<Clique> right = clique_family_oracle(f, n.right);
    if (n.op == Connective::Or) {
        left.insert(right.begin(), right.end());
        return left;
    }
    std::set<Clique> out;
    for (const Clique& x : left)
        for (const Clique& y : right) {
            Clique merged = x;
            merged.insert(merged.end(), y.begin(), y.end());
            std::sort(merged.begin(), merged.end());
            out.insert(std::move(merged));
        }
    return out;
}

// ── Surface-syntax evaluation oracle ─────────────────────────────────────────
// Direct truth-functional evaluation of the pre-NNF tree.

inline bool eval_input(const InputNode& n, const Assignment& a) {
    using K = InputNode::Kind;
    switch (n.kind) {
        case K::Var: return a.at(n.var);
        case K::Not: return !eval_input(*n.left, a);
        case K::And: return eval_input(*n.left, a) && eval_input(*n.right, a);
        case K::Or: return eval_input(*n.left, a) || eval_input(*n.right, a);
        case K::Implies: return !eval_input(*n.left, a) || eval_input(*n.right, a);
    }
    return false;
}

inline void input_variables(const InputNode& n, std::set<std::string>& out) {
    if (n.kind == InputNode::Kind::Var) {
        out.insert(n.var);
        return;
    }
    if (n.left) input_variables(*n.left, out);
    if (n.right) input_variables(*n.right, out);
}

// ── Random surface formulas ──────────────────────────────────────────────────

inline InputNodePtr random_input_tree(std::mt19937_64& rng, int budget, int max_vars) {
    static const char* const names[] = {"P", "Q", "R", "S"};
    std::uniform_int_distribution<int> kind_of(0, budget <= 1 ? 0 : 9);
    const int kind = kind_of(rng);
    if (kind < 3) {
        std::uniform_int_distribution<int> var(0, max_vars - 1);
        return InputNode::make_var(names[var(rng)]);
    }
    if (kind < 5) return InputNode::make_not(random_input_tree(rng, budget - 1, max_vars));
    const auto op = kind < 7   ? InputNode::Kind::And
                    : kind < 9 ? InputNode::Kind::Or
                               : InputNode::Kind::Implies;
    return InputNode::make_binary(op, random_input_tree(rng, budget / 2, max_vars),
                                  random_input_tree(rng, budget / 2, max_vars));
}

// ── DOT well-formedness validator ────────────────────────────────────────────
// Recursive descent over the DOT subset the project can emit (plus a bit of
// slack): graph/digraph, subgraphs, node and edge statements, attribute
// lists, quoted and bare identifiers.

class DotValidator {
public:
    explicit DotValidator(std::string_view text) : text_(text) {}

    bool validate(std::string* error = nullptr) {
        try {
            skip_trivia();
            accept_keyword("strict");
            if (!accept_keyword("graph") && !accept_keyword("digraph"))
                fail("expected graph or digraph");
            accept_id();
            expect("{");
            statements();
            expect("}");
            skip_trivia();
            if (pos_ != text_.size()) fail("trailing content");
            return true;
        } catch (const std::runtime_error& e) {
            if (error) *error = e.what();
            return false;
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error(msg + " at offset " + std::to_string(pos_));
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                pos_ += 2;
                while (pos_ + 1 < text_.size() &&
                       !(text_[pos_] == '*' && text_[pos_ + 1] == '/'))
                    ++pos_;
                pos_ = std::min(pos_ + 2, text_.size());
            } else {
                break;
            }
        }
    }

    bool peek(std::string_view tok) {
        skip_trivia();
        return text_.substr(pos_, tok.size()) == tok;
    }

    bool accept(std::string_view tok) {
        if (!peek(tok)) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    bool accept_keyword(std::string_view word) {
        skip_trivia();
        std::size_t end = pos_ + word.size();
        if (text_.substr(pos_, word.size()) != word) return false;
        if (end < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    bool accept_id() {
        skip_trivia();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        if (c == '"') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\') ++pos_;
                ++pos_;
            }
            if (pos_ >= text_.size()) fail("unterminated string");
            ++pos_;
            return true;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
            // bare id (allow numerals and negative numbers)
            if (c == '-' && !(pos_ + 1 < text_.size() &&
                              std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))
                return false;
            ++pos_;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.')
                    ++pos_;
                else
                    break;
            }
            return true;
        }
        return false;
    }

    void attr_list() {
        while (accept("[")) {
            while (!peek("]")) {
                if (!accept_id()) fail("expected attribute name");
                if (accept("=") && !accept_id()) fail("expected attribute value");
                accept(",") || accept(";");
            }
            expect("]");
        }
    }

    // node/edge/attr statement or subgraph
    void statement() {
        if (accept_keyword("node") || accept_keyword("edge") || accept_keyword("graph")) {
            attr_list();
            return;
        }
        bool endpoint = false;
        if (peek("{") || peek("subgraph")) {
            accept_keyword("subgraph");
            accept_id();
            expect("{");
            statements();
            expect("}");
            endpoint = true;
        } else {
            if (!accept_id()) fail("expected statement");
            if (accept("=")) {
                if (!accept_id()) fail("expected value");
                return;
            }
            endpoint = true;
        }
        bool is_edge = false;
        while (endpoint && (accept("--") || accept("->"))) {
            is_edge = true;
            if (peek("{") || peek("subgraph")) {
                accept_keyword("subgraph");
                accept_id();
                expect("{");
                statements();
                expect("}");
            } else if (!accept_id()) {
                fail("expected edge endpoint");
            }
        }
        (void)is_edge;
        attr_list();
    }

    void statements() {
        while (!peek("}")) {
            if (pos_ >= text_.size()) fail("unexpected end of input");
            statement();
            accept(";");
        }
    }
};

inline bool dot_well_formed(const std::string& text, std::string* error = nullptr) {
    return DotValidator(text).validate(error);
}

}  // namespace combiproof::tests

#endif  // COMBIPROOF_TESTS_SUPPORT_HPP
