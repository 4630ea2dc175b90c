#include "sequent.hpp"

#include <algorithm>

#include "resolution.hpp"

namespace combiproof {

const char* rule_name(Rule r) noexcept {
    switch (r) {
        case Rule::Axiom: return "ax";
        case Rule::OrIntro: return "or";
        case Rule::AndIntro: return "and";
        case Rule::Contract: return "contract";
        case Rule::Weaken: return "weaken";
    }
    return "?";
}

// ── Proof checking ──────────────────────────────────────────────────────────

namespace {

struct NodeCheck {
    std::size_t next_index = 0;

    CheckResult fail(std::size_t index, const std::string& msg) {
        return CheckResult::fail("node " + std::to_string(index) + " (" + msg + ")");
    }

    CheckResult check(const SequentProof& p) {
        const std::size_t index = next_index++;
        const Sequent& c = p.conclusion;

        switch (p.rule) {
            case Rule::Axiom: {
                if (!p.premises.empty()) return fail(index, "ax expects no premises");
                if (c.size() != 2) return fail(index, "ax conclusion must have two members");
                const Formula& a = c[0];
                const Formula& b = c[1];
                if (a.leaf_count() != 1 || b.leaf_count() != 1)
                    return fail(index, "ax members must be literals");
                if (!a.leaf_literal(0).is_dual_of(b.leaf_literal(0)))
                    return fail(index, "ax literals are not dual");
                return CheckResult::pass();
            }
            case Rule::OrIntro: {
                if (p.premises.size() != 1) return fail(index, "or expects one premise");
                const Sequent& pr = p.premises[0].conclusion;
                const std::size_t i = p.position;
                if (i >= c.size()) return fail(index, "or position out of range");
                if (pr.size() != c.size() + 1) return fail(index, "or premise size mismatch");
                const Formula::Node& merged = c[i].node(c[i].root());
                if (merged.is_leaf || merged.op != Connective::Or)
                    return fail(index, "member at or position is not a disjunction");
                for (std::size_t k = 0; k < i; ++k)
                    if (!(pr[k] == c[k])) return fail(index, "or context mismatch");
                if (!(pr[i] == c[i].subformula(merged.left)) ||
                    !(pr[i + 1] == c[i].subformula(merged.right)))
                    return fail(index, "or premise members do not match the disjuncts");
                for (std::size_t k = i + 1; k < c.size(); ++k)
                    if (!(pr[k + 1] == c[k])) return fail(index, "or context mismatch");
                break;
            }
            case Rule::AndIntro: {
                if (p.premises.size() != 2) return fail(index, "and expects two premises");
                const Sequent& p1 = p.premises[0].conclusion;
                const Sequent& p2 = p.premises[1].conclusion;
                if (p1.empty() || p2.empty()) return fail(index, "and premise is empty");
                if (c.size() != p1.size() + p2.size() - 1)
                    return fail(index, "and conclusion size mismatch");
                const Formula& active = c.back();
                const Formula::Node& root = active.node(active.root());
                if (root.is_leaf || root.op != Connective::And)
                    return fail(index, "last member is not a conjunction");
                if (!(p1.back() == active.subformula(root.left)) ||
                    !(p2.back() == active.subformula(root.right)))
                    return fail(index, "and premises do not end in the conjuncts");
                for (std::size_t k = 0; k + 1 < p1.size(); ++k)
                    if (!(c[k] == p1[k])) return fail(index, "and left context mismatch");
                for (std::size_t k = 0; k + 1 < p2.size(); ++k)
                    if (!(c[p1.size() - 1 + k] == p2[k]))
                        return fail(index, "and right context mismatch");
                break;
            }
            case Rule::Contract: {
                if (p.premises.size() != 1) return fail(index, "contract expects one premise");
                const Sequent& pr = p.premises[0].conclusion;
                if (!(p.keep < p.drop && p.drop < pr.size()))
                    return fail(index, "contract positions out of range");
                if (!(pr[p.keep] == pr[p.drop]))
                    return fail(index, "contracted members are not identical");
                if (c.size() + 1 != pr.size()) return fail(index, "contract size mismatch");
                for (std::size_t k = 0, kp = 0; kp < pr.size(); ++kp) {
                    if (kp == p.drop) continue;
                    if (!(c[k++] == pr[kp])) return fail(index, "contract context mismatch");
                }
                break;
            }
            case Rule::Weaken: {
                if (p.premises.size() != 1) return fail(index, "weaken expects one premise");
                const Sequent& pr = p.premises[0].conclusion;
                if (c.size() != pr.size() + 1) return fail(index, "weaken size mismatch");
                if (p.position >= c.size()) return fail(index, "weaken position out of range");
                for (std::size_t k = 0, kc = 0; kc < c.size(); ++kc) {
                    if (kc == p.position) continue;
                    if (!(c[kc] == pr[k++])) return fail(index, "weaken context mismatch");
                }
                break;
            }
        }

        for (const SequentProof& prem : p.premises)
            if (CheckResult r = check(prem); !r) return r;
        return CheckResult::pass();
    }
};

}  // namespace

CheckResult check_sequent_proof(const SequentProof& p) { return NodeCheck{}.check(p); }

// ── Proof search ────────────────────────────────────────────────────────────

namespace {

bool is_literal_member(const Formula& f) { return f.leaf_count() == 1; }

Connective root_op(const Formula& f) { return f.node(f.root()).op; }

// Axiom on members i < j of s, then weakenings restoring every other
// member in increasing position order.
SequentProof close_with_axiom(const Sequent& s, std::size_t i, std::size_t j) {
    SequentProof node;
    node.conclusion = {s[i], s[j]};
    node.rule = Rule::Axiom;

    std::vector<std::size_t> present = {i, j};
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k == i || k == j) continue;
        auto at = std::lower_bound(present.begin(), present.end(), k);
        const std::size_t insert_pos = static_cast<std::size_t>(at - present.begin());
        present.insert(at, k);

        SequentProof weak;
        weak.rule = Rule::Weaken;
        weak.position = insert_pos;
        weak.conclusion.reserve(present.size());
        for (std::size_t idx : present) weak.conclusion.push_back(s[idx]);
        weak.premises.push_back(std::move(node));
        node = std::move(weak);
    }
    return node;
}

}  // namespace

std::optional<SequentProof> prove_sequent(const Sequent& s) {
    // 1. decompose the leftmost top-level disjunction (invertible)
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (is_literal_member(s[i]) || root_op(s[i]) != Connective::Or) continue;
        const Formula::Node& root = s[i].node(s[i].root());
        Sequent premise;
        premise.reserve(s.size() + 1);
        premise.insert(premise.end(), s.begin(), s.begin() + i);
        premise.push_back(s[i].subformula(root.left));
        premise.push_back(s[i].subformula(root.right));
        premise.insert(premise.end(), s.begin() + i + 1, s.end());

        auto sub = prove_sequent(premise);
        if (!sub) return std::nullopt;
        SequentProof node;
        node.conclusion = s;
        node.rule = Rule::OrIntro;
        node.position = i;
        node.premises.push_back(std::move(*sub));
        return node;
    }

    // 2. close on the first dual pair of literal members
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!is_literal_member(s[i])) continue;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!is_literal_member(s[j])) continue;
            if (s[i].leaf_literal(0).is_dual_of(s[j].leaf_literal(0)))
                return close_with_axiom(s, i, j);
        }
    }

    // 3. branch on the leftmost conjunction, full context on both sides
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (is_literal_member(s[i]) || root_op(s[i]) != Connective::And) continue;
        const Formula::Node& root = s[i].node(s[i].root());
        const Formula conj = s[i];
        Sequent context;
        context.reserve(s.size() - 1);
        for (std::size_t k = 0; k < s.size(); ++k)
            if (k != i) context.push_back(s[k]);
        const std::size_t m = context.size();

        Sequent left = context, right = context;
        left.push_back(conj.subformula(root.left));
        right.push_back(conj.subformula(root.right));

        auto sub1 = prove_sequent(left);
        if (!sub1) return std::nullopt;
        auto sub2 = prove_sequent(right);
        if (!sub2) return std::nullopt;

        SequentProof node;
        node.rule = Rule::AndIntro;
        node.conclusion.reserve(2 * m + 1);
        node.conclusion.insert(node.conclusion.end(), context.begin(), context.end());
        node.conclusion.insert(node.conclusion.end(), context.begin(), context.end());
        node.conclusion.push_back(conj);
        node.premises.push_back(std::move(*sub1));
        node.premises.push_back(std::move(*sub2));

        // contract the duplicated context member by member
        for (std::size_t t = 0; t < m; ++t) {
            SequentProof contract;
            contract.rule = Rule::Contract;
            contract.keep = t;
            contract.drop = m;
            contract.conclusion = node.conclusion;
            contract.conclusion.erase(contract.conclusion.begin() + m);
            contract.premises.push_back(std::move(node));
            node = std::move(contract);
        }

        // the conjunction sits last; move it back to position i when needed
        if (i != m) {
            SequentProof weak;
            weak.rule = Rule::Weaken;
            weak.position = i;
            weak.conclusion = node.conclusion;
            weak.conclusion.insert(weak.conclusion.begin() + i, conj);
            weak.premises.push_back(std::move(node));

            SequentProof contract;
            contract.rule = Rule::Contract;
            contract.keep = i;
            contract.drop = m + 1;
            contract.conclusion = weak.conclusion;
            contract.conclusion.pop_back();
            contract.premises.push_back(std::move(weak));
            node = std::move(contract);
        }
        return node;
    }

    return std::nullopt;
}

std::optional<SequentProof> prove(const Formula& goal) { return prove_sequent({goal}); }

// ── Translation ─────────────────────────────────────────────────────────────

namespace {

struct TransItem {
    Formula upper;
    std::size_t tag;  // index of the conclusion member this item maps into
};

struct Target {
    std::size_t member;
    LeafId leaf;
};

struct TransState {
    std::vector<TransItem> items;
    std::vector<std::pair<LeafId, LeafId>> pairs;  // global upper leaf ids
    std::vector<Target> map;                       // per global upper leaf
};

Formula fold_or(const std::vector<Formula>& parts) {
    Formula out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = Formula::combine(Connective::Or, out, parts[i]);
    return out;
}

// Leaf count prefix sums over the items, in item order.
std::vector<LeafId> item_offsets(const std::vector<TransItem>& items) {
    std::vector<LeafId> offsets;
    offsets.reserve(items.size() + 1);
    LeafId total = 0;
    for (const TransItem& it : items) {
        offsets.push_back(total);
        total += static_cast<LeafId>(it.upper.leaf_count());
    }
    offsets.push_back(total);
    return offsets;
}

void validate_state(const TransState& st, const Sequent& conclusion) {
    const std::vector<LeafId> offsets = item_offsets(st.items);
    const LeafId total = offsets.back();
    if (st.map.size() != total) throw std::logic_error("translation: map not total");

    std::vector<int> linked(total, 0);
    for (auto [a, b] : st.pairs) {
        if (a >= total || b >= total) throw std::logic_error("translation: pair out of range");
        ++linked[a];
        ++linked[b];
    }
    for (LeafId g = 0; g < total; ++g)
        if (linked[g] != 1) throw std::logic_error("translation: linking is not a partition");

    for (std::size_t j = 0; j < st.items.size(); ++j) {
        const TransItem& item = st.items[j];
        if (item.tag >= conclusion.size()) throw std::logic_error("translation: tag out of range");
        const Formula& member = conclusion[item.tag];
        for (LeafId u = 0; u < item.upper.leaf_count(); ++u) {
            const Target& t = st.map[offsets[j] + u];
            if (t.member != item.tag)
                throw std::logic_error("translation: leaf maps outside its tagged member");
            if (!(item.upper.leaf_literal(u) == member.leaf_literal(t.leaf)))
                throw std::logic_error("translation: label not preserved");
        }
        for (const Clique& c : cliques(item.upper)) {
            Clique image;
            for (LeafId u : c) image.push_back(st.map[offsets[j] + u].leaf);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (!is_clique(member, image))
                throw std::logic_error("translation: clique image is not a clique");
        }
    }
    for (auto [a, b] : st.pairs) {
        // global leaf id -> literal, via the owning item
        auto literal_at = [&](LeafId g) {
            std::size_t j = 0;
            while (offsets[j + 1] <= g) ++j;
            return st.items[j].upper.leaf_literal(g - offsets[j]);
        };
        if (!literal_at(a).is_dual_of(literal_at(b)))
            throw std::logic_error("translation: axiom pair not dual");
    }
}

TransState translate_node(const SequentProof& p, const TranslateOptions& opts) {
    TransState st;
    switch (p.rule) {
        case Rule::Axiom: {
            st.items.push_back({Formula::leaf(p.conclusion[0].leaf_literal(0)), 0});
            st.items.push_back({Formula::leaf(p.conclusion[1].leaf_literal(0)), 1});
            st.pairs.emplace_back(0, 1);
            st.map = {Target{0, 0}, Target{1, 0}};
            break;
        }
        case Rule::OrIntro: {
            st = translate_node(p.premises[0], opts);
            const std::size_t i = p.position;
            const Formula& merged = p.conclusion[i];
            const LeafId left_leaves = static_cast<LeafId>(
                merged.subformula(merged.node(merged.root()).left).leaf_count());
            for (TransItem& item : st.items) {
                if (item.tag == i + 1)
                    item.tag = i;
                else if (item.tag > i + 1)
                    --item.tag;
            }
            for (Target& t : st.map) {
                if (t.member == i + 1) {
                    t.member = i;
                    t.leaf += left_leaves;
                } else if (t.member > i + 1) {
                    --t.member;
                }
            }
            break;
        }
        case Rule::Contract: {
            st = translate_node(p.premises[0], opts);
            for (TransItem& item : st.items) {
                if (item.tag == p.drop)
                    item.tag = p.keep;
                else if (item.tag > p.drop)
                    --item.tag;
            }
            for (Target& t : st.map) {
                if (t.member == p.drop)
                    t.member = p.keep;
                else if (t.member > p.drop)
                    --t.member;
            }
            break;
        }
        case Rule::Weaken: {
            st = translate_node(p.premises[0], opts);
            for (TransItem& item : st.items)
                if (item.tag >= p.position) ++item.tag;
            for (Target& t : st.map)
                if (t.member >= p.position) ++t.member;
            break;
        }
        case Rule::AndIntro: {
            TransState st1 = translate_node(p.premises[0], opts);
            TransState st2 = translate_node(p.premises[1], opts);
            const std::size_t n1 = p.premises[0].conclusion.size();
            const std::size_t n2 = p.premises[1].conclusion.size();
            const std::size_t a_pos = n1 - 1;
            const std::size_t b_pos = n2 - 1;
            const std::size_t conj_pos = n1 + n2 - 2;

            auto tagged = [](const TransState& state, std::size_t pos) {
                std::size_t count = 0;
                for (const TransItem& item : state.items) count += item.tag == pos;
                return count;
            };
            const std::size_t k = tagged(st1, a_pos);
            const std::size_t m = tagged(st2, b_pos);

            if (k == 0) {
                st = std::move(st1);  // premise 2 contributes nothing to A, drop it
                break;
            }
            if (m == 0) {
                st = std::move(st2);
                for (TransItem& item : st.items) item.tag += n1 - 1;
                for (Target& t : st.map) t.member += n1 - 1;
                break;
            }

            const std::vector<LeafId> off1 = item_offsets(st1.items);
            const std::vector<LeafId> off2 = item_offsets(st2.items);

            // New item order: passive items of premise 1, passive items of
            // premise 2, then the tensored active item.
            std::vector<Formula> active1, active2;
            std::vector<std::size_t> order1_passive, order2_passive, order1_active,
                order2_active;
            for (std::size_t j = 0; j < st1.items.size(); ++j)
                (st1.items[j].tag == a_pos ? order1_active : order1_passive).push_back(j);
            for (std::size_t j = 0; j < st2.items.size(); ++j)
                (st2.items[j].tag == b_pos ? order2_active : order2_passive).push_back(j);
            for (std::size_t j : order1_active) active1.push_back(st1.items[j].upper);
            for (std::size_t j : order2_active) active2.push_back(st2.items[j].upper);

            const Formula tensored =
                Formula::combine(Connective::And, fold_or(active1), fold_or(active2));

            // Global leaf renumbering: old (premise, global id) -> new id.
            std::vector<LeafId> renum1(off1.back()), renum2(off2.back());
            LeafId next = 0;
            auto place = [&](const TransState& src, const std::vector<LeafId>& off,
                             std::vector<LeafId>& renum, std::size_t j) {
                const LeafId n = static_cast<LeafId>(src.items[j].upper.leaf_count());
                for (LeafId u = 0; u < n; ++u) renum[off[j] + u] = next++;
            };
            for (std::size_t j : order1_passive) {
                place(st1, off1, renum1, j);
                st.items.push_back(st1.items[j]);
            }
            for (std::size_t j : order2_passive) {
                place(st2, off2, renum2, j);
                TransItem item = st2.items[j];
                item.tag += n1 - 1;
                st.items.push_back(std::move(item));
            }
            for (std::size_t j : order1_active) place(st1, off1, renum1, j);
            for (std::size_t j : order2_active) place(st2, off2, renum2, j);
            st.items.push_back({tensored, conj_pos});

            const Formula& conj = p.conclusion.back();
            const LeafId left_leaves = static_cast<LeafId>(
                conj.subformula(conj.node(conj.root()).left).leaf_count());

            st.map.resize(off1.back() + off2.back());
            for (LeafId g = 0; g < off1.back(); ++g) {
                Target t = st1.map[g];
                if (t.member == a_pos)
                    t.member = conj_pos;  // A is the left conjunct; leaf id unchanged
                st.map[renum1[g]] = t;
            }
            for (LeafId g = 0; g < off2.back(); ++g) {
                Target t = st2.map[g];
                if (t.member == b_pos) {
                    t.member = conj_pos;
                    t.leaf += left_leaves;
                } else {
                    t.member += n1 - 1;
                }
                st.map[renum2[g]] = t;
            }
            for (auto [a, b] : st1.pairs) st.pairs.emplace_back(renum1[a], renum1[b]);
            for (auto [a, b] : st2.pairs) st.pairs.emplace_back(renum2[a], renum2[b]);
            break;
        }
    }
    if (opts.validate_steps) validate_state(st, p.conclusion);
    return st;
}

}  // namespace

CombinatorialProof translate(const SequentProof& p, const TranslateOptions& opts) {
    if (CheckResult r = check_sequent_proof(p); !r)
        throw std::invalid_argument("translate: " + r.error);

    TransState st = translate_node(p, opts);

    std::vector<Formula> upper_parts;
    upper_parts.reserve(st.items.size());
    for (const TransItem& item : st.items) upper_parts.push_back(item.upper);

    std::vector<LeafId> member_offsets;
    LeafId total = 0;
    for (const Formula& member : p.conclusion) {
        member_offsets.push_back(total);
        total += static_cast<LeafId>(member.leaf_count());
    }

    CombinatorialProof out;
    out.lower = fold_or(p.conclusion);
    out.upper = fold_or(upper_parts);
    out.linking.pairs = st.pairs;
    out.map.reserve(st.map.size());
    for (const Target& t : st.map) out.map.push_back(member_offsets[t.member] + t.leaf);
    return out;
}

std::optional<CombinatorialProof> prove_combinatorial(const Formula& f) {
    auto proof = prove(f);
    if (!proof) return std::nullopt;
    return translate(*proof);
}

}  // namespace combiproof
