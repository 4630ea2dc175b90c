#include "proof_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "resolution.hpp"
#include "sequent.hpp"

namespace combiproof {

// ── Documents ───────────────────────────────────────────────────────────────

namespace {

using Json = nlohmann::ordered_json;

Formula parse_member(const Json& j, const char* field) {
    if (!j.is_string()) throw SchemaError(std::string(field) + ": expected a string");
    try {
        return to_nnf(parse_formula(j.get<std::string>()));
    } catch (const ParseError& e) {
        throw SchemaError(std::string(field) + ": " + e.what());
    }
}

}  // namespace

LoadedProof load_proof(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("document: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("document: expected a JSON object");

    static const char* const kFields[] = {"lower", "upper", "links", "map", "mix"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (std::find_if(std::begin(kFields), std::end(kFields),
                         [&key](const char* f) { return key == f; }) == std::end(kFields))
            throw SchemaError("unknown field '" + key + "'");
    }
    for (const char* required : {"lower", "upper", "links", "map"})
        if (!doc.contains(required))
            throw SchemaError(std::string(required) + ": field is missing");

    LoadedProof out;
    out.proof.lower = parse_member(doc["lower"], "lower");
    out.proof.upper = parse_member(doc["upper"], "upper");

    const std::size_t upper_leaves = out.proof.upper.leaf_count();
    const std::size_t lower_leaves = out.proof.lower.leaf_count();

    const Json& links = doc["links"];
    if (!links.is_array()) throw SchemaError("links: expected an array");
    for (std::size_t i = 0; i < links.size(); ++i) {
        const Json& pair = links[i];
        const std::string path = "links[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw SchemaError(path + ": expected a pair of integers");
        const std::int64_t a = pair[0].get<std::int64_t>();
        const std::int64_t b = pair[1].get<std::int64_t>();
        if (a < 0 || b < 0 || a >= static_cast<std::int64_t>(upper_leaves) ||
            b >= static_cast<std::int64_t>(upper_leaves))
            throw SchemaError(path + ": leaf index out of range");
        out.proof.linking.pairs.emplace_back(static_cast<LeafId>(a), static_cast<LeafId>(b));
    }

    const Json& map = doc["map"];
    if (!map.is_array()) throw SchemaError("map: expected an array");
    if (map.size() != upper_leaves)
        throw SchemaError("map: length " + std::to_string(map.size()) +
                          " does not match the " + std::to_string(upper_leaves) +
                          " upper leaves");
    for (std::size_t i = 0; i < map.size(); ++i) {
        const std::string path = "map[" + std::to_string(i) + "]";
        if (!map[i].is_number_integer()) throw SchemaError(path + ": expected an integer");
        const std::int64_t v = map[i].get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(lower_leaves))
            throw SchemaError(path + ": leaf index out of range");
        out.proof.map.push_back(static_cast<LeafId>(v));
    }

    if (doc.contains("mix")) {
        if (!doc["mix"].is_boolean()) throw SchemaError("mix: expected a boolean");
        out.mix = doc["mix"].get<bool>();
    }
    return out;
}

std::string save_proof(const CombinatorialProof& p, bool mix) {
    Json doc;
    doc["lower"] = to_string(p.lower);
    doc["upper"] = to_string(p.upper);
    Json links = Json::array();
    for (auto [a, b] : p.linking.normalized().pairs) links.push_back({a, b});
    doc["links"] = std::move(links);
    doc["map"] = p.map;
    doc["mix"] = mix;
    return doc.dump(2) + "\n";
}

// ── Figures ─────────────────────────────────────────────────────────────────

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// One clustered layer per formula: internal connective nodes with tree
// edges, leaves on a shared rank.
void emit_layer(std::ostream& os, const Formula& f, const std::string& prefix,
                const std::string& label) {
    os << "  subgraph cluster_" << prefix << " {\n";
    os << "    label=" << quote(label) << ";\n";
    for (NodeId id = 0; id < f.node_count(); ++id) {
        const Formula::Node& n = f.node(id);
        if (n.is_leaf)
            os << "    " << prefix << n.leaf_id << " [label=" << quote(n.lit.to_string())
               << "];\n";
        else
            os << "    " << prefix << "i" << id
               << " [label=" << quote(n.op == Connective::And ? "&" : "|")
               << ", shape=circle];\n";
    }
    auto name = [&](NodeId id) {
        const Formula::Node& n = f.node(id);
        std::ostringstream s;
        if (n.is_leaf)
            s << prefix << n.leaf_id;
        else
            s << prefix << "i" << id;
        return s.str();
    };
    for (NodeId id = 0; id < f.node_count(); ++id) {
        const Formula::Node& n = f.node(id);
        if (n.is_leaf) continue;
        os << "    " << name(id) << " -- " << name(n.left) << ";\n";
        os << "    " << name(id) << " -- " << name(n.right) << ";\n";
    }
    os << "    { rank=same;";
    for (LeafId id = 0; id < f.leaf_count(); ++id) os << " " << prefix << id << ";";
    os << " }\n";
    os << "  }\n";
}

}  // namespace

std::string emit_figure(const CombinatorialProof& p) {
    std::ostringstream os;
    os << "graph combinatorial_proof {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=plaintext];\n";
    emit_layer(os, p.upper, "u", "upper");
    emit_layer(os, p.lower, "l", "lower");
    for (auto [a, b] : p.linking.normalized().pairs)
        os << "  u" << a << " -- u" << b << " [style=bold, constraint=false];\n";
    for (LeafId u = 0; u < p.map.size(); ++u)
        os << "  u" << u << " -- l" << p.map[u] << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

// ── Random instances ────────────────────────────────────────────────────────

namespace {

std::string variable_name(std::size_t index) {
    static const char letters[] = "PQRSTUVWXYZ";
    if (index < sizeof(letters) - 1) return std::string(1, letters[index]);
    return "v" + std::to_string(index);
}

Formula random_tree(Rng& rng, const std::vector<Literal>& leaves, std::size_t lo,
                    std::size_t hi) {
    if (hi - lo == 1) return Formula::leaf(leaves[lo]);
    std::uniform_int_distribution<std::size_t> split(lo + 1, hi - 1);
    const std::size_t mid = split(rng);
    const Connective op =
        std::bernoulli_distribution(0.5)(rng) ? Connective::And : Connective::Or;
    return Formula::combine(op, random_tree(rng, leaves, lo, mid),
                            random_tree(rng, leaves, mid, hi));
}

}  // namespace

Formula random_formula(Rng& rng, std::size_t max_leaves, std::size_t max_vars) {
    if (max_leaves == 0) throw std::invalid_argument("max_leaves must be positive");
    if (max_vars == 0) throw std::invalid_argument("max_vars must be positive");
    std::uniform_int_distribution<std::size_t> leaf_count(1, max_leaves);
    std::uniform_int_distribution<std::size_t> var(0, max_vars - 1);
    std::bernoulli_distribution negated(0.5);

    const std::size_t n = leaf_count(rng);
    std::vector<Literal> leaves;
    leaves.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        leaves.push_back(Literal{variable_name(var(rng)), negated(rng)});
    return random_tree(rng, leaves, 0, n);
}

Formula random_formula(std::uint64_t seed, std::size_t max_leaves, std::size_t max_vars) {
    Rng rng(seed);
    return random_formula(rng, max_leaves, max_vars);
}

Formula random_linkable_formula(Rng& rng, std::size_t pair_count, std::size_t max_vars) {
    if (pair_count == 0) throw std::invalid_argument("pair_count must be positive");
    std::uniform_int_distribution<std::size_t> var(0, max_vars - 1);
    std::vector<Literal> leaves;
    leaves.reserve(2 * pair_count);
    for (std::size_t i = 0; i < pair_count; ++i) {
        const std::string name = variable_name(var(rng));
        leaves.push_back(Literal{name, false});
        leaves.push_back(Literal{name, true});
    }
    std::shuffle(leaves.begin(), leaves.end(), rng);
    return random_tree(rng, leaves, 0, leaves.size());
}

Linking random_linking(Rng& rng, const Formula& f) {
    std::map<std::string, std::pair<std::vector<LeafId>, std::vector<LeafId>>> by_var;
    for (const auto& leaf : f.leaves())
        (leaf.lit.negated ? by_var[leaf.lit.variable].second
                          : by_var[leaf.lit.variable].first)
            .push_back(leaf.id);

    Linking l;
    for (auto& [name, groups] : by_var) {
        auto& [pos, neg] = groups;
        if (pos.size() != neg.size())
            throw std::invalid_argument("formula has unbalanced literals for " + name);
        std::shuffle(neg.begin(), neg.end(), rng);
        for (std::size_t i = 0; i < pos.size(); ++i) l.pairs.emplace_back(pos[i], neg[i]);
    }
    return l;
}

// ── Differential harness ────────────────────────────────────────────────────

namespace {

CombinatorialProof mutate_proof(Rng& rng, const CombinatorialProof& p) {
    CombinatorialProof m = p;
    std::uniform_int_distribution<int> kind(0, 3);
    auto leaf_of = [&rng](std::size_t count) {
        return static_cast<LeafId>(
            std::uniform_int_distribution<std::size_t>(0, count - 1)(rng));
    };
    switch (kind(rng)) {
        case 0:  // swap two map entries
            if (m.map.size() >= 2) {
                const LeafId a = leaf_of(m.map.size());
                const LeafId b = leaf_of(m.map.size());
                std::swap(m.map[a], m.map[b]);
            }
            break;
        case 1:  // retarget one map entry
            if (!m.map.empty()) m.map[leaf_of(m.map.size())] = leaf_of(m.lower.leaf_count());
            break;
        case 2:  // cross two axiom pairs
            if (m.linking.pairs.size() >= 2) {
                const std::size_t a = leaf_of(m.linking.pairs.size());
                const std::size_t b = leaf_of(m.linking.pairs.size());
                std::swap(m.linking.pairs[a].second, m.linking.pairs[b].second);
            }
            break;
        case 3:  // redirect one pair endpoint
            if (!m.linking.pairs.empty())
                m.linking.pairs[leaf_of(m.linking.pairs.size())].second =
                    leaf_of(m.upper.leaf_count());
            break;
    }
    return m;
}

bool same_proof(const CombinatorialProof& a, const CombinatorialProof& b) {
    return a.lower == b.lower && a.upper == b.upper &&
           a.linking.normalized() == b.linking.normalized() && a.map == b.map;
}

}  // namespace

std::string DifferentialReport::to_string() const {
    std::ostringstream os;
    os << "formulas: " << formulas << "\n"
       << "tautologies: " << tautologies << "\n"
       << "proofs verified: " << proofs_verified << "\n"
       << "net instances: " << net_instances << "\n"
       << "documents round-tripped: " << documents_round_tripped << "\n"
       << "mutants checked: " << mutants_checked << " (accepted: " << mutants_accepted
       << ")\n"
       << "violations: " << violations.size() << "\n";
    for (const std::string& v : violations) os << "  - " << v << "\n";
    return os.str();
}

DifferentialReport run_differential(const DifferentialConfig& config) {
    if (config.max_vars > kDefaultVariableCap)
        throw std::invalid_argument("max_vars exceeds the truth-table cap");

    DifferentialReport report;
    Rng rng(config.seed);
    const auto fast = config.fast_checker
                          ? config.fast_checker
                          : [](const Formula& f, const Linking& l, bool mix) {
                                return dr_check_fast(f, l, mix);
                            };

    for (std::size_t iter = 0; iter < config.iterations; ++iter) {
        const std::string at = "iter " + std::to_string(iter) + ": ";

        // Theorem route: prover against the truth table, then the verifier
        // against the prover.
        Formula f = random_formula(rng, config.max_leaves, config.max_vars);
        ++report.formulas;
        const bool taut = is_tautology(f);
        auto proof = prove(f);
        if (taut != proof.has_value()) {
            report.violations.push_back(at + "prove " +
                                        (proof ? "succeeded on non-tautology "
                                               : "failed on tautology ") +
                                        to_string(f));
        } else if (proof) {
            ++report.tautologies;
            CombinatorialProof cp = translate(*proof);
            Verdict verdict = verify(cp, false);
            if (!verdict.accepted)
                report.violations.push_back(at + "translated proof of " + to_string(f) +
                                            " rejected: " + verdict.to_line());
            else
                ++report.proofs_verified;

            const std::string text = save_proof(cp, false);
            try {
                LoadedProof loaded = load_proof(text);
                if (!same_proof(loaded.proof, cp) || save_proof(loaded.proof, loaded.mix) != text)
                    report.violations.push_back(at + "document round-trip mismatch");
                else
                    ++report.documents_round_tripped;
            } catch (const SchemaError& e) {
                report.violations.push_back(at + "document rejected on reload: " + e.what());
            }

            for (std::size_t t = 0; t < config.mutants_per_proof; ++t) {
                CombinatorialProof mutant = mutate_proof(rng, cp);
                ++report.mutants_checked;
                if (verify(mutant, false).accepted) {
                    ++report.mutants_accepted;
                    if (!is_tautology(mutant.lower))
                        report.violations.push_back(
                            at + "accepted mutant with non-tautological lower formula " +
                            to_string(mutant.lower));
                }
            }
        }

        // Net route: fast checker against the exhaustive oracle.
        std::uniform_int_distribution<std::size_t> pairs(
            1, std::max<std::size_t>(1, config.max_leaves / 2));
        Formula g = random_linkable_formula(rng, pairs(rng), config.max_vars);
        Linking l = random_linking(rng, g);
        ++report.net_instances;
        for (bool mix : {false, true}) {
            const bool oracle = dr_check_exhaustive(g, l, mix);
            const bool candidate = fast(g, l, mix);
            if (oracle != candidate)
                report.violations.push_back(
                    at + "net checkers disagree (mix=" + (mix ? "true" : "false") +
                    ", exhaustive=" + (oracle ? "true" : "false") + ") on " + to_string(g));
        }
    }
    return report;
}

}  // namespace combiproof
