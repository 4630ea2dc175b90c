#include "net.hpp"

#include <algorithm>
#include <numeric>

namespace combiproof {

Linking Linking::normalized() const {
    Linking out = *this;
    for (auto& [a, b] : out.pairs)
        if (a > b) std::swap(a, b);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

CheckResult validate_linking(const Formula& f, const Linking& l) {
    const std::size_t n = f.leaf_count();
    std::vector<int> seen(n, 0);
    for (const auto& [a, b] : l.pairs) {
        if (a >= n || b >= n)
            return CheckResult::fail("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") refers to a leaf out of range");
        if (a == b)
            return CheckResult::fail("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") links a leaf to itself");
        if (!f.leaf_literal(a).is_dual_of(f.leaf_literal(b)))
            return CheckResult::fail("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") is not dual: " + f.leaf_literal(a).to_string() + " vs " +
                                     f.leaf_literal(b).to_string());
        ++seen[a];
        ++seen[b];
    }
    for (LeafId id = 0; id < n; ++id) {
        if (seen[id] == 0) return CheckResult::fail("leaf " + std::to_string(id) + " is unlinked");
        if (seen[id] > 1)
            return CheckResult::fail("leaf " + std::to_string(id) + " occurs in several pairs");
    }
    return CheckResult::pass();
}

// ── Switch graphs ───────────────────────────────────────────────────────────

SwitchGraph switch_graph(const Formula& f, const Linking& l, const Switching& s) {
    if (CheckResult r = validate_linking(f, l); !r) throw std::invalid_argument(r.error);

    SwitchGraph g;
    g.vertex_count = f.node_count();
    for (NodeId id = 0; id < f.node_count(); ++id) {
        const Formula::Node& n = f.node(id);
        if (n.is_leaf) continue;
        if (n.op == Connective::And) {
            g.edges.emplace_back(id, n.left);
            g.edges.emplace_back(id, n.right);
        } else {
            auto it = s.choice.find(id);
            if (it == s.choice.end())
                throw std::invalid_argument("switching misses or-node " + std::to_string(id));
            g.edges.emplace_back(id, it->second == Branch::Left ? n.left : n.right);
        }
    }
    for (const auto& [a, b] : l.pairs) g.edges.emplace_back(f.leaf_node(a), f.leaf_node(b));
    return g;
}

namespace {

// Plain union-find; small graphs, no rank tricks needed.
struct UnionFind {
    std::vector<std::uint32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if x and y were already connected
    bool unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

bool is_acyclic(const SwitchGraph& g) {
    UnionFind uf(g.vertex_count);
    for (const auto& [a, b] : g.edges)
        if (!uf.unite(a, b)) return false;
    return true;
}

std::size_t component_count(const SwitchGraph& g) {
    UnionFind uf(g.vertex_count);
    std::size_t components = g.vertex_count;
    for (const auto& [a, b] : g.edges)
        if (uf.unite(a, b)) --components;
    return components;
}

Switching switching_from_index(const Formula& f, std::uint64_t index) {
    Switching s;
    std::uint64_t bit = 1;
    for (NodeId id : f.or_nodes()) {
        s.choice.emplace(id, (index & bit) ? Branch::Right : Branch::Left);
        bit <<= 1;
    }
    return s;
}

// ── Exhaustive checker ──────────────────────────────────────────────────────

namespace {

struct SwitchVerdict {
    bool ok;
    std::string reason;
};

SwitchVerdict check_one_switching(const Formula& f, const Linking& l, const Switching& s,
                                  bool mix) {
    SwitchGraph g = switch_graph(f, l, s);
    UnionFind uf(g.vertex_count);
    std::size_t components = g.vertex_count;
    for (const auto& [a, b] : g.edges) {
        if (!uf.unite(a, b)) return {false, "cyclic"};
        --components;
    }
    if (!mix && components != 1) return {false, "disconnected"};
    return {true, {}};
}

}  // namespace

std::optional<NetFailure> find_failing_switching(const Formula& f, const Linking& l, bool mix) {
    if (CheckResult r = validate_linking(f, l); !r) throw std::invalid_argument(r.error);
    const std::size_t k = f.or_count();
    if (k >= 63) throw std::invalid_argument("too many or-nodes for exhaustive switching");
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 0; i < total; ++i) {
        Switching s = switching_from_index(f, i);
        SwitchVerdict v = check_one_switching(f, l, s, mix);
        if (!v.ok) return NetFailure{std::move(s), v.reason};
    }
    return std::nullopt;
}

bool dr_check_exhaustive(const Formula& f, const Linking& l, bool mix) {
    return !find_failing_switching(f, l, mix).has_value();
}

// ── Fast checker ────────────────────────────────────────────────────────────
//
// Gadget graph.  Every formula node contributes a constant-size gadget whose
// internal matched edges form the perfect matching B together with nothing
// else; tree edges and axiom links become unmatched edges between gadget
// ports.  An alternating cycle with respect to B can cross a gadget only
// along an allowed transition:
//
//   leaf    u1 -- u2             parent port u1, axiom port u2
//   par     p1 -- q1             parent port p1, both child ports on q1,
//                                so child-to-child is impossible
//   tensor  a1--a2 b1--b2 c1--c2 parent on a1, children on b1/c1, with
//           unmatched a2-b2-c2 triangle: any port pair connects
//
// B is the unique perfect matching of the gadget graph iff no switching has
// a cycle.

namespace {

struct RbGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> matched;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> unmatched;

    std::uint32_t add_vertex() { return static_cast<std::uint32_t>(vertex_count++); }
};

struct Ports {
    std::uint32_t parent = 0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint32_t axiom = 0;
};

RbGraph build_rb_graph(const Formula& f, const Linking& l) {
    RbGraph g;
    std::vector<Ports> ports(f.node_count());

    for (NodeId id = 0; id < f.node_count(); ++id) {
        const Formula::Node& n = f.node(id);
        Ports& p = ports[id];
        if (n.is_leaf) {
            p.parent = g.add_vertex();
            p.axiom = g.add_vertex();
            g.matched.emplace_back(p.parent, p.axiom);
        } else if (n.op == Connective::Or) {
            p.parent = g.add_vertex();
            std::uint32_t kids = g.add_vertex();
            p.left = p.right = kids;
            g.matched.emplace_back(p.parent, kids);
        } else {
            std::uint32_t a1 = g.add_vertex(), a2 = g.add_vertex();
            std::uint32_t b1 = g.add_vertex(), b2 = g.add_vertex();
            std::uint32_t c1 = g.add_vertex(), c2 = g.add_vertex();
            g.matched.emplace_back(a1, a2);
            g.matched.emplace_back(b1, b2);
            g.matched.emplace_back(c1, c2);
            g.unmatched.emplace_back(a2, b2);
            g.unmatched.emplace_back(a2, c2);
            g.unmatched.emplace_back(b2, c2);
            p.parent = a1;
            p.left = b1;
            p.right = c1;
        }
    }
    for (NodeId id = 0; id < f.node_count(); ++id) {
        const Formula::Node& n = f.node(id);
        if (n.is_leaf) continue;
        g.unmatched.emplace_back(ports[id].left, ports[n.left].parent);
        g.unmatched.emplace_back(ports[id].right, ports[n.right].parent);
    }
    for (const auto& [a, b] : l.pairs)
        g.unmatched.emplace_back(ports[f.leaf_node(a)].axiom, ports[f.leaf_node(b)].axiom);
    return g;
}

// Uniqueness of a perfect matching by peeling: a graph whose perfect
// matching is unique always has a bridge inside the matching (Kotzig), and
// a matched bridge is forced, so both endpoints can be removed.  If no
// matched bridge exists while edges remain, a second matching exists.
bool has_unique_perfect_matching(const RbGraph& g) {
    struct Edge {
        std::uint32_t a, b;
        bool matched;
        bool alive = true;
    };
    std::vector<Edge> edges;
    edges.reserve(g.matched.size() + g.unmatched.size());
    for (auto [a, b] : g.matched) edges.push_back({a, b, true});
    for (auto [a, b] : g.unmatched) edges.push_back({a, b, false});

    std::vector<char> vertex_alive(g.vertex_count, 1);
    std::vector<std::vector<std::uint32_t>> incident(g.vertex_count);
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].a].push_back(e);
        incident[edges[e].b].push_back(e);
    }

    std::size_t alive_edges = edges.size();
    while (alive_edges > 0) {
        // Tarjan lowlink bridge scan over the surviving subgraph,
        // iterative to keep the stack bounded.
        std::vector<std::uint32_t> disc(g.vertex_count, 0), low(g.vertex_count, 0);
        std::uint32_t timer = 1;
        std::optional<std::uint32_t> forced;  // a matched bridge

        struct Frame {
            std::uint32_t v;
            std::uint32_t via_edge;
            std::size_t next;
        };
        std::vector<Frame> stack;
        for (std::uint32_t root = 0; root < g.vertex_count && !forced; ++root) {
            if (!vertex_alive[root] || disc[root]) continue;
            stack.push_back({root, static_cast<std::uint32_t>(-1), 0});
            disc[root] = low[root] = timer++;
            while (!stack.empty() && !forced) {
                Frame& fr = stack.back();
                if (fr.next < incident[fr.v].size()) {
                    std::uint32_t e = incident[fr.v][fr.next++];
                    if (!edges[e].alive || e == fr.via_edge) continue;
                    std::uint32_t w = edges[e].a == fr.v ? edges[e].b : edges[e].a;
                    if (disc[w]) {
                        low[fr.v] = std::min(low[fr.v], disc[w]);
                    } else {
                        disc[w] = low[w] = timer++;
                        stack.push_back({w, e, 0});
                    }
                } else {
                    if (fr.via_edge != static_cast<std::uint32_t>(-1)) {
                        std::uint32_t parent = stack[stack.size() - 2].v;
                        low[parent] = std::min(low[parent], low[fr.v]);
                        if (low[fr.v] > disc[parent] && edges[fr.via_edge].matched)
                            forced = fr.via_edge;
                    }
                    stack.pop_back();
                }
            }
        }

        if (!forced) return false;

        // Remove both endpoints of the forced edge and everything incident.
        for (std::uint32_t v : {edges[*forced].a, edges[*forced].b}) {
            vertex_alive[v] = 0;
            for (std::uint32_t e : incident[v])
                if (edges[e].alive) {
                    edges[e].alive = false;
                    --alive_edges;
                }
        }
    }
    return true;
}

}  // namespace

bool dr_check_fast(const Formula& f, const Linking& l, bool mix) {
    if (CheckResult r = validate_linking(f, l); !r) throw std::invalid_argument(r.error);

    if (!has_unique_perfect_matching(build_rb_graph(f, l))) return false;  // cyclic switching

    if (mix) return true;
    // All switchings are forests sharing vertex and edge counts, so they
    // all have the same number of components.
    const std::size_t edges = 2 * f.and_count() + f.or_count() + l.pairs.size();
    return f.node_count() == edges + 1;
}

}  // namespace combiproof
