#include "resolution.hpp"

#include <algorithm>

namespace combiproof {

namespace {

// Resolutions of the subtree at `id`, in enumeration order.
std::vector<Resolution> resolutions_below(const Formula& f, NodeId id) {
    const Formula::Node& n = f.node(id);
    if (n.is_leaf) return {Resolution{}};

    std::vector<Resolution> left = resolutions_below(f, n.left);
    std::vector<Resolution> right = resolutions_below(f, n.right);

    std::vector<Resolution> out;
    if (n.op == Connective::And) {
        out.reserve(left.size() * right.size());
        for (const Resolution& a : left)
            for (const Resolution& b : right) {
                Resolution r = a;
                r.choice.insert(b.choice.begin(), b.choice.end());
                out.push_back(std::move(r));
            }
    } else {
        out.reserve(left.size() + right.size());
        for (const Resolution& a : left) {
            Resolution r = a;
            r.choice.emplace(id, Branch::Left);
            out.push_back(std::move(r));
        }
        for (const Resolution& b : right) {
            Resolution r = b;
            r.choice.emplace(id, Branch::Right);
            out.push_back(std::move(r));
        }
    }
    return out;
}

void collect_leaves(const Formula& f, NodeId id, const Resolution& r, std::size_t& used,
                    Clique& out) {
    const Formula::Node& n = f.node(id);
    if (n.is_leaf) {
        out.push_back(n.leaf_id);
        return;
    }
    if (n.op == Connective::And) {
        collect_leaves(f, n.left, r, used, out);
        collect_leaves(f, n.right, r, used, out);
        return;
    }
    auto it = r.choice.find(id);
    if (it == r.choice.end())
        throw std::invalid_argument("resolution misses a choice for a surviving or-node");
    ++used;
    collect_leaves(f, it->second == Branch::Left ? n.left : n.right, r, used, out);
}

}  // namespace

std::vector<Resolution> enumerate_resolutions(const Formula& f) {
    return resolutions_below(f, f.root());
}

Clique resolution_leaves(const Formula& f, const Resolution& r) {
    Clique out;
    std::size_t used = 0;
    collect_leaves(f, f.root(), r, used, out);
    if (used != r.choice.size())
        throw std::invalid_argument("resolution chooses at a deleted or-node");
    std::sort(out.begin(), out.end());
    return out;
}

std::set<Clique> cliques(const Formula& f) {
    std::set<Clique> out;
    for (const Resolution& r : enumerate_resolutions(f)) out.insert(resolution_leaves(f, r));
    return out;
}

bool is_clique(const Formula& f, const Clique& s) {
    Clique ids = s;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) return false;
    for (LeafId id : ids)
        if (id >= f.leaf_count()) throw std::out_of_range("leaf id out of range");

    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (meet(f, ids[i], ids[j]) != Connective::And) return false;

    // Maximality: no outside leaf meets every member at an And.
    for (LeafId z = 0; z < f.leaf_count(); ++z) {
        if (std::binary_search(ids.begin(), ids.end(), z)) continue;
        bool extends = true;
        for (LeafId id : ids)
            if (meet(f, z, id) != Connective::And) {
                extends = false;
                break;
            }
        if (extends) return false;
    }
    return true;
}

std::uint64_t count_resolutions(const Formula& f) {
    std::vector<std::uint64_t> count(f.node_count());
    for (NodeId id = static_cast<NodeId>(f.node_count()); id-- > 0;) {
        const Formula::Node& n = f.node(id);
        if (n.is_leaf)
            count[id] = 1;
        else if (n.op == Connective::And)
            count[id] = count[n.left] * count[n.right];
        else
            count[id] = count[n.left] + count[n.right];
    }
    return count[0];
}

}  // namespace combiproof
