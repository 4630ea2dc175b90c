#include "comb_proof.hpp"

#include <algorithm>
#include <sstream>

#include "resolution.hpp"

namespace combiproof {

const char* stage_name(Stage s) noexcept {
    switch (s) {
        case Stage::Linking: return "linking";
        case Stage::Net: return "net";
        case Stage::Labels: return "labels";
        case Stage::Cliques: return "cliques";
    }
    return "?";
}

std::string Verdict::to_line() const {
    if (accepted) return "ACCEPTED";
    return std::string("REJECTED: ") + stage_name(stage) + ": " + witness;
}

CheckResult check_labels(const Formula& upper, const Formula& lower, const LeafMap& map) {
    if (map.size() != upper.leaf_count())
        return CheckResult::fail("leaf map covers " + std::to_string(map.size()) +
                                 " leaves, upper formula has " +
                                 std::to_string(upper.leaf_count()));
    for (LeafId u = 0; u < map.size(); ++u) {
        if (map[u] >= lower.leaf_count())
            return CheckResult::fail("leaf " + std::to_string(u) + " maps out of range");
        const Literal& from = upper.leaf_literal(u);
        const Literal& to = lower.leaf_literal(map[u]);
        if (from != to)
            return CheckResult::fail("leaf " + std::to_string(u) + " (" + from.to_string() +
                                     ") maps onto " + to.to_string());
    }
    return CheckResult::pass();
}

namespace {

std::string format_leaf_set(const Clique& c) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ',';
        out << c[i];
    }
    out << '}';
    return out.str();
}

}  // namespace

CheckResult check_cliques(const Formula& upper, const Formula& lower, const LeafMap& map) {
    // Cliques enumerate in sorted order, so the witness is the smallest
    // failing clique.
    for (const Clique& c : cliques(upper)) {
        Clique image;
        image.reserve(c.size());
        for (LeafId u : c) image.push_back(map[u]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!is_clique(lower, image))
            return CheckResult::fail("image " + format_leaf_set(image) + " of upper clique " +
                                     format_leaf_set(c) + " is not a clique of the lower formula");
    }
    return CheckResult::pass();
}

namespace {

// Readable rendering of the first failing switching.
std::string format_switching(const Switching& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [id, branch] : s.choice) {
        if (!first) out << ',';
        first = false;
        out << id << (branch == Branch::Left ? ":L" : ":R");
    }
    out << '}';
    return out.str();
}

// Witness search is exhaustive; keep it bounded for adversarial inputs.
constexpr std::size_t kWitnessOrCap = 20;

}  // namespace

Verdict verify_net(const Formula& upper, const Linking& linking, bool mix) {
    if (CheckResult r = validate_linking(upper, linking); !r)
        return Verdict{false, Stage::Linking, r.error};

    if (!dr_check_fast(upper, linking, mix)) {
        std::string witness;
        if (upper.or_count() <= kWitnessOrCap) {
            auto failure = find_failing_switching(upper, linking, mix);
            if (failure)
                witness = "switching " + format_switching(failure->switching) + " is " +
                          failure->reason;
            else
                witness = "fast and exhaustive checkers disagree";  // differential tests keep this unreachable
        } else {
            witness = "net check failed (too many or-nodes to enumerate a witness)";
        }
        return Verdict{false, Stage::Net, witness};
    }
    return Verdict{};
}

Verdict verify(const CombinatorialProof& p, bool mix) {
    if (Verdict v = verify_net(p.upper, p.linking, mix); !v) return v;

    if (CheckResult r = check_labels(p.upper, p.lower, p.map); !r)
        return Verdict{false, Stage::Labels, r.error};

    if (CheckResult r = check_cliques(p.upper, p.lower, p.map); !r)
        return Verdict{false, Stage::Cliques, r.error};

    return Verdict{};
}

}  // namespace combiproof
