#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspidal/curve.hpp"
#include "cuspidal/multseq.hpp"

// Weighted dual resolution graphs for the two cusp families that occur on
// the curves here, and presentations of the fundamental groups of the
// complements.

namespace cuspidal {

struct GraphNode {
    std::string id;
    std::string label;
    long weight;

    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct DualGraph {
    std::vector<GraphNode> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    // Node the proper transform of the curve attaches to; empty for the
    // assembled curve graph, where the curve is itself a node.
    std::string curve_arrow;

    bool is_connected() const;

    friend bool operator==(const DualGraph&, const DualGraph&) = default;
};

/// Resolution graph of a cusp of type (m) (m >= 3) or (2_a); everything
/// else is UnsupportedFamily. The (2_1) shape is used for an ordinary cusp.
DualGraph cusp_dual_graph(const MultiplicitySequence& seq);

/// The total transform graph of the full curve: central node of weight
/// -(d-2) joined to the arrow nodes of the three cusp graphs.
DualGraph curve_dual_graph(const FamilyParams& params);

struct GroupPresentation {
    std::vector<std::string> generators;
    // Words over u, v with uppercase for inverses, freely reduced.
    std::vector<std::string> relators;
    int n;
    bool abelian;
    // nullopt when not derived (the abelian cases); otherwise the known
    // finite/infinite classification of the non-abelian groups.
    std::optional<bool> finite;

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Two-generator presentation of the fundamental group of the complement:
/// u (vu)^n = (vu)^n v and (vu)^(d-1) = v^(d-2), with
/// 2n + 1 = gcd(2a+1, 2b+1). Abelian exactly when n = 0.
GroupPresentation pi1_presentation(const FamilyParams& params);

/// Cancels adjacent inverse pairs until none remain.
std::string free_reduce(std::string word);

}  // namespace cuspidal
