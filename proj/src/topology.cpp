#include "cuspidal/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cuspidal {

bool DualGraph::is_connected() const {
    if (nodes.empty()) return true;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& n : nodes) adj[n.id];
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::set<std::string> seen{nodes.front().id};
    std::vector<std::string> stack{nodes.front().id};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        for (const auto& next : adj[cur])
            if (seen.insert(next).second) stack.push_back(next);
    }
    return seen.size() == nodes.size();
}

namespace {

std::string exc_label(int i, long weight) {
    return "E_" + std::to_string(i) + " (" + std::to_string(weight) + ")";
}

void add_node(DualGraph& g, const std::string& prefix, int i, long weight) {
    g.nodes.push_back(GraphNode{prefix + "E" + std::to_string(i), exc_label(i, weight), weight});
}

std::string node_id(const std::string& prefix, int i) {
    return prefix + "E" + std::to_string(i);
}

// Chain E_1(-2) ... E_{a-1}(-2), E_a(-3), E_{a+2}(-1) with E_{a+1}(-2)
// hanging off E_{a+2}; the branch arrow sits at E_{a+2}.
DualGraph even_cusp_graph(int a, const std::string& prefix) {
    DualGraph g;
    for (int i = 1; i < a; ++i) add_node(g, prefix, i, -2);
    add_node(g, prefix, a, -3);
    add_node(g, prefix, a + 1, -2);
    add_node(g, prefix, a + 2, -1);
    for (int i = 1; i < a; ++i) g.edges.emplace_back(node_id(prefix, i), node_id(prefix, i + 1));
    g.edges.emplace_back(node_id(prefix, a), node_id(prefix, a + 2));
    g.edges.emplace_back(node_id(prefix, a + 1), node_id(prefix, a + 2));
    g.curve_arrow = node_id(prefix, a + 2);
    return g;
}

// Chain E_2(-2) ... E_{m-1}(-2), E_m(-1) with E_1(-m) hanging off E_m; the
// arrow sits at E_m.
DualGraph max_cusp_graph(int m, const std::string& prefix) {
    DualGraph g;
    add_node(g, prefix, 1, -m);
    for (int i = 2; i < m; ++i) add_node(g, prefix, i, -2);
    add_node(g, prefix, m, -1);
    for (int i = 2; i + 1 <= m; ++i)
        g.edges.emplace_back(node_id(prefix, i), node_id(prefix, i + 1));
    g.edges.emplace_back(node_id(prefix, m), node_id(prefix, 1));
    g.curve_arrow = node_id(prefix, m);
    return g;
}

DualGraph cusp_graph_with_prefix(const MultiplicitySequence& seq, const std::string& prefix) {
    const auto compact = seq.compact_form();
    if (!compact)
        throw UnsupportedFamily("dual graph only available for (m) and (2_a) cusps; got " +
                                seq.str());
    const auto [m, a] = *compact;
    if (m == 2) return even_cusp_graph(a, prefix);
    if (a == 1) return max_cusp_graph(m, prefix);
    throw UnsupportedFamily("dual graph only available for (m) and (2_a) cusps; got " +
                            seq.str());
}

}  // namespace

DualGraph cusp_dual_graph(const MultiplicitySequence& seq) {
    return cusp_graph_with_prefix(seq, "");
}

DualGraph curve_dual_graph(const FamilyParams& params) {
    DualGraph g;
    const long central_weight = -(params.d - 2);
    g.nodes.push_back(GraphNode{"C", "C~ (" + std::to_string(central_weight) + ")",
                                central_weight});

    const MultiplicitySequence central =
        canonicalize("(" + std::to_string(params.d - 2) + ")");
    const MultiplicitySequence cusp_a = canonicalize("(2_" + std::to_string(params.a) + ")");
    const MultiplicitySequence cusp_b = canonicalize("(2_" + std::to_string(params.b) + ")");

    const std::array<std::pair<const MultiplicitySequence*, std::string>, 3> parts = {
        std::make_pair(&central, std::string("c0_")),
        std::make_pair(&cusp_a, std::string("ca_")),
        std::make_pair(&cusp_b, std::string("cb_"))};

    for (const auto& [seq, prefix] : parts) {
        DualGraph sub = cusp_graph_with_prefix(*seq, prefix);
        g.nodes.insert(g.nodes.end(), sub.nodes.begin(), sub.nodes.end());
        g.edges.insert(g.edges.end(), sub.edges.begin(), sub.edges.end());
        g.edges.emplace_back(sub.curve_arrow, "C");
    }
    return g;
}

std::string free_reduce(std::string word) {
    auto inverse_of = [](char c) -> char {
        if (c >= 'a' && c <= 'z') return static_cast<char>(c - 'a' + 'A');
        return static_cast<char>(c - 'A' + 'a');
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i + 1] == inverse_of(word[i])) {
                word.erase(i, 2);
                changed = true;
                break;
            }
        }
    }
    return word;
}

GroupPresentation pi1_presentation(const FamilyParams& params) {
    const int g = static_cast<int>(std::gcd(2 * params.a + 1, 2 * params.b + 1));
    const int n = (g - 1) / 2;
    const int d = params.d;

    std::string vu_n;
    for (int i = 0; i < n; ++i) vu_n += "vu";
    std::string vu_n_inv;
    for (int i = 0; i < n; ++i) vu_n_inv += "UV";

    // u (vu)^n v^-1 (vu)^-n
    std::string r1 = free_reduce("u" + vu_n + "V" + vu_n_inv);

    // (vu)^(d-1) v^-(d-2)
    std::string r2;
    for (int i = 0; i < d - 1; ++i) r2 += "vu";
    r2 += std::string(static_cast<std::size_t>(d - 2), 'V');
    r2 = free_reduce(r2);

    GroupPresentation pres{{"u", "v"}, {r1, r2}, n, n == 0, std::nullopt};
    if (!pres.abelian)
        pres.finite = (d == 4 && n == 1) || (d == 7 && n == 1);
    return pres;
}

}  // namespace cuspidal
