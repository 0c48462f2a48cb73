#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "cuspidal/invariants.hpp"
#include "cuspidal/serialize.hpp"
#include "cuspidal/topology.hpp"

using namespace cuspidal;

namespace {

long graph_square(const DualGraph& g) {
    // (sum of components)^2 = sum of weights + 2 * (edges inside the graph)
    long total = 0;
    for (const auto& node : g.nodes) total += node.weight;
    return total + 2 * static_cast<long>(g.edges.size());
}

int count_weight(const DualGraph& g, long w) {
    return static_cast<int>(
        std::count_if(g.nodes.begin(), g.nodes.end(),
                      [&](const GraphNode& n) { return n.weight == w; }));
}

const GraphNode& node_by_id(const DualGraph& g, const std::string& id) {
    for (const auto& n : g.nodes)
        if (n.id == id) return n;
    throw std::runtime_error("missing node " + id);
}

}  // namespace

TEST_CASE("dual graph of a maximal-multiplicity cusp") {
    const DualGraph g = cusp_dual_graph(canonicalize("(3)"));
    REQUIRE(g.nodes.size() == 3);
    CHECK(node_by_id(g, "E1").weight == -3);
    CHECK(node_by_id(g, "E2").weight == -2);
    CHECK(node_by_id(g, "E3").weight == -1);
    REQUIRE(g.edges.size() == 2);
    CHECK(std::find(g.edges.begin(), g.edges.end(),
                    std::make_pair(std::string("E2"), std::string("E3"))) != g.edges.end());
    CHECK(std::find(g.edges.begin(), g.edges.end(),
                    std::make_pair(std::string("E3"), std::string("E1"))) != g.edges.end());
    CHECK(g.curve_arrow == "E3");
    CHECK(g.is_connected());
}

TEST_CASE("dual graph of the even-cusp family") {
    {
        // a = 1 degenerates to the three-node picture
        const DualGraph g = cusp_dual_graph(canonicalize("(2)"));
        REQUIRE(g.nodes.size() == 3);
        CHECK(node_by_id(g, "E1").weight == -3);
        CHECK(node_by_id(g, "E2").weight == -2);
        CHECK(node_by_id(g, "E3").weight == -1);
        CHECK(g.curve_arrow == "E3");
    }
    {
        const DualGraph g = cusp_dual_graph(canonicalize("(2_3)"));
        REQUIRE(g.nodes.size() == 5);  // a + 2
        CHECK(node_by_id(g, "E1").weight == -2);
        CHECK(node_by_id(g, "E2").weight == -2);
        CHECK(node_by_id(g, "E3").weight == -3);
        CHECK(node_by_id(g, "E4").weight == -2);
        CHECK(node_by_id(g, "E5").weight == -1);
        CHECK(g.curve_arrow == "E5");
        CHECK(g.edges.size() == 4);
        CHECK(g.is_connected());
    }
}

TEST_CASE("graphs outside the two families are rejected") {
    CHECK_THROWS_AS(cusp_dual_graph(canonicalize("4,2,2,1,1,1")), UnsupportedFamily);
    CHECK_THROWS_AS(cusp_dual_graph(canonicalize("3,3")), UnsupportedFamily);
    CHECK_THROWS_AS(cusp_dual_graph(MultiplicitySequence::smooth()), UnsupportedFamily);
}

TEST_CASE("every cusp graph has exactly one -1 node and is connected") {
    for (int a = 1; a <= 8; ++a) {
        const DualGraph g = cusp_dual_graph(canonicalize("(2_" + std::to_string(a) + ")"));
        CHECK(count_weight(g, -1) == 1);
        CHECK(g.is_connected());
        for (const auto& node : g.nodes) CHECK(node.weight < 0);
    }
    for (int m = 3; m <= 9; ++m) {
        const DualGraph g = cusp_dual_graph(canonicalize("(" + std::to_string(m) + ")"));
        CHECK(count_weight(g, -1) == 1);
        CHECK(g.is_connected());
        for (const auto& node : g.nodes) CHECK(node.weight < 0);
    }
}

TEST_CASE("reduced exceptional square read off the graph") {
    // For the even-cusp pictures the graph square equals -omega - 1.
    for (int a = 1; a <= 8; ++a) {
        const MultiplicitySequence seq = canonicalize("(2_" + std::to_string(a) + ")");
        const DualGraph g = cusp_dual_graph(seq);
        CHECK(graph_square(g) == -invariants_of(seq).omega - 1);
    }
    // The printed maximal-multiplicity picture is one blow-up short of the
    // minimal embedded resolution; its square comes out as -omega instead.
    for (int m = 3; m <= 9; ++m) {
        const MultiplicitySequence seq = canonicalize("(" + std::to_string(m) + ")");
        const DualGraph g = cusp_dual_graph(seq);
        CHECK(graph_square(g) == -invariants_of(seq).omega);
        CHECK(static_cast<int>(g.nodes.size()) == m);
    }
}

TEST_CASE("assembled curve graph") {
    {
        const DualGraph g = curve_dual_graph(FamilyParams(4, 1));
        CHECK(g.nodes.size() == 10);  // central + three 3-node cusp graphs
        CHECK(node_by_id(g, "C").weight == -2);
        CHECK(g.curve_arrow.empty());
        CHECK(g.is_connected());
        CHECK(count_weight(g, -1) == 3);
    }
    {
        const DualGraph g = curve_dual_graph(FamilyParams(5, 2));
        CHECK(node_by_id(g, "C").weight == -3);
        CHECK(g.is_connected());
    }
    for (int d = 4; d <= 9; ++d) {
        for (const auto& params : enumerate_degree(d)) {
            const DualGraph g = curve_dual_graph(params);
            const CurveSingularityData data(
                d, {canonicalize("(" + std::to_string(d - 2) + ")"),
                    canonicalize("(2_" + std::to_string(params.a) + ")"),
                    canonicalize("(2_" + std::to_string(params.b) + ")")});
            CHECK(node_by_id(g, "C").weight == curve_numerics(data).c_tilde_sq);
            CHECK(g.is_connected());
            CHECK(count_weight(g, -1) == 3);
        }
    }
}

TEST_CASE("free reduction") {
    CHECK(free_reduce("uU") == "");
    CHECK(free_reduce("uvVU") == "");
    CHECK(free_reduce("uvuVUV") == "uvuVUV");
    CHECK(free_reduce("vuUv") == "vv");
}

TEST_CASE("fundamental group presentations") {
    {
        const GroupPresentation p = pi1_presentation(FamilyParams(4, 1));
        CHECK(p.n == 1);
        CHECK_FALSE(p.abelian);
        CHECK(p.finite == std::optional<bool>(true));
        REQUIRE(p.relators.size() == 2);
        CHECK(p.relators[0] == "uvuVUV");
        CHECK(p.relators[1] == "vuvuvuVV");
        for (const auto& r : p.relators) CHECK(free_reduce(r) == r);
    }
    {
        const GroupPresentation p = pi1_presentation(FamilyParams(5, 2));
        CHECK(p.n == 0);  // gcd(5, 3) = 1
        CHECK(p.abelian);
        CHECK_FALSE(p.finite.has_value());
        CHECK(p.relators[0] == "uV");
    }
    {
        const GroupPresentation p = pi1_presentation(FamilyParams(7, 4));
        // gcd(9, 3) = 3, n = 1, the second finite non-abelian group
        CHECK(p.n == 1);
        CHECK_FALSE(p.abelian);
        CHECK(p.finite == std::optional<bool>(true));
    }
    {
        const GroupPresentation p = pi1_presentation(FamilyParams(10, 7));
        // gcd(15, 3) = 3, n = 1, d = 10: infinite non-abelian
        CHECK(p.n == 1);
        CHECK_FALSE(p.abelian);
        CHECK(p.finite == std::optional<bool>(false));
    }
}

TEST_CASE("the two degree-13 curves share one group") {
    const GroupPresentation g1 = pi1_presentation(FamilyParams(13, 7));
    const GroupPresentation g2 = pi1_presentation(FamilyParams(13, 10));
    CHECK(g1.n == 1);
    CHECK(g1 == g2);
}

TEST_CASE("presentation symmetric in the two even cusps") {
    // n depends on {a, b} only through gcd(2a+1, 2b+1)
    for (int d = 4; d <= 12; ++d)
        for (const auto& params : enumerate_degree(d)) {
            const int g1 = std::gcd(2 * params.a + 1, 2 * params.b + 1);
            const int g2 = std::gcd(2 * params.b + 1, 2 * params.a + 1);
            CHECK(g1 == g2);
            CHECK(pi1_presentation(params).n == (g1 - 1) / 2);
        }
}
