#include "ehrgraph/graph.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace ehrgraph;

namespace {

template <typename Fn>
std::string thrown_message(Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "(no exception)";
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("edges are sorted, deduplicated, validated") {
    Graph g = Graph::from_edges(4, {{3, 1}, {1, 2}, {2, 1}, {3, 4}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {3, 4}});
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(4) == 1);

    CHECK(contains(thrown_message([] { Graph::from_edges(3, {{2, 2}}); }), "loop at vertex 2"));
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), std::invalid_argument);
}

TEST_CASE("builders") {
    const Graph p4 = linear_graph(4);
    CHECK(p4.vertex_count == 4);
    CHECK(p4.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});

    const Graph c4 = cycle_graph(4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.degree(1) == 2);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

    const Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.vertex_count == 5);
    CHECK(k23.edge_count() == 6);
}

TEST_CASE("isolated vertices and connectivity") {
    Graph g = Graph::from_edges(5, {{1, 2}, {4, 5}});
    CHECK(g.isolated_vertices() == std::vector<int>{3});
    CHECK_FALSE(g.is_connected());
    CHECK(linear_graph(6).is_connected());
    CHECK(Graph::from_edges(1, {}).is_connected());
}

TEST_CASE("bipartition exists exactly for odd-cycle-free graphs") {
    CHECK(bipartition(linear_graph(5)).has_value());
    CHECK(bipartition(cycle_graph(6)).has_value());
    CHECK_FALSE(bipartition(cycle_graph(3)).has_value());
    CHECK_FALSE(bipartition(cycle_graph(5)).has_value());

    const auto bp = bipartition(linear_graph(3));
    REQUIRE(bp.has_value());
    CHECK(bp->side(1) == Side::A);
    CHECK(bp->side(2) == Side::B);
    CHECK(bp->side(3) == Side::A);
}

TEST_CASE("incidence matrix columns sum to 2, column order follows edges") {
    const Graph g = linear_graph(3);
    const auto b = incidence_matrix(g);
    REQUIRE(b.size() == 3);
    REQUIRE(b[0].size() == 2);
    CHECK(b == std::vector<std::vector<int>>{{1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("edge list parsing with line-number diagnostics") {
    std::istringstream good("4\n# comment\n1 2\n\n2 3\n3 4\n");
    const Graph g = parse_graph(good);
    CHECK(g.vertex_count == 4);
    CHECK(g.edge_count() == 3);

    const std::string range_msg = thrown_message([] {
        std::istringstream in("3\n0 3\n");
        parse_graph(in);
    });
    CHECK(contains(range_msg, "line 2"));
    CHECK(contains(range_msg, "1..3"));

    std::istringstream junk("3\n1 x\n");
    CHECK_THROWS_AS(parse_graph(junk), std::runtime_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_graph(empty), std::runtime_error);
}

TEST_CASE("hypergraph parsing and incidence") {
    std::istringstream in("4 3\n1 2 3\n2 3 4\n");
    const Hypergraph h = parse_hypergraph(in);
    CHECK(h.vertex_count == 4);
    CHECK(h.uniformity == 3);
    CHECK(h.edge_count() == 2);
    const auto b = incidence_matrix(h);
    for (size_t j = 0; j < 2; ++j) {
        int col = 0;
        for (const auto& row : b)
            col += row[j];
        CHECK(col == 3);
    }

    std::istringstream dup("3 3\n1 2 2\n");
    CHECK_THROWS_AS(parse_hypergraph(dup), std::invalid_argument);
    std::istringstream short_edge("4 3\n1 2\n");
    CHECK_THROWS_AS(parse_hypergraph(short_edge), std::runtime_error);
}

TEST_CASE("graph files load from disk") {
    const std::string path = std::string(TEST_DATA_DIR) + "/path4.txt";
    const Graph g = load_graph(path);
    CHECK(g.vertex_count == 4);
    CHECK(g.edges == linear_graph(4).edges);
    CHECK_THROWS_AS(load_graph("/nonexistent/file.txt"), std::runtime_error);
}
