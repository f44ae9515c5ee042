#include "ehrgraph/lattice_count.hpp"

#include "oracles.hpp"

#include <doctest.h>
#include <omp.h>

#include <algorithm>
#include <vector>

using namespace ehrgraph;

namespace {

std::vector<Int> closed_counts(const ConstraintPolytope& p, long t_max) {
    std::vector<Int> out;
    for (long t = 0; t <= t_max; ++t)
        out.push_back(count_points(p, t));
    return out;
}

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("path graph counting tables") {
    CHECK(closed_counts(from_graph(linear_graph(2)), 6) == ints({1, 3, 6, 10, 15, 21, 28}));
    CHECK(closed_counts(from_graph(linear_graph(3)), 6) == ints({1, 5, 14, 30, 55, 91, 140}));
    CHECK(closed_counts(from_graph(linear_graph(4)), 6) == ints({1, 8, 31, 85, 190, 371, 658}));
    CHECK(closed_counts(from_graph(linear_graph(5)), 6) == ints({1, 13, 70, 246, 671, 1547, 3164}));
    CHECK(closed_counts(from_graph(linear_graph(6)), 6) == ints({1, 21, 157, 707, 2353, 6405, 15106}));
}

TEST_CASE("cycle graph counting tables") {
    CHECK(closed_counts(from_graph(cycle_graph(3)), 6) == ints({1, 4, 11, 23, 42, 69, 106}));
    CHECK(closed_counts(from_graph(cycle_graph(5)), 6) == ints({1, 11, 57, 197, 533, 1223, 2494}));
    CHECK(closed_counts(from_graph(cycle_graph(6)), 4) == ints({1, 18, 129, 571, 1884}));
}

TEST_CASE("boundary dilations") {
    const auto p = from_graph(linear_graph(3));
    CHECK(count_points(p, 0) == 1);
    CHECK(count_points(p, 0, true) == 0);
    CHECK(count_points(p, 1, true) == 0);
    CHECK(count_points(p, 2, true) == 0); // k = 3: interior empty below t = k
    CHECK(count_points(p, 3, true) == 1);
}

TEST_CASE("parallel, serial, and brute-force enumeration agree") {
    std::vector<ConstraintPolytope> cases;
    cases.push_back(from_graph(linear_graph(2)));
    cases.push_back(from_graph(linear_graph(4)));
    cases.push_back(from_graph(cycle_graph(3)));
    cases.push_back(from_graph(complete_bipartite(2, 3)));
    cases.push_back(ConstraintPolytope::from_matrix({{2, 1}, {1, 2}}));
    for (const auto& p : cases)
        for (long t = 0; t <= 4; ++t)
            for (bool strict : {false, true}) {
                const Int fast = count_points(p, t, strict);
                CHECK(fast == count_points_serial(p, t, strict));
                CHECK(fast == oracle::naive_count(p, t, strict));
            }
}

TEST_CASE("dilated reflexive counts") {
    const auto p2 = from_graph(linear_graph(2));
    const DilatedReflexive q2 = dilate_reflexive(p2, *regularity(p2));
    CHECK(count_table_q(q2, 4).entries ==
          std::vector<std::pair<long, Int>>{{0, 1}, {1, 10}, {2, 28}, {3, 55}, {4, 91}});
    std::vector<Int> strict2;
    for (long t = 0; t <= 4; ++t)
        strict2.push_back(count_points_q(q2, t, true));
    CHECK(strict2 == ints({0, 1, 10, 28, 55}));

    const auto p3 = from_graph(linear_graph(3));
    const DilatedReflexive q3 = dilate_reflexive(p3, *regularity(p3));
    std::vector<Int> closed3;
    for (long t = 0; t <= 4; ++t)
        closed3.push_back(count_points_q(q3, t));
    CHECK(closed3 == ints({1, 30, 140, 385, 819}));

    for (const auto* q : {&q2, &q3})
        for (long t = 0; t <= 3; ++t)
            for (bool strict : {false, true}) {
                const Int fast = count_points_q(*q, t, strict);
                CHECK(fast == count_points_q_serial(*q, t, strict));
                CHECK(fast == oracle::naive_count_q(*q, t, strict));
            }
}

TEST_CASE("corrupting one stored right-hand side changes the counts") {
    const auto p = from_graph(linear_graph(2));
    DilatedReflexive q = dilate_reflexive(p, *regularity(p));
    q.rhs_rows[0] = 2;
    std::vector<Int> strict, closed;
    for (long t = 1; t <= 3; ++t)
        strict.push_back(count_points_q(q, t, true));
    for (long t = 0; t <= 2; ++t)
        closed.push_back(count_points_q(q, t));
    CHECK(strict == ints({3, 21, 55}));
    CHECK(closed == ints({1, 15, 45}));
    for (long t = 0; t <= 3; ++t)
        for (bool s : {false, true})
            CHECK(count_points_q(q, t, s) == oracle::naive_count_q(q, t, s));
}

TEST_CASE("counts multiply over disjoint unions") {
    const Graph two_paths = Graph::from_edges(4, {{1, 2}, {3, 4}});
    const auto joint = from_graph(two_paths);
    const auto part = from_graph(linear_graph(2));
    for (long t = 0; t <= 5; ++t)
        CHECK(count_points(joint, t) == count_points(part, t) * count_points(part, t));
}

TEST_CASE("counts are invariant under vertex relabeling") {
    const auto a = from_graph(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}));
    const auto b = from_graph(Graph::from_edges(4, {{3, 1}, {1, 4}, {4, 2}}));
    for (long t = 0; t <= 5; ++t) {
        CHECK(count_points(a, t) == count_points(b, t));
        CHECK(count_points(a, t, true) == count_points(b, t, true));
    }
}

TEST_CASE("weighted-graph counts") {
    const Graph edge_plus_isolated = Graph::from_edges(3, {{1, 2}});
    CHECK(count_weighted_graphs(edge_plus_isolated, 2) == 18); // 6 * (2+1)
    const Graph edgeless = Graph::from_edges(3, {});
    CHECK(count_weighted_graphs(edgeless, 4) == 125); // (4+1)^3
    const Graph p4 = linear_graph(4);
    for (long n = 0; n <= 5; ++n)
        CHECK(count_weighted_graphs(p4, n) == count_points(from_graph(p4), n));
}

TEST_CASE("thread count does not change results") {
    const auto p = from_graph(cycle_graph(5));
    const Int reference = count_points(p, 5);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(3);
    CHECK(count_points(p, 5) == reference);
    omp_set_num_threads(1);
    CHECK(count_points(p, 5) == reference);
    omp_set_num_threads(saved);
}

TEST_CASE("count tables index by dilation factor") {
    const auto table = count_table(from_graph(linear_graph(3)), 4);
    CHECK(table.at(0) == 1);
    CHECK(table.at(4) == 55);
    CHECK_THROWS_AS(table.at(5), std::out_of_range);
    CHECK(table.kind == CountKind::closed);
}

TEST_CASE("3-uniform hypergraph counts") {
    const Hypergraph tight_path = Hypergraph::from_edges(4, 3, {{1, 2, 3}, {2, 3, 4}});
    const auto p = from_hypergraph(tight_path);
    CHECK(closed_counts(p, 6) == ints({1, 6, 20, 50, 105, 196, 336}));
    std::vector<Int> interior;
    for (long t = 0; t <= 9; ++t)
        interior.push_back(count_points(p, t, true));
    CHECK(interior == ints({0, 0, 0, 0, 1, 6, 20, 50, 105, 196}));

    const auto single = from_hypergraph(Hypergraph::from_edges(3, 3, {{1, 2, 3}}));
    CHECK(closed_counts(single, 5) == ints({1, 4, 10, 20, 35, 56}));
    for (long t = 0; t <= 3; ++t)
        for (bool strict : {false, true})
            CHECK(count_points(p, t, strict) == oracle::naive_count(p, t, strict));
}
