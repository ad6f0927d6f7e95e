#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "spectra/families.hpp"
#include "spectra/graph.hpp"

using namespace spectra;

namespace {

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(10);
    CHECK(s.empty());
    CHECK(s.first() == -1);
    s.insert(3);
    s.insert(7);
    s.insert(3);
    CHECK(s.count() == 2);
    CHECK(s.contains(3));
    CHECK(!s.contains(4));
    CHECK(s.first() == 3);
    s.erase(3);
    CHECK(!s.contains(3));
    CHECK(s.count() == 1);

    CHECK_THROWS_AS(s.insert(10), std::out_of_range);
    CHECK_THROWS_AS(s.insert(-1), std::out_of_range);
    CHECK_THROWS_AS(s.erase(12), std::out_of_range);
}

TEST_CASE("vertex set algebra") {
    VertexSet a(70, {0, 1, 64, 69});
    VertexSet b(70, {1, 2, 64});
    CHECK((a & b) == VertexSet(70, {1, 64}));
    CHECK((a | b) == VertexSet(70, {0, 1, 2, 64, 69}));
    CHECK((a - b) == VertexSet(70, {0, 69}));
    CHECK(a.intersects(b));
    CHECK(!VertexSet(70, {5}).intersects(b));
    CHECK(VertexSet(70, {1, 64}).is_subset_of(a));
    CHECK(!a.is_subset_of(b));

    VertexSet full = VertexSet::full(70);
    CHECK(full.count() == 70);
    CHECK(full.contains(69));
    CHECK(a.complement().count() == 66);
    CHECK((a.complement() & a).empty());

    VertexSet other(60);
    CHECK_THROWS_AS(a |= other, std::invalid_argument);
    CHECK_THROWS_AS((void)a.intersects(other), std::invalid_argument);
}

TEST_CASE("vertex set ordering by sorted members") {
    VertexSet a(70, {0, 2});
    VertexSet b(70, {0, 3});
    VertexSet c(70, {1});
    CHECK(a.precedes(b));
    CHECK(!b.precedes(a));
    CHECK(b.precedes(c));  // 0 < 1 decides before length does
    CHECK(!a.precedes(a));

    // {65} vs {65,66}: shorter prefix comes first
    VertexSet d(70, {65});
    VertexSet e(70, {65, 66});
    CHECK(d.precedes(e));
    CHECK(!e.precedes(d));
}

TEST_CASE("vertex set iteration crosses word boundaries") {
    VertexSet s(130, {0, 63, 64, 127, 129});
    CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 127, 129});
    CHECK(s.to_string() == "{0,63,64,127,129}");
    CHECK(VertexSet(5).to_string() == "{}");
}

TEST_CASE("graph construction validates and dedupes") {
    Graph g(4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(g.adjacency(4), std::out_of_range);

    Graph empty;
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);
    CHECK(min_degree(empty) == 0);
}

TEST_CASE("degrees, leaves and supports") {
    Graph g = attach_leaf(cycle_graph(5), 2);
    CHECK(min_degree(g) == 1);
    CHECK(is_leaf(g, 5));
    CHECK(!is_leaf(g, 2));
    CHECK(g.degree(2) == 3);
    CHECK(support_vertices(g) == VertexSet(6, {2}));
    CHECK(min_degree(cycle_graph(8)) == 2);
}

TEST_CASE("closed neighborhoods and reductions") {
    Graph c7 = cycle_graph(7);
    CHECK(closed_neighborhood(c7, 0) == VertexSet(7, {0, 1, 6}));
    CHECK(closed_neighborhood(c7, VertexSet(7, {0, 3})) ==
          VertexSet(7, {0, 1, 2, 3, 4, 6}));

    InducedSubgraph left = remove_closed_neighborhood(c7, VertexSet(7, {0}));
    CHECK(left.graph.vertex_count() == 4);
    CHECK(left.vertex_map == std::vector<int>{2, 3, 4, 5});
    CHECK(is_path_graph(left.graph));

    // removing N[I] for I = {0,3} on C_7 leaves the single vertex 5
    InducedSubgraph tiny = remove_closed_neighborhood(c7, VertexSet(7, {0, 3}));
    CHECK(tiny.graph.vertex_count() == 1);
    CHECK(tiny.vertex_map == std::vector<int>{5});
}

TEST_CASE("induced subgraph keeps the right edges") {
    Graph g = complete_multipartite({2, 3});
    InducedSubgraph sub = induced_subgraph(g, VertexSet(5, {0, 1, 2}));
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);  // 0-2 and 1-2 survive, 0-1 never existed
    CHECK(sub.vertex_map == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(induced_subgraph(g, VertexSet(4)), std::invalid_argument);
}

TEST_CASE("components come out ordered by smallest member") {
    Graph g = disjoint_union(path_graph(2), disjoint_union(Graph(1), cycle_graph(3)));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet(6, {0, 1}));
    CHECK(comps[1] == VertexSet(6, {2}));
    CHECK(comps[2] == VertexSet(6, {3, 4, 5}));
    CHECK(!is_connected(g));
    CHECK(is_connected(cycle_graph(4)));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph()));
}

TEST_CASE("distance to a set") {
    Graph g = disjoint_union(path_graph(5), path_graph(2));
    CHECK(distance_to_set(g, 0, VertexSet(7, {4})) == 4);
    CHECK(distance_to_set(g, 1, VertexSet(7, {4})) == 3);
    CHECK(distance_to_set(g, 3, VertexSet(7, {3, 0})) == 0);
    CHECK(distance_to_set(g, 5, VertexSet(7, {0})) == std::nullopt);
    CHECK_THROWS_AS(distance_to_set(g, 0, VertexSet(7)), std::invalid_argument);
    CHECK_THROWS_AS(distance_to_set(g, 9, VertexSet(7, {0})), std::out_of_range);
}

TEST_CASE("girth of named graphs") {
    for (int n = 3; n <= 64; ++n) {
        CAPTURE(n);
        CHECK(girth(cycle_graph(n)) == n);
    }
    CHECK(girth(petersen()) == 5);
    Graph k245 = complete_multipartite({2, 4, 5});
    CHECK(k245.edge_count() == 38);
    CHECK(girth(k245) == 3);
    CHECK(girth(path_graph(9)) == std::nullopt);
    CHECK(girth(Graph(3)) == std::nullopt);
    CHECK(girth(theta_graph(3, 4, 4)) == 7);
    CHECK(girth(theta_graph(1, 2, 2)) == 3);
}

TEST_CASE("girth agrees with the edge-deletion oracle on random graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1) ? 0.4 : 0.7;
        Graph g = oracle::random_graph(rng, n, p);
        CAPTURE(trial);
        CAPTURE(n);
        CHECK(girth(g) == oracle::brute_girth(g));
    }
}

TEST_CASE("shortest cycle is a lexicographically smallest girth cycle") {
    auto c14 = shortest_cycle(cycle_graph(14));
    REQUIRE(c14.has_value());
    CHECK(*c14 == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});

    auto t = shortest_cycle(theta_graph(4, 4, 4));
    REQUIRE(t.has_value());
    CHECK(*t == std::vector<int>{0, 2, 3, 4, 1, 7, 6, 5});

    CHECK(shortest_cycle(path_graph(6)) == std::nullopt);

    std::mt19937 rng(7);
    int cyclic_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(rng, n, 0.35);
        auto cyc = shortest_cycle(g);
        auto glen = girth(g);
        CAPTURE(trial);
        REQUIRE(cyc.has_value() == glen.has_value());
        if (!cyc) {
            continue;
        }
        ++cyclic_seen;
        REQUIRE(static_cast<int>(cyc->size()) == *glen);
        for (std::size_t i = 0; i < cyc->size(); ++i) {
            CHECK(g.adjacent((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
        }
        // canonical orientation: starts at its smallest vertex, and the
        // second vertex beats the last
        int start = (*cyc)[0];
        for (int v : *cyc) {
            CHECK(start <= v);
        }
        CHECK((*cyc)[1] < cyc->back());
    }
    CHECK(cyclic_seen > 50);
}

TEST_CASE("independence predicates") {
    Graph c5 = cycle_graph(5);
    CHECK(is_independent(c5, VertexSet(5, {0, 2})));
    CHECK(!is_independent(c5, VertexSet(5, {0, 1})));
    CHECK(is_independent(c5, VertexSet(5)));
    CHECK(is_maximal_independent(c5, VertexSet(5, {0, 2})));
    CHECK(!is_maximal_independent(c5, VertexSet(5, {0})));
    CHECK(!is_maximal_independent(c5, VertexSet(5, {0, 1})));
}

TEST_CASE("path and cycle recognizers") {
    CHECK(is_path_graph(path_graph(1)));
    CHECK(is_path_graph(path_graph(6)));
    CHECK(!is_path_graph(cycle_graph(4)));
    CHECK(!is_path_graph(disjoint_union(path_graph(2), path_graph(2))));
    CHECK(!is_path_graph(Graph()));
    CHECK(is_cycle_graph(cycle_graph(3)));
    CHECK(is_cycle_graph(cycle_graph(12)));
    CHECK(!is_cycle_graph(path_graph(3)));
    CHECK(!is_cycle_graph(disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK(!is_cycle_graph(theta_graph(2, 2, 2)));
}

TEST_CASE("relabeling preserves structure") {
    std::mt19937 rng(99);
    Graph graphs[] = {petersen(), attach_leaf(cycle_graph(9), 4),
                      complete_multipartite({1, 2, 3}),
                      disjoint_union(path_graph(4), cycle_graph(5))};
    for (const Graph& g : graphs) {
        for (int rep = 0; rep < 10; ++rep) {
            auto perm = oracle::random_permutation(rng, g.vertex_count());
            Graph h = relabeled(g, perm);
            CHECK(h.edge_count() == g.edge_count());
            CHECK(girth(h) == girth(g));
            CHECK(min_degree(h) == min_degree(g));

            std::multiset<int> sizes_g, sizes_h;
            for (const auto& c : connected_components(g)) {
                sizes_g.insert(c.count());
            }
            for (const auto& c : connected_components(h)) {
                sizes_h.insert(c.count());
            }
            CHECK(sizes_g == sizes_h);
            for (auto [u, v] : g.edges()) {
                CHECK(h.adjacent(perm[static_cast<std::size_t>(u)],
                                 perm[static_cast<std::size_t>(v)]));
            }
        }
    }
    CHECK_THROWS_AS(relabeled(path_graph(3), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(relabeled(path_graph(3), {0, 1, 1}), std::invalid_argument);
}
