#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "spectra/families.hpp"
#include "spectra/graph.hpp"

using namespace spectra;

TEST_CASE("paths and cycles") {
    CHECK(path_graph(1).vertex_count() == 1);
    CHECK(path_graph(1).edge_count() == 0);
    Graph p5 = path_graph(5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.degree(0) == 1);
    CHECK(p5.degree(2) == 2);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);

    Graph c6 = cycle_graph(6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.adjacent(5, 0));
    CHECK(min_degree(c6) == 2);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("complete multipartite") {
    Graph k245 = complete_multipartite({2, 4, 5});
    CHECK(k245.vertex_count() == 11);
    CHECK(k245.edge_count() == 38);  // 2*4 + 2*5 + 4*5
    CHECK(!k245.adjacent(0, 1));     // same part
    CHECK(k245.adjacent(0, 2));
    CHECK(k245.adjacent(5, 6));      // parts 1 and 2

    Graph k33 = complete_multipartite({3, 3});
    CHECK(k33.edge_count() == 9);
    CHECK(girth(k33) == 4);

    Graph k4 = complete_multipartite({1, 1, 1, 1});
    CHECK(k4.edge_count() == 6);

    CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("attaching leaves and paths") {
    Graph g = attach_leaf(cycle_graph(4), 1);
    CHECK(g.vertex_count() == 5);
    CHECK(g.adjacent(1, 4));
    CHECK(g.degree(4) == 1);

    Graph h = attach_path(cycle_graph(4), 0, 3);
    CHECK(h.vertex_count() == 7);
    CHECK(h.edge_count() == 7);
    CHECK(h.adjacent(0, 4));
    CHECK(h.adjacent(4, 5));
    CHECK(h.adjacent(5, 6));
    CHECK(h.degree(6) == 1);

    CHECK_THROWS_AS(attach_leaf(cycle_graph(4), 7), std::invalid_argument);
    CHECK_THROWS_AS(attach_path(cycle_graph(4), 0, 0), std::invalid_argument);
}

TEST_CASE("decorated cycle has the advertised order and girth") {
    for (int g = 3; g <= 10; ++g) {
        for (int t = 2; t <= 5; ++t) {
            CAPTURE(g);
            CAPTURE(t);
            Graph h = decorated_cycle(g, t);
            CHECK(h.vertex_count() == 2 * g + 5 * t - 7);
            CHECK(girth(h) == g);
            CHECK(min_degree(h) == 1);
            CHECK(is_connected(h));
            // every cycle vertex carries its own leaf
            for (int v = 0; v < g; ++v) {
                CHECK(h.adjacent(v, g + v));
                CHECK(h.degree(g + v) == 1);
            }
        }
    }
    CHECK_THROWS_AS(decorated_cycle(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(decorated_cycle(5, 1), std::invalid_argument);
}

TEST_CASE("decorated cycle tail layout") {
    // g=3, t=3: tail of three vertices 6,7,8 hanging off vertex 0, leaves
    // 9.. distributed two per odd tail position and one per even
    Graph h = decorated_cycle(3, 3);
    CHECK(h.vertex_count() == 14);
    CHECK(h.adjacent(0, 6));
    CHECK(h.adjacent(6, 7));
    CHECK(h.adjacent(7, 8));
    CHECK(h.degree(6) == 4);  // 0, 7, two leaves
    CHECK(h.degree(7) == 3);  // 6, 8, one leaf
    CHECK(h.degree(8) == 3);  // 7, two leaves
}

TEST_CASE("theta graphs") {
    Graph t344 = theta_graph(3, 4, 4);
    CHECK(t344.vertex_count() == 3 + 4 + 4 - 1);
    CHECK(t344.edge_count() == 11);
    CHECK(t344.degree(0) == 3);
    CHECK(t344.degree(1) == 3);
    CHECK(girth(t344) == 7);

    Graph t122 = theta_graph(1, 2, 2);
    CHECK(t122.vertex_count() == 4);
    CHECK(t122.adjacent(0, 1));
    CHECK(girth(t122) == 3);

    CHECK_THROWS_AS(theta_graph(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(theta_graph(0, 2, 2), std::invalid_argument);
}

TEST_CASE("disjoint unions shift the second operand") {
    Graph g = disjoint_union(cycle_graph(3), path_graph(2));
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(3, 4));
    CHECK(!g.adjacent(2, 3));
    CHECK(connected_components(g).size() == 2);

    Graph e = disjoint_union(Graph(), cycle_graph(3));
    CHECK(e.vertex_count() == 3);
    CHECK(e.edge_count() == 3);
}
