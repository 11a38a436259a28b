#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hcz/graph.hpp"
#include "test_util.hpp"

using namespace hcz;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

TEST_CASE("construction validates input") {
    CHECK_THROWS(Graph::from_edges(2, {{0, 0}}));   // self-loop
    CHECK_THROWS(Graph::from_edges(2, {{0, 2}}));   // out of range
    CHECK_THROWS(Graph::from_edges(-1, {}));
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});  // duplicate collapses
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
}

TEST_CASE("neighbor lists are sorted and degree-consistent") {
    auto gen = testutil::rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_graph(10, 0.4, gen);
        int degsum = 0;
        for (int v = 0; v < 10; ++v) {
            const auto& nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            degsum += g.degree(v);
            for (int u : nb) CHECK(g.adjacent(u, v));
        }
        CHECK(degsum == 2 * g.edge_count());
    }
}

TEST_CASE("boundary on the 4-cycle") {
    Graph c4 = cycle(4);
    CHECK(boundary(c4, {0}) == VertexSet{1, 3});
    CHECK(boundary(c4, {0, 1}) == VertexSet{2, 3});
    CHECK(boundary(c4, {0, 1, 2, 3}) == VertexSet{});
    CHECK(boundary(c4, {}) == VertexSet{});
    CHECK_THROWS(boundary(c4, {3, 1}));   // not sorted
    CHECK_THROWS(boundary(c4, {0, 4}));   // out of range
}

TEST_CASE("boundary is disjoint from its argument and closed under neighbors") {
    auto gen = testutil::rng(12);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_graph(9, 0.35, gen);
        VertexSet u;
        for (int v = 0; v < 9; ++v)
            if (coin(gen) < 0.4) u.push_back(v);
        VertexSet b = boundary(g, u);
        for (int v : b) {
            CHECK(!std::binary_search(u.begin(), u.end(), v));
            bool touches = false;
            for (int w : g.neighbors(v)) touches |= std::binary_search(u.begin(), u.end(), w);
            CHECK(touches);
        }
        // Every outside vertex adjacent to u appears.
        for (int v = 0; v < 9; ++v) {
            if (std::binary_search(u.begin(), u.end(), v)) continue;
            bool touches = false;
            for (int w : g.neighbors(v)) touches |= std::binary_search(u.begin(), u.end(), w);
            CHECK(touches == std::binary_search(b.begin(), b.end(), v));
        }
    }
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
    Graph c6 = cycle(6);
    auto [h, map] = induced_subgraph(c6, {0, 1, 2, 4});
    CHECK(h.vertex_count() == 4);
    CHECK(map == VertexSet{0, 1, 2, 4});
    CHECK(h.edge_count() == 2);  // 0-1, 1-2 survive; 4 is isolated
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(1, 2));
    CHECK(h.degree(3) == 0);
}

TEST_CASE("components and connectivity") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4});
    CHECK(comps[2] == VertexSet{5});
    CHECK(!is_connected(g));
    CHECK(is_connected(cycle(5)));
    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("clique blow-up of the 4-cycle") {
    Graph b = blowup(cycle(4), 2, BlowupMode::Clique);
    CHECK(b.vertex_count() == 8);
    // Each vertex: 1 inside its class + 4 across the two adjacent classes.
    for (int v = 0; v < 8; ++v) CHECK(b.degree(v) == 5);
    CHECK(b.adjacent(0, 1));       // same class
    CHECK(b.adjacent(0, 2));       // adjacent classes fully joined
    CHECK(!b.adjacent(0, 4));      // classes 0 and 2 are not adjacent in C4
}

TEST_CASE("independent blow-up of the 4-cycle") {
    Graph b = blowup(cycle(4), 2, BlowupMode::Independent);
    CHECK(b.vertex_count() == 8);
    for (int v = 0; v < 8; ++v) CHECK(b.degree(v) == 4);
    CHECK(!b.adjacent(0, 1));      // class stays independent
    CHECK(b.adjacent(0, 2));
}

TEST_CASE("blow-up with one copy is the identity") {
    auto gen = testutil::rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_graph(8, 0.4, gen);
        CHECK(blowup(g, 1, BlowupMode::Clique) == g);
        CHECK(blowup(g, 1, BlowupMode::Independent) == g);
    }
    CHECK_THROWS(blowup(cycle(4), 0, BlowupMode::Clique));
}

TEST_CASE("vertex masks round-trip and set algebra") {
    VertexMask m(70);
    m.set(0);
    m.set(64);
    m.set(69);
    CHECK(m.count() == 3);
    CHECK(m.test(64));
    CHECK(!m.test(63));
    CHECK(m.first() == 0);
    CHECK(m.to_set() == std::vector<int>{0, 64, 69});
    VertexMask f = VertexMask::full(70);
    CHECK(f.count() == 70);
    CHECK(f.minus(m).count() == 67);
    CHECK(f.intersect(m) == m);
    CHECK(m.unite(f) == f);
    m.reset(64);
    CHECK(m.count() == 2);
    CHECK(mask_of({0, 69}, 70) == m);
}
