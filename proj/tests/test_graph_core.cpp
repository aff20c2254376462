#include <doctest.h>

#include "fixtures.hpp"
#include "pw1/recognition.hpp"

using namespace pw1;

TEST_CASE("graph construction rejects loops, duplicates and unknown ids") {
    CHECK_THROWS_AS(fx::graph(2, {{1, 1}}), InputError);
    CHECK_THROWS_AS(fx::graph(2, {{1, 2}, {2, 1}}), InputError);
    CHECK_THROWS_AS(fx::graph(2, {{1, 3}}), InputError);
    Graph g = fx::path(3);
    CHECK_THROWS_AS(g.add_edge(1, 2), InputError);
    CHECK_THROWS_AS(g.degree(9), InputError);
}

TEST_CASE("graph ids are stable and never reused") {
    Graph g = fx::path(4);
    CHECK(g.next_id() == 5);
    g.remove_vertex(2);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 1);
    CHECK_FALSE(g.contains(2));
    CHECK(g.add_vertex() == 5);
    CHECK(g.vertices() == std::vector<VertexId>{1, 3, 4, 5});
    g.check_invariants();
}

TEST_CASE("batch removal matches one-at-a-time removal") {
    Graph a = fx::complete(6), b = fx::complete(6);
    const std::vector<VertexId> gone{2, 5};
    a.remove_vertices(gone);
    b.remove_vertex(2);
    b.remove_vertex(5);
    CHECK(a == b);
    CHECK(a.num_edges() == 6);
    const std::vector<VertexId> dup{1, 1};
    CHECK_THROWS_AS(a.remove_vertices(dup), InputError);
}

TEST_CASE("degree star") {
    const Graph p3 = fx::path(3);
    CHECK(degree_star(p3, 2) == 0);
    const Graph c4 = fx::cycle(4);
    for (VertexId v = 1; v <= 4; ++v) CHECK(degree_star(c4, v) == 2);
    CHECK(degree_star(fx::t2(), 1) == 3);
}

TEST_CASE("potential") {
    const Graph k4 = fx::complete(4);
    for (VertexId v = 1; v <= 4; ++v) CHECK(potential(k4, v) == 1);
    CHECK(global_potential(k4) == 4);
    CHECK(global_potential(fx::path(8)) == 0);
    const Graph cat = fx::graph(7, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}, {3, 7}});
    CHECK(global_potential(cat) == 0);
    CHECK(potential(fx::t2(), 1) == 1);
    CHECK(global_potential(fx::t2()) == 1);
}

TEST_CASE("component classification") {
    const Graph p4 = fx::path(4);
    const auto kp = classify_component(p4, p4.vertices());
    CHECK(kp.shape == ComponentShape::Caterpillar);
    CHECK(kp.spine == std::vector<VertexId>{1, 2, 3, 4});

    const Graph c6 = fx::cycle(6);
    CHECK(classify_component(c6, c6.vertices()).shape == ComponentShape::PseudoCaterpillar);

    const Graph k4 = fx::complete(4);
    CHECK(classify_component(k4, k4.vertices()).shape == ComponentShape::Other);
    CHECK(classify_component(fx::t2(), fx::t2().vertices()).shape == ComponentShape::Other);

    const std::vector<VertexId> part{1, 2};
    CHECK_THROWS_AS(classify_component(p4, part), InputError);

    const Graph two = fx::graph(4, {{1, 2}, {3, 4}});
    const auto all = classify_components(two);
    REQUIRE(all.size() == 2);
    CHECK(all[0].kind.shape == ComponentShape::Caterpillar);
}

TEST_CASE("find_n2") {
    const auto t = find_n2(fx::t2());
    REQUIRE(t);
    CHECK(t->root == 1);
    CHECK_FALSE(find_n2(fx::path(9)));
    const Graph cat = fx::graph(7, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}, {3, 7}});
    CHECK_FALSE(find_n2(cat));
    const auto k = find_n2(fx::complete(4));
    REQUIRE(k);
    CHECK(k->root == 1);
}

TEST_CASE("find_t2") {
    const auto t = find_t2(fx::t2());
    REQUIRE(t);
    CHECK(t->center == 1);
    CHECK_FALSE(find_t2(fx::complete(4)));
    // N2 rooted at 1 but no T2 subgraph: K4 minus an edge, and C4 with a tail of length two.
    const Graph diamond = fx::graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
    CHECK(find_n2(diamond));
    CHECK_FALSE(find_t2(diamond));
    const Graph sun = fx::graph(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {5, 6}});
    CHECK(find_n2(sun));
    CHECK_FALSE(find_t2(sun));
}

TEST_CASE("pathwidth at most one, every method") {
    for (PathwidthMethod m : kAllPathwidthMethods) {
        CHECK(has_pathwidth_le_one(fx::path(5), m));
        CHECK_FALSE(has_pathwidth_le_one(fx::cycle(4), m));
        CHECK_FALSE(has_pathwidth_le_one(fx::t2(), m));
        CHECK(has_pathwidth_le_one(Graph{}, m));
    }
}

TEST_CASE("acyclicity and components") {
    CHECK(is_acyclic(fx::t2()));
    CHECK_FALSE(is_acyclic(fx::cycle(3)));
    CHECK(count_components(fx::graph(4, {{1, 2}, {3, 4}})) == 2);
}
