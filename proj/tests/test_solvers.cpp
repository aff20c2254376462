#include <doctest.h>

#include "fixtures.hpp"
#include "pw1/oracle.hpp"
#include "pw1/pove.hpp"
#include "pw1/povs.hpp"
#include "pw1/recognition.hpp"
#include "pw1/tovs.hpp"

using namespace pw1;

namespace {

SolveOptions with_witness() {
    SolveOptions o;
    o.want_witness = true;
    return o;
}

SolveOptions minimizing() {
    SolveOptions o;
    o.minimize = true;
    return o;
}

}  // namespace

TEST_CASE("pove decisions") {
    const SolveResult t = solve_pove(fx::inst(fx::t2(), Problem::POVE, 1), with_witness());
    CHECK(t.yes);
    REQUIRE(t.witness);
    CHECK(std::get<ExplosionSet>(*t.witness).members == std::vector<VertexId>{1});

    CHECK_FALSE(solve_pove(fx::inst(fx::complete(4), Problem::POVE, 1)).yes);
    CHECK(solve_pove(fx::inst(fx::complete(4), Problem::POVE, 2)).yes);
    CHECK_FALSE(solve_pove(fx::inst(fx::cycle(5), Problem::POVE, 5, std::vector<VertexId>{})).yes);
    CHECK_THROWS_AS(solve_pove(fx::inst(fx::cycle(5), Problem::POVS, 1)), InputError);
}

TEST_CASE("pove minimum") {
    CHECK(solve_pove(fx::inst(fx::cycle(5), Problem::POVE, 0), minimizing()).minimum == 1);
    CHECK(solve_pove(fx::inst(fx::complete(4), Problem::POVE, 0), minimizing()).minimum == 2);
    CHECK_FALSE(solve_pove(fx::inst(fx::cycle(5), Problem::POVE, 0, std::vector<VertexId>{}), minimizing()).yes);
}

TEST_CASE("pove witnesses survive kernel lifting") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        oracle::GeneratorParams p;
        p.n = 60;
        p.extra_edges = 3;
        p.s_fraction = 0.8;
        p.seed = seed;
        p.budget = 3;
        const Instance in = oracle::generate(p);
        const SolveResult kern = solve_pove(in, with_witness());
        SolveOptions raw = with_witness();
        raw.use_kernel = false;
        const SolveResult plain = solve_pove(in, raw);
        CHECK(kern.yes == plain.yes);
        if (kern.yes) CHECK(verify_witness(in, *kern.witness).ok);
        if (plain.yes) CHECK(verify_witness(in, *plain.witness).ok);
    }
}

TEST_CASE("branching node budget") {
    for (int k = 0; k <= 3; ++k) {
        const PoveBranchResult r = branch_pove(fx::inst(fx::complete(6), Problem::POVE, k));
        std::uint64_t bound = 1;
        for (int i = 0; i < k; ++i) bound *= 4;
        CHECK(r.nodes <= bound);
        const PovsBranchResult s = branch_povs(fx::inst(fx::complete(5), Problem::POVS, k));
        std::uint64_t sbound = 1;
        for (int i = 0; i < k; ++i) sbound *= static_cast<std::uint64_t>(6 * k + 12);
        CHECK(s.nodes <= sbound);
    }
}

TEST_CASE("povs decisions") {
    const SolveResult t = solve_povs(fx::inst(fx::t2(), Problem::POVS, 1, std::vector<VertexId>{1}), with_witness());
    CHECK(t.yes);
    REQUIRE(t.witness);
    const auto& steps = std::get<SplitSequence>(*t.witness).steps;
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].vertex == 1);
    REQUIRE(steps[0].moved.size() == 1);
    CHECK((steps[0].moved[0] >= 2 && steps[0].moved[0] <= 4));

    CHECK(solve_povs(fx::inst(fx::cycle(5), Problem::POVS, 1)).yes);
    CHECK_FALSE(solve_povs(fx::inst(fx::t2(), Problem::POVS, 10, std::vector<VertexId>{})).yes);
}

TEST_CASE("povs minimum") {
    CHECK(solve_povs(fx::inst(fx::cycle(5), Problem::POVS, 0), minimizing()).minimum == 1);
    CHECK(solve_povs(fx::inst(fx::t2(), Problem::POVS, 0), minimizing()).minimum == 1);
}

TEST_CASE("bipartite gadget: one deletion, two explosions, three splits") {
    // K_{2,4} with the two-vertex side splittable, found by searching small bipartite graphs
    // with the oracle.
    const Graph g = fx::k24();
    bool one_deletion = false;
    for (VertexId v : g.vertices()) {
        Graph h = g;
        h.remove_vertex(v);
        one_deletion = one_deletion || has_pathwidth_le_one(h);
    }
    CHECK(one_deletion);
    CHECK_FALSE(has_pathwidth_le_one(g));

    const std::vector<VertexId> side{1, 2};
    const Instance e = fx::inst(g, Problem::POVE, 0, side);
    const Instance s = fx::inst(g, Problem::POVS, 0, side);
    CHECK(oracle::brute_pove(e) == 2);
    CHECK(oracle::brute_povs(s, 4) == 3);
    CHECK(solve_pove(e, minimizing()).minimum == 2);
    CHECK(solve_povs(s, minimizing()).minimum == 3);
}

TEST_CASE("tovs") {
    CHECK(min_splits_to_forest(fx::t2()) == 0);
    CHECK(min_splits_to_forest(fx::cycle(5)) == 1);
    CHECK(min_splits_to_forest(fx::theta()) == 2);
    CHECK(oracle::brute_tovs(fx::inst(fx::theta(), Problem::TOVS, 0), 3) == 2);

    CHECK_FALSE(solve_tovs(fx::inst(fx::cycle(5), Problem::TOVS, 100, std::vector<VertexId>{})).yes);

    const SolveResult c = solve_tovs(fx::inst(fx::cycle(5), Problem::TOVS, 1, std::vector<VertexId>{1}), with_witness());
    CHECK(c.yes);
    REQUIRE(c.witness);
    const auto& steps = std::get<SplitSequence>(*c.witness).steps;
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].vertex == 1);

    const std::vector<VertexId> hub{1};
    const Instance th2 = fx::inst(fx::theta(), Problem::TOVS, 2, hub);
    const SolveResult y = solve_tovs(th2, with_witness());
    CHECK(y.yes);
    CHECK(verify_witness(th2, *y.witness).ok);
    CHECK_FALSE(solve_tovs(fx::inst(fx::theta(), Problem::TOVS, 1, hub)).yes);
    CHECK(solve_tovs(fx::inst(fx::theta(), Problem::TOVS, 0, hub), minimizing()).minimum == 2);
}
