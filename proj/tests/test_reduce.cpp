#include <doctest.h>

#include <algorithm>
#include <bit>

#include "fixtures.hpp"
#include "pw1/oracle.hpp"
#include "pw1/recognition.hpp"
#include "pw1/reduce.hpp"

using namespace pw1;

namespace {

bool oracle_yes(const Instance& inst) {
    std::optional<int> best;
    if (inst.problem == Problem::POVE) best = oracle::brute_pove(inst);
    else best = oracle::brute_povs(inst, inst.budget);
    return best && *best <= inst.budget;
}

bool reduced_yes(const ReductionOutcome& r) { return r.verdict == Verdict::Open && oracle_yes(r.reduced); }

void check_replay(const Instance& in, const ReductionOutcome& r) {
    const Instance again = replay_trace(in, r.trace);
    CHECK(again.graph == r.reduced.graph);
    CHECK(again.splittable == r.reduced.splittable);
    CHECK(again.budget == r.reduced.budget);
}

// A 12-cycle with S2 = {2, 6, 10}; vertices 4, 8 and 12 each carry a splittable branch
// vertex with two pendants, so the super-vertices are {1,11,12}, {3,4,5} and {7,8,9}.
Instance enclosed_ring(int k) {
    std::vector<Edge> es;
    for (VertexId v = 1; v < 12; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(1, 12);
    const VertexId hubs[3] = {4, 8, 12};
    for (int i = 0; i < 3; ++i) {
        const VertexId b = 13 + 3 * i;
        es.emplace_back(hubs[i], b);
        es.emplace_back(b, b + 1);
        es.emplace_back(b, b + 2);
    }
    return fx::inst(fx::from_list(21, es), Problem::POVE, k, std::vector<VertexId>{2, 6, 10, 13, 16, 19});
}

}  // namespace

TEST_CASE("pendant rule keeps one pendant per vertex") {
    const Instance s = fx::inst(fx::star(5), Problem::POVE, 1);
    const ReductionOutcome r = rr_pendant(s);
    CHECK(r.reduced.graph.vertices() == std::vector<VertexId>{1, 2});
    CHECK(r.reduced.graph.num_edges() == 1);
    check_replay(s, r);

    const Instance p = fx::inst(fx::path(5), Problem::POVE, 1);
    CHECK(rr_pendant(p).reduced.graph == p.graph);
    CHECK(rr_pendant(p).trace.empty());

    for (Problem prob : {Problem::POVE, Problem::POVS}) {
        for (int k = 0; k <= 2; ++k) {
            const Instance c = fx::inst(
                fx::graph(7, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {1, 6}, {1, 7}}), prob, k);
            const ReductionOutcome red = rr_pendant(c);
            CHECK(red.reduced.graph.num_vertices() == 5);
            CHECK(reduced_yes(red) == oracle_yes(c));
        }
    }
}

TEST_CASE("caterpillar and pseudo-caterpillar components") {
    std::vector<Edge> es;
    for (VertexId v = 1; v < 6; ++v) es.emplace_back(v, v + 1);
    es.insert(es.end(), {{7, 8}, {8, 9}, {9, 10}, {7, 10}});
    const Instance in = fx::inst(fx::from_list(10, es), Problem::POVE, 1);
    const ReductionOutcome a = rr_caterpillar(in);
    CHECK(a.reduced.graph.num_vertices() == 4);
    const ReductionOutcome b = rr_pseudo_caterpillar(a.reduced);
    CHECK(b.verdict == Verdict::Open);
    CHECK(b.reduced.graph.num_vertices() == 0);
    CHECK(b.reduced.budget == 0);
    check_replay(a.reduced, b);

    const Instance unsplittable = fx::inst(fx::graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}}), Problem::POVE, 3,
                                           std::vector<VertexId>{5});
    CHECK(rr_pseudo_caterpillar(unsplittable).verdict == Verdict::TrivialNo);

    std::vector<Edge> two;
    for (VertexId v = 1; v <= 5; ++v) two.emplace_back(v, v % 5 + 1);
    for (VertexId v = 6; v <= 10; ++v) two.emplace_back(v, v == 10 ? 6 : v + 1);
    const Instance cycles = fx::inst(fx::from_list(10, two), Problem::POVS, 1);
    const ReductionOutcome c = rr_pseudo_caterpillar(cycles);
    CHECK(c.verdict == Verdict::TrivialNo);
    CHECK(c.rule == "pseudo-caterpillar");
}

TEST_CASE("non-adjacent rule on a run of splittable cycle vertices") {
    const Instance in = fx::inst(fx::cycle(8), Problem::POVE, 1, std::vector<VertexId>{1, 2, 3, 4});
    const ReductionOutcome r = rr_non_adjacent(in);
    CHECK(r.reduced.splittable.to_vector() == std::vector<VertexId>{4});
    CHECK(r.reduced.graph == in.graph);
    // Fixpoint: no 2-enclosed member of S is next to a degree*-2 member of S.
    const Graph& g = r.reduced.graph;
    for (VertexId v : r.reduced.splittable.to_vector()) {
        if (!is_two_enclosed(g, v)) continue;
        for (VertexId u : g.neighbors(v)) CHECK_FALSE((r.reduced.splittable.contains(u) && degree_star(g, u) == 2));
    }
    const Instance none = fx::inst(fx::complete(4), Problem::POVE, 2);
    CHECK(rr_non_adjacent(none).trace.empty());
    check_replay(in, r);
}

TEST_CASE("two-enclosed classification on a ring of super-vertices") {
    const Instance in = enclosed_ring(4);
    const TwoEnclosedClassification c = classify_two_enclosed(in);
    CHECK(c.s2 == std::vector<VertexId>{2, 6, 10});
    CHECK(c.s_explode == std::vector<VertexId>{10});
    CHECK(c.s_keep == std::vector<VertexId>{2, 6});
    CHECK(c.aux_vertices == std::vector<VertexId>{1, 2, 3, 6, 7, 10});
    CHECK(c.aux_edges.size() == 6);
    CHECK(c.forest_edges.size() == 5);

    const Instance plain = fx::inst(fx::complete(4), Problem::POVE, 2);
    const TwoEnclosedClassification e = classify_two_enclosed(plain);
    CHECK(e.s2.empty());
    CHECK(e.s_explode.empty());
    CHECK(e.s_keep.empty());
}

TEST_CASE("two-enclosed rule preserves the decision") {
    for (int k : {3, 4}) {
        const Instance in = enclosed_ring(k);
        const ReductionOutcome r = rr_two_enclosed(in);
        CHECK(reduced_yes(r) == oracle_yes(in));
        check_replay(in, r);
    }
    CHECK(oracle::brute_pove(enclosed_ring(0)) == 4);

    // One splittable vertex on a 6-cycle is a spanning-forest leaf and gets exploded.
    const Instance c6 = fx::inst(fx::cycle(6), Problem::POVE, 1, std::vector<VertexId>{1});
    const ReductionOutcome r = rr_two_enclosed(c6);
    CHECK(r.reduced.budget == 0);
    CHECK(is_acyclic(r.reduced.graph));
    CHECK_FALSE(r.reduced.graph.contains(1));
    check_replay(c6, r);

    const Instance none = fx::inst(fx::t2(), Problem::POVE, 1);
    CHECK(rr_two_enclosed(none).reduced.graph == none.graph);
}

TEST_CASE("two-enclosed rule shortens long induced paths") {
    // Two K4 blocks joined by a path of ten vertices, nothing on the path splittable.
    std::vector<Edge> es;
    for (VertexId u = 1; u <= 4; ++u)
        for (VertexId v = u + 1; v <= 4; ++v) {
            es.emplace_back(u, v);
            es.emplace_back(u + 14, v + 14);
        }
    es.emplace_back(4, 5);
    for (VertexId v = 5; v < 14; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(14, 15);
    const Instance in = fx::inst(fx::from_list(18, es), Problem::POVE, 4, std::vector<VertexId>{1, 2, 3, 4, 15, 16, 17, 18});
    const ReductionOutcome r = rr_two_enclosed(in);
    const Graph& g = r.reduced.graph;
    std::size_t interior = 0;
    for (VertexId v : g.vertices())
        if (v >= 5 && v <= 14) ++interior;
    CHECK(interior <= 2);
    for (VertexId v : g.vertices()) CHECK_FALSE(is_two_enclosed(g, v));
    check_replay(in, r);
}

TEST_CASE("degree-one rule shortens a caterpillar tail") {
    // K4 on 1..4 with a tail 1-5-6-7 and a pendant 8 on the tip.
    const Graph g = fx::graph(8, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {5, 6}, {6, 7}, {7, 8}});
    for (Problem prob : {Problem::POVE, Problem::POVS}) {
        for (int k = 1; k <= 2; ++k) {
            const Instance in = fx::inst(g, prob, k);
            const ReductionOutcome r = rr_deg1(in);
            CHECK(r.reduced.graph.num_vertices() < in.graph.num_vertices());
            for (const EditRecord& rec : r.trace) {
                CHECK(rec.added.first != kNoVertex);
                CHECK_FALSE(in.graph.has_edge(rec.added.first, rec.added.second));
            }
            CHECK(reduced_yes(r) == oracle_yes(in));
            check_replay(in, r);
        }
    }
    const Instance c = fx::inst(fx::cycle(5), Problem::POVE, 1);
    CHECK(rr_deg1(c).trace.empty());
}

TEST_CASE("explode-k rule") {
    for (int k = 0; k <= 2; ++k) {
        const Instance in = fx::inst(fx::spider(k + 3), Problem::POVE, k);
        const ReductionOutcome r = rr_explode_k(in);
        if (k == 0) {
            CHECK(r.verdict == Verdict::TrivialNo);
            continue;
        }
        CHECK(r.verdict == Verdict::Open);
        CHECK_FALSE(r.reduced.graph.contains(1));
        CHECK(r.reduced.budget == k - 1);
        check_replay(in, r);

        std::vector<VertexId> legs;
        for (VertexId v = 2; v <= 2 * (k + 3) + 1; ++v) legs.push_back(v);
        const Instance blocked = fx::inst(fx::spider(k + 3), Problem::POVE, k, legs);
        CHECK(rr_explode_k(blocked).verdict == Verdict::TrivialNo);
    }
}

TEST_CASE("global potential rules") {
    const Graph k4 = fx::complete(4);
    CHECK(rr_global_pove(fx::inst(k4, Problem::POVE, 1)).verdict == Verdict::Open);  // 4 == 2k^2 + 2k
    CHECK(rr_global_pove(fx::inst(k4, Problem::POVE, 0)).verdict == Verdict::TrivialNo);
    CHECK(rr_global_povs(fx::inst(k4, Problem::POVS, 1)).verdict == Verdict::TrivialNo);
    CHECK(rr_global_povs(fx::inst(k4, Problem::POVS, 2)).verdict == Verdict::Open);
    CHECK(rr_global_povs(fx::inst(fx::path(9), Problem::POVS, 0)).verdict == Verdict::Open);
    CHECK(rr_global_pove(fx::inst(fx::path(9), Problem::POVE, 0)).verdict == Verdict::Open);
}

TEST_CASE("kernels of caterpillar forests are empty") {
    const Graph g = fx::graph(9, {{1, 2}, {2, 3}, {2, 4}, {5, 6}, {6, 7}, {7, 8}, {7, 9}});
    for (Problem prob : {Problem::POVE, Problem::POVS}) {
        const Instance in = fx::inst(g, prob, 3);
        const ReductionOutcome r = prob == Problem::POVE ? kernelize_pove(in) : kernelize_povs(in);
        CHECK(r.verdict == Verdict::Open);
        CHECK(r.reduced.graph.num_vertices() == 0);
        CHECK(r.reduced.budget == 3);
    }
}

TEST_CASE("kernel size bounds on generated yes-instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        oracle::GeneratorParams p;
        p.n = 300;
        p.extra_edges = 2;
        p.s_fraction = 0.7;
        p.seed = seed;
        p.budget = 2;
        p.problem = Problem::POVE;
        const Instance a = oracle::generate(p);
        const ReductionOutcome ka = kernelize_pove(a);
        if (ka.verdict == Verdict::Open) {
            CHECK(ka.reduced.graph.num_vertices() <= 16u * 2 * 2 + 16 * 2);
            check_replay(a, ka);
        }
        p.problem = Problem::POVS;
        p.budget = 3;
        const Instance b = oracle::generate(p);
        const ReductionOutcome kb = kernelize_povs(b);
        if (kb.verdict == Verdict::Open) {
            CHECK(kb.reduced.graph.num_vertices() <= 16u * 3);
            check_replay(b, kb);
        }
    }
}

TEST_CASE("kernels decide like the oracle on small graphs") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& sg : oracle::graph_classes(n)) {
            const Graph g = oracle::to_graph(sg);
            for (std::uint64_t mask : oracle::census_masks(n, 2, 99)) {
                std::vector<VertexId> s;
                const auto ids = g.vertices();
                for (int i = 0; i < n; ++i)
                    if ((mask >> i) & 1U) s.push_back(ids[static_cast<std::size_t>(i)]);
                for (int k = 0; k <= 2; ++k) {
                    const Instance e = fx::inst(g, Problem::POVE, k, s);
                    const ReductionOutcome ke = kernelize_pove(e);
                    CHECK(reduced_yes(ke) == oracle_yes(e));
                    const Instance p = fx::inst(g, Problem::POVS, k, s);
                    CHECK(reduced_yes(kernelize_povs(p)) == oracle_yes(p));
                }
            }
        }
    }
}

TEST_CASE("lifting an explosion set through the kernel") {
    const Instance in = enclosed_ring(4);
    const ReductionOutcome r = kernelize_pove(in);
    REQUIRE(r.verdict == Verdict::Open);
    const auto best = oracle::brute_pove(r.reduced);
    REQUIRE(best);
    // Recover one minimum reduced witness by trying every subset of the reduced S.
    const auto s = r.reduced.splittable.to_vector();
    REQUIRE(s.size() <= 16);
    for (std::uint32_t m = 0; m < (1U << s.size()); ++m) {
        if (std::popcount(m) != *best) continue;
        ExplosionSet w;
        for (std::size_t i = 0; i < s.size(); ++i)
            if ((m >> i) & 1U) w.members.push_back(s[i]);
        if (!has_pathwidth_le_one(apply_explosion_set(r.reduced, w))) continue;
        const ExplosionSet lifted = lift_explosion_set(r.trace, w);
        CHECK(verify_witness(in, lifted).ok);
        break;
    }
}
