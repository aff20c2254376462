#include "pw1/tovs.hpp"

#include <numeric>

#include "pw1/recognition.hpp"

namespace pw1 {

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    VertexId find(VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }

    std::vector<VertexId> parent;
};

}  // namespace

std::size_t min_splits_to_forest(const Graph& g) {
    return g.num_edges() + count_components(g) - g.num_vertices();
}

SolveResult solve_tovs(const Instance& inst, const SolveOptions& opts) {
    if (inst.problem != Problem::TOVS) throw InputError("solve_tovs needs a tovs instance");
    inst.validate();
    const Graph& g = inst.graph;
    const auto edges = g.edges();

    // Edges inside G - S first: if they close a cycle the instance is infeasible. Every later
    // edge that closes a cycle has a splittable endpoint and is cut off there.
    DisjointSets dsu(static_cast<std::size_t>(g.next_id()));
    std::vector<Edge> cut;
    for (auto [u, v] : edges)
        if (!inst.splittable.contains(u) && !inst.splittable.contains(v) && !dsu.unite(u, v)) return {};
    for (auto [u, v] : edges) {
        if (!inst.splittable.contains(u) && !inst.splittable.contains(v)) continue;
        if (!dsu.unite(u, v)) cut.emplace_back(u, v);
    }

    SolveResult res;
    const int need = static_cast<int>(cut.size());
    if (opts.minimize) {
        res.minimum = need;
    } else if (need > inst.budget) {
        return res;
    }
    res.yes = true;
    if (opts.want_witness) {
        SplitSequence seq;
        for (auto [u, v] : cut) {
            // u < v; split at the lower splittable endpoint, moving the edge away from it.
            if (inst.splittable.contains(u)) seq.steps.push_back({u, {v}});
            else seq.steps.push_back({v, {u}});
        }
        res.witness = std::move(seq);
    }
    return res;
}

}  // namespace pw1
