#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pw1/edit_ops.hpp"

namespace pw1::oracle {

// Dense graph on vertices 0..n-1 (n <= 64), one adjacency bitmask per vertex. Deliberately
// shares no code with Graph or the recognition routines.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    static SmallGraph empty(int n);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1U; }
    int degree(int v) const;
    int num_edges() const;

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

// Compacts ids in ascending order; throws InputError beyond 64 vertices. `order` receives the
// original id of each small vertex.
SmallGraph to_small(const Graph& g, std::vector<VertexId>* order = nullptr);
Graph to_graph(const SmallGraph& g);

// Every component is a tree whose non-leaf vertices form a path.
bool is_caterpillar_forest(const SmallGraph& g);
bool is_forest(const SmallGraph& g);

// Exact minima. nullopt means infeasible (pove) or not reachable within `cap` steps.
std::optional<int> brute_pove(const Instance& inst);
// Splits move one or two edges; `unrestricted` allows any proper subset (use for n <= 5).
std::optional<int> brute_povs(const Instance& inst, int cap, bool unrestricted = false);
std::optional<int> brute_povs_single_edge(const Instance& inst, int cap);
std::optional<int> brute_tovs(const Instance& inst, int cap, bool two_edge = false);

// All 2^(n(n-1)/2) labeled graphs on 0..n-1, by edge bitmask order.
void for_each_labeled_graph(int n, const std::function<void(const SmallGraph&)>& fn);
// One representative per isomorphism class (n <= 8), in a fixed order.
std::vector<SmallGraph> graph_classes(int n);
// Exact canonical form (n <= 11): the least upper-triangle encoding over all relabelings that
// respect a degree-based vertex ordering.
std::uint64_t canonical_code(const SmallGraph& g);

struct GeneratorParams {
    int n = 10;
    int extra_edges = 0;
    double s_fraction = 1.0;
    std::uint64_t seed = 1;
    int budget = 0;
    Problem problem = Problem::POVE;
};

// A random caterpillar forest on n vertices, plus extra_edges random new edges, with each
// vertex joining S with probability s_fraction. Identical output for identical params.
Instance generate(const GeneratorParams& params);

// A uniformly random labeled graph with edge probability p.
SmallGraph random_small_graph(int n, double p, std::uint64_t seed);

// Random S masks used by the census: all, empty, then `random_count` seeded masks.
std::vector<std::uint64_t> census_masks(int n, int random_count, std::uint64_t seed);

}  // namespace pw1::oracle
