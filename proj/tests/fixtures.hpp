#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "pw1/edit_ops.hpp"

namespace fx {

using pw1::Edge;
using pw1::Graph;
using pw1::Instance;
using pw1::Problem;
using pw1::VertexId;

// All fixtures use ids 1..n, like parsed instances.
inline Graph graph(VertexId n, std::initializer_list<Edge> edges) {
    const std::vector<Edge> es(edges);
    std::vector<VertexId> ids;
    for (VertexId v = 1; v <= n; ++v) ids.push_back(v);
    return Graph::from_edges(ids, es);
}

inline Graph from_list(VertexId n, const std::vector<Edge>& es) {
    std::vector<VertexId> ids;
    for (VertexId v = 1; v <= n; ++v) ids.push_back(v);
    return Graph::from_edges(ids, es);
}

inline Graph path(VertexId n) {
    std::vector<Edge> es;
    for (VertexId v = 1; v < n; ++v) es.emplace_back(v, v + 1);
    return from_list(n, es);
}

inline Graph cycle(VertexId n) {
    std::vector<Edge> es;
    for (VertexId v = 1; v < n; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(1, n);
    return from_list(n, es);
}

inline Graph complete(VertexId n) {
    std::vector<Edge> es;
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v) es.emplace_back(u, v);
    return from_list(n, es);
}

// Center 1, leaves 2..k+1.
inline Graph star(VertexId k) {
    std::vector<Edge> es;
    for (VertexId v = 2; v <= k + 1; ++v) es.emplace_back(1, v);
    return from_list(k + 1, es);
}

// Center 1, midpoints 2 3 4, ends 5 6 7.
inline Graph t2() { return graph(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}}); }

// Hubs 1 and 2 joined through 3, 4 and 5.
inline Graph theta() { return graph(5, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}}); }

// Center 1 with `legs` paths of length two.
inline Graph spider(VertexId legs) {
    std::vector<Edge> es;
    for (VertexId i = 0; i < legs; ++i) {
        es.emplace_back(1, 2 + 2 * i);
        es.emplace_back(2 + 2 * i, 3 + 2 * i);
    }
    return from_list(1 + 2 * legs, es);
}

// K_{2,4} with sides {1,2} and {3,4,5,6}.
inline Graph k24() {
    return graph(6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}});
}

// S = all vertices unless given.
inline Instance inst(Graph g, Problem p, int k, std::optional<std::vector<VertexId>> s = std::nullopt) {
    Instance out;
    out.problem = p;
    out.budget = k;
    if (s) {
        for (VertexId v : *s) out.splittable.insert(v);
    } else {
        for (VertexId v : g.vertices()) out.splittable.insert(v);
    }
    out.graph = std::move(g);
    return out;
}

}  // namespace fx
