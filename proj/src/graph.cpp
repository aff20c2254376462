#include "pw1/graph.hpp"

#include <algorithm>

namespace pw1 {

Graph Graph::with_vertices(VertexId n, bool one_based) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    const VertexId first = one_based ? 1 : 0;
    g.adj_.resize(static_cast<std::size_t>(n + first));
    g.alive_.assign(static_cast<std::size_t>(n + first), 1);
    if (one_based) g.alive_[0] = 0;
    g.n_ = static_cast<std::size_t>(n);
    return g;
}

Graph Graph::from_edges(std::span<const VertexId> ids, std::span<const Edge> edges) {
    Graph g;
    for (VertexId v : ids) g.add_vertex(v);

    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (!g.contains(u) || !g.contains(v))
            throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " uses an unknown vertex");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    if (auto dup = std::adjacent_find(norm.begin(), norm.end()); dup != norm.end())
        throw InputError("parallel edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));

    for (auto [u, v] : norm) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = norm.size();
    return g;
}

Graph Graph::from_edges(VertexId n, std::span<const Edge> edges) {
    std::vector<VertexId> ids(static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i) ids[i] = i;
    return from_edges(ids, edges);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    checked(u);
    checked(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_);
    for (std::size_t v = 0; v < alive_.size(); ++v)
        if (alive_[v]) out.push_back(static_cast<VertexId>(v));
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t v = 0; v < alive_.size(); ++v) {
        if (!alive_[v]) continue;
        for (VertexId u : adj_[v])
            if (static_cast<VertexId>(v) < u) out.emplace_back(static_cast<VertexId>(v), u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexId Graph::add_vertex() {
    const VertexId id = next_id();
    adj_.emplace_back();
    alive_.push_back(1);
    ++n_;
    return id;
}

void Graph::add_vertex(VertexId id) {
    if (id < 0) throw InputError("negative vertex id");
    if (contains(id)) throw InputError("duplicate vertex id " + std::to_string(id));
    if (static_cast<std::size_t>(id) >= alive_.size()) {
        adj_.resize(static_cast<std::size_t>(id) + 1);
        alive_.resize(static_cast<std::size_t>(id) + 1, 0);
    }
    alive_[id] = 1;
    ++n_;
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
}

void Graph::erase_from_list(VertexId v, VertexId to_drop) {
    auto& a = adj_[checked(v)];
    auto it = std::find(a.begin(), a.end(), to_drop);
    if (it == a.end())
        throw InputError("vertex " + std::to_string(to_drop) + " is not a neighbor of " + std::to_string(v));
    *it = a.back();
    a.pop_back();
}

void Graph::remove_edge(VertexId u, VertexId v) {
    checked(v);
    erase_from_list(u, v);
    erase_from_list(v, u);
    --m_;
}

void Graph::remove_vertex(VertexId v) {
    for (VertexId u : adj_[checked(v)]) {
        auto& a = adj_[u];
        a.erase(std::find(a.begin(), a.end(), v));
    }
    m_ -= adj_[v].size();
    adj_[v].clear();
    adj_[v].shrink_to_fit();
    alive_[v] = 0;
    --n_;
}

void Graph::remove_vertices(std::span<const VertexId> vs) {
    std::vector<VertexId> dirty;
    for (VertexId v : vs) {
        checked(v);
        if (alive_[v] == 2) throw InputError("vertex " + std::to_string(v) + " listed twice for removal");
        alive_[v] = 2;  // marked for removal
    }
    std::size_t removed_edges = 0;
    for (VertexId v : vs) {
        for (VertexId u : adj_[v]) {
            if (alive_[u] == 1 || alive_[u] == 3) {
                if (alive_[u] == 1) dirty.push_back(u);
                alive_[u] = 3;  // survivor with a neighbor to drop
                ++removed_edges;
            } else if (v < u) {
                ++removed_edges;  // both endpoints go; count once
            }
        }
    }
    for (VertexId u : dirty) {
        auto& a = adj_[u];
        a.erase(std::remove_if(a.begin(), a.end(), [&](VertexId w) { return alive_[w] == 2; }), a.end());
        alive_[u] = 1;
    }
    for (VertexId v : vs) {
        adj_[v].clear();
        adj_[v].shrink_to_fit();
        alive_[v] = 0;
    }
    n_ -= vs.size();
    m_ -= removed_edges;
}

void Graph::retarget(VertexId u, VertexId from, VertexId to) {
    auto& a = adj_[checked(u)];
    auto it = std::find(a.begin(), a.end(), from);
    if (it == a.end())
        throw InputError("vertex " + std::to_string(from) + " is not a neighbor of " + std::to_string(u));
    *it = to;
}

void Graph::check_invariants() const {
    std::size_t half_edges = 0;
    std::size_t live = 0;
    for (std::size_t v = 0; v < alive_.size(); ++v) {
        if (!alive_[v]) {
            if (!adj_[v].empty()) throw InternalError("dead vertex keeps adjacency");
            continue;
        }
        ++live;
        std::vector<VertexId> a(adj_[v].begin(), adj_[v].end());
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw InternalError("parallel edge at " + std::to_string(v));
        for (VertexId u : a) {
            if (u == static_cast<VertexId>(v)) throw InternalError("self-loop at " + std::to_string(v));
            if (!contains(u)) throw InternalError("edge to dead vertex " + std::to_string(u));
            const auto& b = adj_[u];
            if (std::find(b.begin(), b.end(), static_cast<VertexId>(v)) == b.end())
                throw InternalError("asymmetric adjacency " + std::to_string(v) + "-" + std::to_string(u));
        }
        half_edges += a.size();
    }
    if (live != n_ || half_edges != 2 * m_) throw InternalError("vertex or edge count out of sync");
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.next_id() != b.next_id() || a.n_ != b.n_ || a.m_ != b.m_) return false;
    for (std::size_t v = 0; v < a.alive_.size(); ++v) {
        if ((a.alive_[v] != 0) != (b.alive_[v] != 0)) return false;
        if (!a.alive_[v]) continue;
        std::vector<VertexId> x(a.adj_[v].begin(), a.adj_[v].end()), y(b.adj_[v].begin(), b.adj_[v].end());
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    return true;
}

std::vector<VertexId> VertexSet::to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count_);
    for (std::size_t v = 0; v < bits_.size(); ++v)
        if (bits_[v]) out.push_back(static_cast<VertexId>(v));
    return out;
}

}  // namespace pw1
