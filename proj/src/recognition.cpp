#include "pw1/recognition.hpp"

#include <algorithm>
#include <functional>

namespace pw1 {

std::size_t degree_star(const Graph& g, VertexId v) {
    std::size_t d = 0;
    for (VertexId u : g.neighbors(v))
        if (g.degree(u) > 1) ++d;
    return d;
}

std::size_t potential(const Graph& g, VertexId v) {
    const std::size_t d = degree_star(g, v);
    return d > 2 ? d - 2 : 0;
}

std::size_t global_potential(const Graph& g) {
    std::size_t mu = 0;
    for (VertexId v = 0; v < g.next_id(); ++v)
        if (g.contains(v)) mu += potential(g, v);
    return mu;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    // Label by search, then bucket in id order so every component comes out sorted.
    const auto n = static_cast<std::size_t>(g.next_id());
    std::vector<std::uint32_t> label(n, UINT32_MAX);
    std::vector<std::uint32_t> sizes;
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < g.next_id(); ++s) {
        if (!g.contains(s) || label[s] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(sizes.size());
        queue.assign(1, s);
        label[s] = id;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (VertexId u : g.neighbors(queue[i])) {
                if (label[u] == UINT32_MAX) {
                    label[u] = id;
                    queue.push_back(u);
                }
            }
        }
        sizes.push_back(static_cast<std::uint32_t>(queue.size()));
    }
    std::vector<std::vector<VertexId>> out(sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c) out[c].reserve(sizes[c]);
    for (VertexId v = 0; v < g.next_id(); ++v)
        if (label[v] != UINT32_MAX) out[label[v]].push_back(v);
    return out;
}

std::size_t count_components(const Graph& g) {
    std::size_t count = 0;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.next_id()), 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.next_id(); ++s) {
        if (!g.contains(s) || seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }
    return count;
}

bool is_acyclic(const Graph& g) {
    return g.num_edges() + count_components(g) == g.num_vertices();
}

namespace {

void require_component(const Graph& g, std::span<const VertexId> component) {
    if (component.empty()) throw InputError("empty component");
    std::vector<std::uint8_t> member(static_cast<std::size_t>(g.next_id()), 0);
    for (VertexId v : component) {
        if (!g.contains(v)) throw InputError("component lists unknown vertex " + std::to_string(v));
        if (member[v]) throw InputError("component lists vertex " + std::to_string(v) + " twice");
        member[v] = 1;
    }
    std::vector<VertexId> reach{component.front()};
    member[component.front()] = 2;
    for (std::size_t i = 0; i < reach.size(); ++i) {
        for (VertexId u : g.neighbors(reach[i])) {
            if (member[u] == 0) throw InputError("vertex set is not a maximal component");
            if (member[u] == 1) {
                member[u] = 2;
                reach.push_back(u);
            }
        }
    }
    if (reach.size() != component.size()) throw InputError("vertex set is not connected");
}

VertexId lowest_leaf(const Graph& g, VertexId v, VertexId exclude) {
    VertexId best = kNoVertex;
    for (VertexId u : g.neighbors(v))
        if (g.degree(u) == 1 && u != exclude && (best == kNoVertex || u < best)) best = u;
    return best;
}

}  // namespace

namespace {

ComponentKind classify_unchecked(const Graph& g, std::span<const VertexId> component) {
    const std::size_t n = component.size();
    if (n == 1) return {ComponentShape::Caterpillar, {component.front()}};

    std::size_t half_edges = 0;
    for (VertexId v : component) half_edges += g.degree(v);
    const std::size_t m = half_edges / 2;
    if (n == 2) {
        return {ComponentShape::Caterpillar,
                {std::min(component[0], component[1]), std::max(component[0], component[1])}};
    }

    if (m + 1 != n && m != n) return {ComponentShape::Other, {}};

    // Core = non-pendant vertices; core degree = degree_star.
    std::vector<VertexId> core;
    for (VertexId v : component)
        if (g.degree(v) > 1) core.push_back(v);
    if (!std::is_sorted(core.begin(), core.end())) std::sort(core.begin(), core.end());
    auto core_next = [&](VertexId v, VertexId prev) {
        VertexId best = kNoVertex;
        for (VertexId u : g.neighbors(v))
            if (u != prev && g.degree(u) > 1 && (best == kNoVertex || u < best)) best = u;
        return best;
    };

    if (m + 1 == n) {
        VertexId end = kNoVertex;
        for (VertexId v : core) {
            const std::size_t d = degree_star(g, v);
            if (d > 2) return {ComponentShape::Other, {}};
            if (d <= 1 && end == kNoVertex) end = v;
        }
        std::vector<VertexId> spine;
        const VertexId front_leaf = lowest_leaf(g, end, kNoVertex);
        spine.push_back(front_leaf);
        for (VertexId prev = kNoVertex, cur = end; cur != kNoVertex;) {
            spine.push_back(cur);
            const VertexId next = core_next(cur, prev);
            prev = cur;
            cur = next;
        }
        spine.push_back(lowest_leaf(g, spine.back(), front_leaf));
        return {ComponentShape::Caterpillar, std::move(spine)};
    }

    if (m == n && core.size() >= 3) {
        for (VertexId v : core)
            if (degree_star(g, v) != 2) return {ComponentShape::Other, {}};
        std::vector<VertexId> spine{core.front()};
        VertexId prev = core.front();
        VertexId cur = core_next(core.front(), kNoVertex);
        while (cur != core.front()) {
            spine.push_back(cur);
            const VertexId next = core_next(cur, prev);
            prev = cur;
            cur = next;
        }
        if (spine.size() != core.size()) return {ComponentShape::Other, {}};
        return {ComponentShape::PseudoCaterpillar, std::move(spine)};
    }
    return {ComponentShape::Other, {}};
}

}  // namespace

ComponentKind classify_component(const Graph& g, std::span<const VertexId> component) {
    require_component(g, component);
    return classify_unchecked(g, component);
}

std::vector<ClassifiedComponent> classify_components(const Graph& g) {
    std::vector<ClassifiedComponent> out;
    for (auto& comp : connected_components(g)) {
        ComponentKind kind = classify_unchecked(g, comp);
        out.push_back({std::move(comp), std::move(kind)});
    }
    return out;
}

namespace {

// Neighbors of v with degree >= 2, ascending.
std::vector<VertexId> heavy_neighbors(const Graph& g, VertexId v) {
    std::vector<VertexId> out;
    for (VertexId u : g.neighbors(v))
        if (g.degree(u) >= 2) out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<T2Witness> t2_at(const Graph& g, VertexId root) {
    const std::vector<VertexId> mids = heavy_neighbors(g, root);
    if (mids.size() < 3) return std::nullopt;

    auto lowest_other = [&](VertexId a) {
        VertexId best = kNoVertex;
        for (VertexId u : g.neighbors(a))
            if (u != root && (best == kNoVertex || u < best)) best = u;
        return best;
    };
    T2Witness w{root, {mids[0], mids[1], mids[2]}, {}};
    for (int i = 0; i < 3; ++i) w.endpoints[i] = lowest_other(w.midpoints[i]);
    std::vector<VertexId> all{root, w.midpoints[0], w.midpoints[1], w.midpoints[2],
                              w.endpoints[0], w.endpoints[1], w.endpoints[2]};
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) == all.end()) return w;

    // Greedy collided (only possible near cycles): exhaustive over midpoint triples. Five
    // endpoint candidates per midpoint suffice since at most four vertices are ever forbidden.
    std::vector<std::vector<VertexId>> ends(mids.size());
    for (std::size_t i = 0; i < mids.size(); ++i) {
        for (VertexId u : g.neighbors(mids[i]))
            if (u != root) ends[i].push_back(u);
        std::sort(ends[i].begin(), ends[i].end());
        if (ends[i].size() > 5) ends[i].resize(5);
    }
    std::array<std::size_t, 3> pick{};
    std::vector<VertexId> used;
    std::function<bool(int, std::size_t)> choose = [&](int depth, std::size_t from) -> bool {
        if (depth == 3) {
            // assign endpoints
            std::function<bool(int)> assign = [&](int i) -> bool {
                if (i == 3) return true;
                for (VertexId b : ends[pick[i]]) {
                    if (std::find(used.begin(), used.end(), b) != used.end()) continue;
                    used.push_back(b);
                    w.endpoints[i] = b;
                    if (assign(i + 1)) return true;
                    used.pop_back();
                }
                return false;
            };
            used = {root, mids[pick[0]], mids[pick[1]], mids[pick[2]]};
            return assign(0);
        }
        for (std::size_t i = from; i < mids.size(); ++i) {
            pick[depth] = i;
            if (choose(depth + 1, i + 1)) return true;
        }
        return false;
    };
    if (!choose(0, 0)) return std::nullopt;
    for (int i = 0; i < 3; ++i) w.midpoints[i] = mids[pick[i]];
    return w;
}

}  // namespace

std::optional<N2Witness> find_n2(const Graph& g) {
    for (VertexId v = 0; v < g.next_id(); ++v) {
        if (!g.contains(v) || g.degree(v) < 3) continue;
        std::size_t heavy = 0;
        for (VertexId u : g.neighbors(v))
            if (g.degree(u) >= 2) ++heavy;
        if (heavy < 3) continue;
        const std::vector<VertexId> h = heavy_neighbors(g, v);
        return N2Witness{v, {h[0], h[1], h[2]}};
    }
    return std::nullopt;
}

std::optional<T2Witness> find_t2(const Graph& g) {
    for (VertexId v = 0; v < g.next_id(); ++v) {
        if (!g.contains(v) || g.degree(v) < 3) continue;
        if (auto w = t2_at(g, v)) return w;
    }
    return std::nullopt;
}

bool has_pathwidth_le_one(const Graph& g, PathwidthMethod method) {
    switch (method) {
        case PathwidthMethod::Components:
            for (const auto& c : classify_components(g))
                if (c.kind.shape != ComponentShape::Caterpillar) return false;
            return true;
        case PathwidthMethod::AcyclicNoT2:
            return is_acyclic(g) && !find_t2(g);
        case PathwidthMethod::AcyclicNoN2:
            return is_acyclic(g) && !find_n2(g);
        case PathwidthMethod::NoN2NoPseudo:
            if (find_n2(g)) return false;
            for (const auto& c : classify_components(g))
                if (c.kind.shape == ComponentShape::PseudoCaterpillar) return false;
            return true;
    }
    throw InternalError("unknown pathwidth method");
}

}  // namespace pw1
