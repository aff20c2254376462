#include "pw1/layout.hpp"

#include <algorithm>

#include "pw1/recognition.hpp"

namespace pw1 {

TwoLayerLayout two_layer_layout(const Graph& g) {
    TwoLayerLayout out;
    std::vector<std::uint8_t> on_spine(static_cast<std::size_t>(g.next_id()), 0);
    for (const auto& c : classify_components(g)) {
        if (c.kind.shape != ComponentShape::Caterpillar) throw InputError("graph has pathwidth > 1");
        for (VertexId v : c.kind.spine) on_spine[v] = 1;
        LayerPair part;
        // Spine alternates layers; each spine vertex's pendants go on the other layer right
        // away, before the next spine vertex is placed.
        for (std::size_t i = 0; i < c.kind.spine.size(); ++i) {
            const VertexId v = c.kind.spine[i];
            auto& own = i % 2 == 0 ? part.top : part.bottom;
            auto& other = i % 2 == 0 ? part.bottom : part.top;
            own.push_back(v);
            std::vector<VertexId> leaves;
            for (VertexId u : g.neighbors(v))
                if (!on_spine[u]) leaves.push_back(u);
            std::sort(leaves.begin(), leaves.end());
            other.insert(other.end(), leaves.begin(), leaves.end());
        }
        out.combined.top.insert(out.combined.top.end(), part.top.begin(), part.top.end());
        out.combined.bottom.insert(out.combined.bottom.end(), part.bottom.begin(), part.bottom.end());
        out.components.push_back(std::move(part));
    }
    return out;
}

std::size_t count_crossings(const Graph& g, const LayerPair& layout) {
    const auto n = static_cast<std::size_t>(g.next_id());
    std::vector<long long> top(n, -1), bottom(n, -1);
    for (std::size_t i = 0; i < layout.top.size(); ++i) top.at(layout.top[i]) = static_cast<long long>(i);
    for (std::size_t i = 0; i < layout.bottom.size(); ++i) bottom.at(layout.bottom[i]) = static_cast<long long>(i);
    for (VertexId v : g.vertices())
        if ((top[v] < 0) == (bottom[v] < 0)) throw InputError("vertex " + std::to_string(v) + " not placed on exactly one layer");

    std::vector<std::pair<long long, long long>> segs;
    for (auto [u, v] : g.edges()) {
        if (top[u] >= 0 && bottom[v] >= 0) segs.emplace_back(top[u], bottom[v]);
        else if (top[v] >= 0 && bottom[u] >= 0) segs.emplace_back(top[v], bottom[u]);
        else throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " stays within one layer");
    }
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto [a, b] = segs[i];
            const auto [c, d] = segs[j];
            if ((a < c && b > d) || (a > c && b < d)) ++crossings;
        }
    return crossings;
}

}  // namespace pw1
