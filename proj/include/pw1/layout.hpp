#pragma once

#include <cstddef>
#include <vector>

#include "pw1/graph.hpp"

namespace pw1 {

// Top layer at y = 1, bottom at y = 0; x is the position in the list.
struct LayerPair {
    std::vector<VertexId> top;
    std::vector<VertexId> bottom;
};

struct TwoLayerLayout {
    std::vector<LayerPair> components;  // in connected_components order
    LayerPair combined;                 // components side by side
};

// Throws InputError("graph has pathwidth > 1") unless every component is a caterpillar.
TwoLayerLayout two_layer_layout(const Graph& g);

// Pairs of edges whose top and bottom endpoints strictly interleave. Throws InputError when
// an edge does not join the two layers or a vertex is missing from the layout.
std::size_t count_crossings(const Graph& g, const LayerPair& layout);

}  // namespace pw1
