#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pw1/graph.hpp"

namespace pw1 {

// Number of neighbors of v that are not pendant (degree > 1).
std::size_t degree_star(const Graph& g, VertexId v);
// max(degree_star(v) - 2, 0)
std::size_t potential(const Graph& g, VertexId v);
// Sum of potentials; zero exactly when the graph has no N2 substructure.
std::size_t global_potential(const Graph& g);

// Components ordered by their lowest id; each component sorted ascending.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
std::size_t count_components(const Graph& g);
bool is_acyclic(const Graph& g);

enum class ComponentShape { Caterpillar, PseudoCaterpillar, Other };

// A caterpillar spine is a path, a pseudo-caterpillar spine a cycle listed from its lowest id.
// Caterpillar spines are extended by one leaf at each end when possible, so P4 reports all
// four vertices and an isolated vertex reports itself.
struct ComponentKind {
    ComponentShape shape = ComponentShape::Other;
    std::vector<VertexId> spine;
};

// `component` must be exactly one connected component of g; anything else is an InputError.
ComponentKind classify_component(const Graph& g, std::span<const VertexId> component);

struct ClassifiedComponent {
    std::vector<VertexId> vertices;
    ComponentKind kind;
};
// Every component with its shape, in connected_components order. Linear time.
std::vector<ClassifiedComponent> classify_components(const Graph& g);

// A root adjacent to three distinct vertices of degree >= 2.
struct N2Witness {
    VertexId root = kNoVertex;
    std::array<VertexId, 3> branches{};
};

// Three length-2 paths sharing the center, seven distinct vertices.
struct T2Witness {
    VertexId center = kNoVertex;
    std::array<VertexId, 3> midpoints{};
    std::array<VertexId, 3> endpoints{};
};

// Lowest-id root, then its three lowest-id qualifying neighbors.
std::optional<N2Witness> find_n2(const Graph& g);
std::optional<T2Witness> find_t2(const Graph& g);

enum class PathwidthMethod { Components, AcyclicNoT2, AcyclicNoN2, NoN2NoPseudo };
inline constexpr std::array<PathwidthMethod, 4> kAllPathwidthMethods = {
    PathwidthMethod::Components, PathwidthMethod::AcyclicNoT2, PathwidthMethod::AcyclicNoN2,
    PathwidthMethod::NoN2NoPseudo};

bool has_pathwidth_le_one(const Graph& g, PathwidthMethod method = PathwidthMethod::NoN2NoPseudo);

}  // namespace pw1
