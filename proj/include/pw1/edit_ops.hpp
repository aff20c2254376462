#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pw1/graph.hpp"

namespace pw1 {

enum class Problem { POVE, POVS, TOVS };

std::string_view problem_tag(Problem p);  // "pove", "povs", "tovs"
std::optional<Problem> parse_problem_tag(std::string_view tag);

// A graph, the splittable set S and the budget k.
struct Instance {
    Graph graph;
    VertexSet splittable;
    int budget = 0;
    Problem problem = Problem::POVE;

    // Throws InputError unless S is a subset of V and k >= 0.
    void validate() const;
};

// A candidate set W of vertices to explode.
struct ExplosionSet {
    std::vector<VertexId> members;  // ascending, unique
};

struct SplitStep {
    VertexId vertex = kNoVertex;
    std::vector<VertexId> moved;  // neighbors whose edges go to the new vertex
};

struct SplitSequence {
    std::vector<SplitStep> steps;
};

using Witness = std::variant<ExplosionSet, SplitSequence>;

std::size_t witness_size(const Witness& w);

// A witness that does not fit the instance. `step` is the offending split index, if any.
struct WitnessError : InputError {
    WitnessError(const std::string& what, std::optional<std::size_t> step_index = std::nullopt)
        : InputError(what), step(step_index) {}
    std::optional<std::size_t> step;
};

// In-place primitives. Created ids are consecutive from the graph's next_id().
std::vector<VertexId> explode_vertex(Graph& g, VertexId v);
VertexId split_vertex(Graph& g, VertexId v, std::span<const VertexId> moved);

struct EditResult {
    Graph graph;
    std::vector<VertexId> created;
};

// Pure forms of the two operations.
EditResult explode(const Graph& g, VertexId v);
EditResult split(const Graph& g, VertexId v, std::span<const VertexId> moved);

// Explodes every member in ascending order; members must be splittable.
Graph apply_explosion_set(const Instance& inst, const ExplosionSet& w);

struct SplitOutcome {
    Graph graph;
    VertexSet splittable;  // grows with every created vertex
};
// Applies the steps in order against the evolving graph and S.
SplitOutcome apply_split_sequence(const Instance& inst, const SplitSequence& seq);

enum class VerifyReason { Ok, WrongKind, OverBudget, NotSplittable, InvalidStep, TargetMissed };
std::string_view verify_reason_name(VerifyReason r);

struct VerifyResult {
    bool ok = false;
    VerifyReason reason = VerifyReason::Ok;
    std::string detail;
};

// Size within budget, valid against S, and the target class reached: pathwidth <= 1 for
// POVE/POVS, a forest for TOVS.
VerifyResult verify_witness(const Instance& inst, const Witness& w);

enum class EditKind {
    RemoveVertices,  // operands removed with all their edges
    Explode,         // operands[0] exploded, stubs in `created`
    Split,           // operands[0] split, `moved` go to created[0]
    Contract,        // operands removed, then edge `added` inserted
    Restrict,        // graph untouched, only S and k change
    Reject,          // the instance was found to be a no-instance
};

// One step of a reduction. S changes and the budget change apply after the graph edit.
struct EditRecord {
    std::string rule;
    EditKind kind = EditKind::Restrict;
    std::vector<VertexId> operands;
    std::vector<VertexId> moved;
    std::vector<VertexId> created;
    Edge added{kNoVertex, kNoVertex};
    std::vector<VertexId> s_removed;
    std::vector<VertexId> s_added;
    int budget_delta = 0;
    // Vertex the rule proved to be in some minimum solution (explosion problems).
    VertexId forced = kNoVertex;
    // After the rule, `stand_in` plays the role `stood_for` had before it.
    VertexId stand_in = kNoVertex;
    VertexId stood_for = kNoVertex;
};

using EditTrace = std::vector<EditRecord>;

// Re-applies a trace to the instance it started from. Reject records are skipped.
Instance replay_trace(const Instance& original, const EditTrace& trace);

}  // namespace pw1
