#pragma once

#include <string>
#include <vector>

#include "pw1/edit_ops.hpp"

namespace pw1 {

enum class Verdict { Open, TrivialNo };

struct ReductionOutcome {
    Instance reduced;
    EditTrace trace;
    Verdict verdict = Verdict::Open;
    std::string rule;  // the rule that produced TrivialNo, if any
};

// S2 = 2-enclosed members of S, split into spanning-forest leaves and the rest.
struct TwoEnclosedClassification {
    std::vector<VertexId> s2;
    std::vector<VertexId> s_explode;
    std::vector<VertexId> s_keep;
    // The auxiliary graph: S2 vertices plus one vertex per contracted component, named by the
    // component's lowest id.
    std::vector<VertexId> aux_vertices;
    std::vector<Edge> aux_edges;
    std::vector<Edge> forest_edges;
};

// A vertex is 2-enclosed when it and both its non-pendant neighbors have degree* 2.
bool is_two_enclosed(const Graph& g, VertexId v);

// Single rules. POVE and POVS instances are accepted; the problem picks the variant where
// they differ (the pseudo-caterpillar and 2-enclosed rules).
ReductionOutcome rr_pendant(const Instance& inst);
ReductionOutcome rr_caterpillar(const Instance& inst);
ReductionOutcome rr_pseudo_caterpillar(const Instance& inst);
ReductionOutcome rr_non_adjacent(const Instance& inst);
// Requires rr_non_adjacent at fixpoint; throws InternalError otherwise.
TwoEnclosedClassification classify_two_enclosed(const Instance& inst);
ReductionOutcome rr_two_enclosed(const Instance& inst);
ReductionOutcome rr_deg1(const Instance& inst);
ReductionOutcome rr_explode_k(const Instance& inst);
ReductionOutcome rr_global_pove(const Instance& inst);
ReductionOutcome rr_global_povs(const Instance& inst);

ReductionOutcome kernelize_pove(const Instance& inst);
ReductionOutcome kernelize_povs(const Instance& inst);

// Maps an explosion set of the reduced instance back to the instance the trace started from.
ExplosionSet lift_explosion_set(const EditTrace& trace, const ExplosionSet& reduced_witness);

}  // namespace pw1
