#include "pw1/edit_ops.hpp"

#include <algorithm>

#include "pw1/recognition.hpp"

namespace pw1 {

std::string_view problem_tag(Problem p) {
    switch (p) {
        case Problem::POVE: return "pove";
        case Problem::POVS: return "povs";
        case Problem::TOVS: return "tovs";
    }
    return "?";
}

std::optional<Problem> parse_problem_tag(std::string_view tag) {
    if (tag == "pove") return Problem::POVE;
    if (tag == "povs") return Problem::POVS;
    if (tag == "tovs") return Problem::TOVS;
    return std::nullopt;
}

void Instance::validate() const {
    if (budget < 0) throw InputError("negative budget");
    for (VertexId v : splittable.to_vector())
        if (!graph.contains(v)) throw InputError("splittable vertex " + std::to_string(v) + " is not in the graph");
}

std::size_t witness_size(const Witness& w) {
    if (const auto* e = std::get_if<ExplosionSet>(&w)) return e->members.size();
    return std::get<SplitSequence>(w).steps.size();
}

std::vector<VertexId> explode_vertex(Graph& g, VertexId v) {
    std::vector<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(nbrs.begin(), nbrs.end());
    std::vector<VertexId> created;
    created.reserve(nbrs.size());
    for (VertexId u : nbrs) {
        const VertexId c = g.add_vertex();
        g.retarget(u, v, c);
        g.push_neighbor(c, u);
        created.push_back(c);
    }
    // v's edges now belong to the stubs; empty its list so removal leaves them alone.
    for (VertexId u : nbrs) g.erase_from_list(v, u);
    g.remove_vertex(v);
    return created;
}

VertexId split_vertex(Graph& g, VertexId v, std::span<const VertexId> moved) {
    const std::size_t d = g.degree(v);
    if (moved.empty()) throw InputError("split of " + std::to_string(v) + " moves no edge");
    if (moved.size() >= d) throw InputError("split of " + std::to_string(v) + " must keep at least one edge");
    std::vector<VertexId> sorted(moved.begin(), moved.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("split of " + std::to_string(v) + " lists a neighbor twice");
    for (VertexId u : sorted)
        if (!g.contains(u) || !g.has_edge(v, u))
            throw InputError("split of " + std::to_string(v) + " moves non-neighbor " + std::to_string(u));

    const VertexId w = g.add_vertex();
    for (VertexId u : sorted) {
        g.retarget(u, v, w);
        g.erase_from_list(v, u);
        g.push_neighbor(w, u);
    }
    return w;
}

EditResult explode(const Graph& g, VertexId v) {
    EditResult r{g, {}};
    r.created = explode_vertex(r.graph, v);
    return r;
}

EditResult split(const Graph& g, VertexId v, std::span<const VertexId> moved) {
    EditResult r{g, {}};
    r.created.push_back(split_vertex(r.graph, v, moved));
    return r;
}

Graph apply_explosion_set(const Instance& inst, const ExplosionSet& w) {
    std::vector<VertexId> members = w.members;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw WitnessError("explosion set lists a vertex twice");
    for (VertexId v : members) {
        if (!inst.graph.contains(v)) throw WitnessError("explosion of unknown vertex " + std::to_string(v));
        if (!inst.splittable.contains(v)) throw WitnessError("vertex " + std::to_string(v) + " is not splittable");
    }
    Graph g = inst.graph;
    for (VertexId v : members) explode_vertex(g, v);
    return g;
}

SplitOutcome apply_split_sequence(const Instance& inst, const SplitSequence& seq) {
    SplitOutcome out{inst.graph, inst.splittable};
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const SplitStep& step = seq.steps[i];
        const std::string where = "step " + std::to_string(i) + ": ";
        if (!out.graph.contains(step.vertex))
            throw WitnessError(where + "unknown vertex " + std::to_string(step.vertex), i);
        if (!out.splittable.contains(step.vertex))
            throw WitnessError(where + "vertex " + std::to_string(step.vertex) + " is not splittable", i);
        try {
            out.splittable.insert(split_vertex(out.graph, step.vertex, step.moved));
        } catch (const InputError& e) {
            throw WitnessError(where + e.what(), i);
        }
    }
    return out;
}

std::string_view verify_reason_name(VerifyReason r) {
    switch (r) {
        case VerifyReason::Ok: return "ok";
        case VerifyReason::WrongKind: return "wrong-kind";
        case VerifyReason::OverBudget: return "over-budget";
        case VerifyReason::NotSplittable: return "not-splittable";
        case VerifyReason::InvalidStep: return "invalid-step";
        case VerifyReason::TargetMissed: return "target-missed";
    }
    return "?";
}

VerifyResult verify_witness(const Instance& inst, const Witness& w) {
    const bool explosions = std::holds_alternative<ExplosionSet>(w);
    if (explosions != (inst.problem == Problem::POVE))
        return {false, VerifyReason::WrongKind, "witness kind does not match the problem"};
    if (witness_size(w) > static_cast<std::size_t>(inst.budget))
        return {false, VerifyReason::OverBudget,
                "witness has " + std::to_string(witness_size(w)) + " edits, budget " + std::to_string(inst.budget)};

    Graph result;
    try {
        if (explosions)
            result = apply_explosion_set(inst, std::get<ExplosionSet>(w));
        else
            result = apply_split_sequence(inst, std::get<SplitSequence>(w)).graph;
    } catch (const WitnessError& e) {
        const std::string msg = e.what();
        const bool splittable = msg.find("not splittable") != std::string::npos;
        return {false, splittable ? VerifyReason::NotSplittable : VerifyReason::InvalidStep, msg};
    }

    const bool reached = inst.problem == Problem::TOVS ? is_acyclic(result) : has_pathwidth_le_one(result);
    if (!reached)
        return {false, VerifyReason::TargetMissed,
                inst.problem == Problem::TOVS ? "result is not a forest" : "result has pathwidth > 1"};
    return {true, VerifyReason::Ok, {}};
}

Instance replay_trace(const Instance& original, const EditTrace& trace) {
    Instance cur = original;
    for (const EditRecord& rec : trace) {
        switch (rec.kind) {
            case EditKind::RemoveVertices:
                cur.graph.remove_vertices(rec.operands);
                for (VertexId v : rec.operands) cur.splittable.erase(v);
                break;
            case EditKind::Explode: {
                const auto created = explode_vertex(cur.graph, rec.operands.at(0));
                if (created != rec.created) throw InternalError("replayed explosion created different ids");
                cur.splittable.erase(rec.operands[0]);
                break;
            }
            case EditKind::Split: {
                const VertexId c = split_vertex(cur.graph, rec.operands.at(0), rec.moved);
                if (rec.created.size() != 1 || c != rec.created[0])
                    throw InternalError("replayed split created a different id");
                break;
            }
            case EditKind::Contract:
                cur.graph.remove_vertices(rec.operands);
                for (VertexId v : rec.operands) cur.splittable.erase(v);
                cur.graph.add_edge(rec.added.first, rec.added.second);
                break;
            case EditKind::Restrict:
            case EditKind::Reject:
                break;
        }
        for (VertexId v : rec.s_removed) cur.splittable.erase(v);
        for (VertexId v : rec.s_added) cur.splittable.insert(v);
        cur.budget += rec.budget_delta;
    }
    return cur;
}

}  // namespace pw1
