#include "pw1/pove.hpp"

#include <algorithm>

#include "pw1/recognition.hpp"
#include "pw1/reduce.hpp"

namespace pw1 {

namespace {

struct PoveSearch {
    std::uint64_t leaves = 0;
    std::vector<VertexId> chosen;

    // Explosions needed once no N2 is left, or -1 when some cycle has no splittable spine vertex.
    int leaf_cost(const Graph& g, const VertexSet& s, std::vector<VertexId>& picks) {
        int cost = 0;
        for (const auto& c : classify_components(g)) {
            if (c.kind.shape != ComponentShape::PseudoCaterpillar) continue;
            VertexId pick = kNoVertex;
            for (VertexId v : c.kind.spine)
                if (s.contains(v) && (pick == kNoVertex || v < pick)) pick = v;
            if (pick == kNoVertex) return -1;
            picks.push_back(pick);
            ++cost;
        }
        return cost;
    }

    bool run(const Graph& g, const VertexSet& s, int k) {
        const auto n2 = find_n2(g);
        if (!n2) {
            ++leaves;
            std::vector<VertexId> picks;
            const int cost = leaf_cost(g, s, picks);
            if (cost < 0 || cost > k) return false;
            chosen.insert(chosen.end(), picks.begin(), picks.end());
            return true;
        }
        std::vector<VertexId> cands;
        if (s.contains(n2->root)) cands.push_back(n2->root);
        std::array<VertexId, 3> br = n2->branches;
        std::sort(br.begin(), br.end());
        for (VertexId v : br)
            if (s.contains(v)) cands.push_back(v);
        if (k == 0 || cands.empty()) {
            ++leaves;
            return false;
        }
        for (VertexId c : cands) {
            Graph next = g;
            explode_vertex(next, c);
            VertexSet s_next = s;
            s_next.erase(c);
            chosen.push_back(c);
            if (run(next, s_next, k - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

PoveBranchResult branch_pove(const Instance& inst) {
    inst.validate();
    PoveSearch search;
    PoveBranchResult out;
    out.yes = search.run(inst.graph, inst.splittable, inst.budget);
    out.nodes = search.leaves;
    if (out.yes) {
        std::sort(search.chosen.begin(), search.chosen.end());
        out.witness = ExplosionSet{std::move(search.chosen)};
    }
    return out;
}

namespace {

SolveResult decide_pove(const Instance& inst, const SolveOptions& opts) {
    SolveResult res;
    if (!opts.use_kernel) {
        const PoveBranchResult br = branch_pove(inst);
        res.yes = br.yes;
        res.nodes = br.nodes;
        if (br.yes && opts.want_witness) res.witness = *br.witness;
        return res;
    }
    const ReductionOutcome red = kernelize_pove(inst);
    if (red.verdict == Verdict::TrivialNo) {
        res.kernel_rejected = true;
        return res;
    }
    const PoveBranchResult br = branch_pove(red.reduced);
    res.yes = br.yes;
    res.nodes = br.nodes;
    if (br.yes && opts.want_witness) {
        ExplosionSet lifted = lift_explosion_set(red.trace, *br.witness);
        const VerifyResult check = verify_witness(inst, lifted);
        if (!check.ok) throw InternalError("lifted explosion set fails verification: " + check.detail);
        res.witness = std::move(lifted);
    }
    return res;
}

}  // namespace

SolveResult solve_pove(const Instance& inst, const SolveOptions& opts) {
    if (inst.problem != Problem::POVE) throw InputError("solve_pove needs a pove instance");
    inst.validate();
    if (!opts.minimize) return decide_pove(inst, opts);

    const int cap = static_cast<int>(inst.splittable.size());
    std::uint64_t nodes = 0;
    for (int k = 0; k <= cap; ++k) {
        Instance probe = inst;
        probe.budget = k;
        SolveResult r = decide_pove(probe, opts);
        nodes += r.nodes;
        if (r.yes) {
            r.minimum = k;
            r.nodes = nodes;
            return r;
        }
    }
    SolveResult none;
    none.nodes = nodes;
    return none;
}

}  // namespace pw1
