#include "pw1/povs.hpp"

#include <algorithm>

#include "pw1/recognition.hpp"
#include "pw1/reduce.hpp"

namespace pw1 {

namespace {

// Excess pendants are never deleted here: a vertex's pendants act as one neighbor, represented
// by the lowest of them, and moving the representative moves the whole group. This matches
// trimming pendants at every node while keeping split steps valid on the input graph.
struct PovsSearch {
    std::uint64_t leaves = 0;
    std::vector<SplitStep> steps;

    bool leaf(const Graph& g, int k) {
        ++leaves;
        std::vector<SplitStep> extra;
        for (const auto& c : classify_components(g)) {
            if (c.kind.shape != ComponentShape::PseudoCaterpillar) continue;
            const auto& spine = c.kind.spine;
            std::size_t at = spine.size();
            for (std::size_t i = 0; i < spine.size(); ++i)
                if (splittable_.contains(spine[i]) && (at == spine.size() || spine[i] < spine[at])) at = i;
            if (at == spine.size()) return false;
            const VertexId prev = spine[(at + spine.size() - 1) % spine.size()];
            const VertexId next = spine[(at + 1) % spine.size()];
            extra.push_back({spine[at], {std::min(prev, next)}});
        }
        if (static_cast<int>(extra.size()) > k) return false;
        steps.insert(steps.end(), extra.begin(), extra.end());
        return true;
    }

    bool try_split(const Graph& g, int k, VertexId v, std::vector<VertexId> moved) {
        Graph next = g;
        std::sort(moved.begin(), moved.end());
        const VertexId created = split_vertex(next, v, moved);
        splittable_.insert(created);
        steps.push_back({v, std::move(moved)});
        if (run(next, k - 1)) return true;
        steps.pop_back();
        splittable_.erase(created);
        return false;
    }

    bool run(const Graph& g, int k) {
        if (static_cast<long long>(global_potential(g)) > 2LL * k) {
            ++leaves;
            return false;
        }
        const auto n2 = find_n2(g);
        if (!n2) return leaf(g, k);
        const VertexId r = n2->root;
        std::array<VertexId, 3> br = n2->branches;
        std::sort(br.begin(), br.end());
        const bool r_in = splittable_.contains(r);
        const bool any = r_in || std::any_of(br.begin(), br.end(), [&](VertexId v) { return splittable_.contains(v); });
        if (k == 0 || !any) {
            ++leaves;
            return false;
        }

        for (VertexId v : br)
            if (splittable_.contains(v) && try_split(g, k, v, {r})) return true;
        if (!r_in) return false;

        std::vector<VertexId> pendants, nbrs;
        for (VertexId u : g.neighbors(r)) (g.degree(u) == 1 ? pendants : nbrs).push_back(u);
        std::sort(pendants.begin(), pendants.end());
        VertexId rep = kNoVertex;
        if (!pendants.empty()) {
            rep = pendants.front();
            nbrs.push_back(rep);
        }
        std::sort(nbrs.begin(), nbrs.end());
        auto hits = [&](VertexId u) { return std::find(br.begin(), br.end(), u) != br.end(); };
        auto expand = [&](std::initializer_list<VertexId> x) {
            std::vector<VertexId> moved;
            for (VertexId u : x) {
                if (u == rep) moved.insert(moved.end(), pendants.begin(), pendants.end());
                else moved.push_back(u);
            }
            return moved;
        };
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (hits(nbrs[i]) && try_split(g, k, r, expand({nbrs[i]}))) return true;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!hits(nbrs[i]) && !hits(nbrs[j])) continue;
                if (try_split(g, k, r, expand({nbrs[i], nbrs[j]}))) return true;
            }
        }
        return false;
    }

    VertexSet splittable_;
};

}  // namespace

PovsBranchResult branch_povs(const Instance& inst) {
    inst.validate();
    PovsSearch search;
    search.splittable_ = inst.splittable;
    PovsBranchResult out;
    out.yes = search.run(inst.graph, inst.budget);
    out.nodes = search.leaves;
    if (out.yes) out.witness = SplitSequence{std::move(search.steps)};
    return out;
}

namespace {

SolveResult decide_povs(const Instance& inst, const SolveOptions& opts) {
    SolveResult res;
    PovsBranchResult br;
    if (opts.use_kernel) {
        const ReductionOutcome red = kernelize_povs(inst);
        if (red.verdict == Verdict::TrivialNo) {
            res.kernel_rejected = true;
            return res;
        }
        br = branch_povs(red.reduced);
        res.yes = br.yes;
        res.nodes = br.nodes;
        if (!br.yes || !opts.want_witness) return res;
        // Split witnesses are not lifted through the kernel; search the input for one.
        br = branch_povs(inst);
        if (!br.yes) throw InternalError("kernel says yes but the input search finds no split sequence");
    } else {
        br = branch_povs(inst);
        res.yes = br.yes;
        res.nodes = br.nodes;
    }
    if (br.yes && opts.want_witness) res.witness = *br.witness;
    return res;
}

}  // namespace

SolveResult solve_povs(const Instance& inst, const SolveOptions& opts) {
    if (inst.problem != Problem::POVS) throw InputError("solve_povs needs a povs instance");
    inst.validate();
    if (!opts.minimize) return decide_povs(inst, opts);

    // One split lowers the global potential by at most two.
    const int cap = static_cast<int>(inst.graph.num_edges());
    const int start = static_cast<int>((global_potential(inst.graph) + 1) / 2);
    std::uint64_t nodes = 0;
    for (int k = start; k <= cap; ++k) {
        Instance probe = inst;
        probe.budget = k;
        SolveResult r = decide_povs(probe, opts);
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
