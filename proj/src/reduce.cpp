#include "pw1/reduce.hpp"

#include <algorithm>
#include <iterator>
#include <queue>

#include "pw1/recognition.hpp"

namespace pw1 {

namespace {

// Degrees are copied into a dense array first so the per-neighbor lookups stay cache-friendly
// on large graphs.
std::vector<std::uint32_t> degree_star_table(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.next_id());
    std::vector<std::uint32_t> deg(n, 0), ds(n, 0);
    for (VertexId v = 0; v < g.next_id(); ++v)
        if (g.contains(v)) deg[v] = static_cast<std::uint32_t>(g.degree(v));
    for (VertexId v = 0; v < g.next_id(); ++v) {
        if (deg[v] == 0) continue;
        std::uint32_t c = 0;
        for (VertexId u : g.neighbors(v)) c += deg[u] > 1;
        ds[v] = c;
    }
    return ds;
}

std::uint64_t potential_sum(const std::vector<std::uint32_t>& ds) {
    std::uint64_t total = 0;
    for (std::uint32_t d : ds) total += d > 2 ? d - 2 : 0;
    return total;
}

// Lexicographic order in linear time: stable bucket passes on the second, then the first id.
void sort_edges(std::vector<Edge>& edges, std::size_t bound) {
    std::vector<Edge> tmp(edges.size());
    std::vector<std::size_t> start(bound + 1);
    auto pass = [&](auto key, std::vector<Edge>& from, std::vector<Edge>& to) {
        std::fill(start.begin(), start.end(), 0);
        for (const Edge& e : from) ++start[static_cast<std::size_t>(key(e)) + 1];
        for (std::size_t i = 1; i <= bound; ++i) start[i] += start[i - 1];
        for (const Edge& e : from) to[start[static_cast<std::size_t>(key(e))]++] = e;
    };
    pass([](const Edge& e) { return e.second; }, edges, tmp);
    pass([](const Edge& e) { return e.first; }, tmp, edges);
}

// Non-pendant neighbors of a degree*-2 vertex.
std::pair<VertexId, VertexId> heavy_pair(const Graph& g, VertexId v) {
    VertexId a = kNoVertex, b = kNoVertex;
    for (VertexId u : g.neighbors(v)) {
        if (g.degree(u) <= 1) continue;
        if (a == kNoVertex) a = u;
        else b = u;
    }
    if (a > b) std::swap(a, b);
    return {a, b};
}

bool enclosed(const Graph& g, const std::vector<std::uint32_t>& ds, VertexId v) {
    if (ds[v] != 2) return false;
    for (VertexId u : g.neighbors(v))
        if (g.degree(u) > 1 && ds[u] != 2) return false;
    return true;
}

TwoEnclosedClassification classify_impl(const Graph& g, const VertexSet& s) {
    const auto ds = degree_star_table(g);
    const auto n = static_cast<std::size_t>(g.next_id());
    TwoEnclosedClassification out;
    std::vector<std::uint8_t> in_s2(n, 0);
    for (VertexId v = 0; v < g.next_id(); ++v) {
        if (g.contains(v) && s.contains(v) && enclosed(g, ds, v)) {
            out.s2.push_back(v);
            in_s2[v] = 1;
        }
    }
    for (VertexId v : out.s2)
        for (VertexId u : g.neighbors(v))
            if (g.degree(u) > 1 && ds[u] == 2 && s.contains(u))
                throw InternalError("2-enclosed vertex " + std::to_string(v) + " has a degree*-2 splittable neighbor");

    // Vertices of G' outside S2: not in S, not a pendant of G. Label their components.
    auto kept = [&](VertexId u) { return !s.contains(u) && g.degree(u) > 1; };
    std::vector<VertexId> super(n, kNoVertex);
    std::vector<VertexId> stack;
    for (VertexId r = 0; r < g.next_id(); ++r) {
        if (!g.contains(r) || !kept(r) || super[r] != kNoVertex) continue;
        out.aux_vertices.push_back(r);
        super[r] = r;
        stack.push_back(r);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbors(v)) {
                if (kept(u) && super[u] == kNoVertex) {
                    super[u] = r;
                    stack.push_back(u);
                }
            }
        }
    }
    // Both lists are ascending already.
    std::vector<VertexId> roots = std::move(out.aux_vertices);
    out.aux_vertices.clear();
    std::merge(roots.begin(), roots.end(), out.s2.begin(), out.s2.end(), std::back_inserter(out.aux_vertices));

    for (VertexId v : out.s2) {
        // v has exactly two non-pendant neighbors.
        VertexId ends[2] = {kNoVertex, kNoVertex};
        int count = 0;
        for (VertexId u : g.neighbors(v))
            if (kept(u)) ends[count++] = super[u];
        if (count == 2 && ends[0] == ends[1]) count = 1;
        for (int i = 0; i < count; ++i) out.aux_edges.emplace_back(std::min(v, ends[i]), std::max(v, ends[i]));
    }
    sort_edges(out.aux_edges, n);
    // Compressed adjacency. Filling from sorted edges leaves every list ascending: lower
    // neighbors arrive first.
    std::vector<std::uint32_t> offset(n + 1, 0);
    for (auto [a, b] : out.aux_edges) {
        ++offset[static_cast<std::size_t>(a) + 1];
        ++offset[static_cast<std::size_t>(b) + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) offset[i] += offset[i - 1];
    std::vector<VertexId> flat(offset[n]);
    {
        std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
        for (auto [a, b] : out.aux_edges) {
            flat[fill[a]++] = b;
            flat[fill[b]++] = a;
        }
    }

    // Depth-first spanning forest, roots and neighbors in ascending order.
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::uint32_t> tree_degree(n, 0);
    std::vector<std::pair<VertexId, std::size_t>> frames;
    for (VertexId root : out.aux_vertices) {
        if (seen[root]) continue;
        seen[root] = 1;
        frames.emplace_back(root, offset[root]);
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            if (next == offset[static_cast<std::size_t>(v) + 1]) {
                frames.pop_back();
                continue;
            }
            const VertexId u = flat[next++];
            if (seen[u]) continue;
            seen[u] = 1;
            out.forest_edges.emplace_back(std::min(v, u), std::max(v, u));
            ++tree_degree[v];
            ++tree_degree[u];
            frames.emplace_back(u, offset[u]);
        }
    }
    sort_edges(out.forest_edges, n);

    for (VertexId v : out.s2) (tree_degree[v] == 1 ? out.s_explode : out.s_keep).push_back(v);
    return out;
}

class Reducer {
public:
    explicit Reducer(const Instance& inst) : inst_(inst) {
        if (inst.problem == Problem::TOVS) throw InputError("reduction rules apply to pove and povs only");
        inst_.validate();
    }

    bool rejected() const { return verdict_ == Verdict::TrivialNo; }

    ReductionOutcome finish() && { return {std::move(inst_), std::move(trace_), verdict_, std::move(reject_rule_)}; }

    void reject(const std::string& rule) {
        if (rejected()) return;
        verdict_ = Verdict::TrivialNo;
        reject_rule_ = rule;
        EditRecord rec;
        rec.rule = rule;
        rec.kind = EditKind::Reject;
        trace_.push_back(std::move(rec));
    }

    void spend(EditRecord& rec, const std::string& rule) {
        rec.budget_delta -= 1;
        inst_.budget -= 1;
        trace_.push_back(std::move(rec));
        if (inst_.budget < 0) reject(rule);
    }

    // Keeps one pendant (the lowest id) per vertex.
    void pendant() {
        const Graph& g = inst_.graph;
        std::vector<VertexId> drop;
        for (VertexId v = 0; v < g.next_id(); ++v) {
            if (!g.contains(v)) continue;
            VertexId keep = kNoVertex;
            std::size_t count = 0;
            for (VertexId u : g.neighbors(v)) {
                if (g.degree(u) != 1) continue;
                ++count;
                if (keep == kNoVertex || u < keep) keep = u;
            }
            if (count < 2) continue;
            for (VertexId u : g.neighbors(v))
                if (g.degree(u) == 1 && u != keep) drop.push_back(u);
        }
        remove("pendant", std::move(drop));
    }

    // Deletes caterpillar components, and pseudo-caterpillar components for one edit each.
    void components(bool caterpillars, bool pseudos) {
        std::vector<VertexId> cat;
        std::vector<ClassifiedComponent> paid;
        for (auto& c : classify_components(inst_.graph)) {
            if (c.kind.shape == ComponentShape::Caterpillar && caterpillars)
                cat.insert(cat.end(), c.vertices.begin(), c.vertices.end());
            else if (c.kind.shape == ComponentShape::PseudoCaterpillar && pseudos)
                paid.push_back(std::move(c));
        }
        remove("caterpillar", std::move(cat));
        for (auto& c : paid) {
            VertexId pick = kNoVertex;
            for (VertexId v : c.kind.spine)
                if (inst_.splittable.contains(v) && (pick == kNoVertex || v < pick)) pick = v;
            if (pick == kNoVertex) {
                reject("pseudo-caterpillar");
                return;
            }
            inst_.graph.remove_vertices(c.vertices);
            for (VertexId v : c.vertices) inst_.splittable.erase(v);
            EditRecord rec;
            rec.rule = "pseudo-caterpillar";
            rec.kind = EditKind::RemoveVertices;
            rec.operands = std::move(c.vertices);
            rec.forced = pick;
            spend(rec, "pseudo-caterpillar");
            if (rejected()) return;
        }
    }

    // One ascending pass reaches the fixpoint: S only shrinks, so a vertex that did not
    // qualify when scanned never qualifies later.
    void non_adjacent() {
        const Graph& g = inst_.graph;
        const auto ds = degree_star_table(g);
        EditRecord rec;
        rec.rule = "non-adjacent";
        for (VertexId v = 0; v < g.next_id(); ++v) {
            if (!g.contains(v) || !inst_.splittable.contains(v) || !enclosed(g, ds, v)) continue;
            for (VertexId y : g.neighbors(v)) {
                if (g.degree(y) > 1 && ds[y] == 2 && inst_.splittable.contains(y)) {
                    inst_.splittable.erase(v);
                    rec.s_removed.push_back(v);
                    break;
                }
            }
        }
        if (!rec.s_removed.empty()) trace_.push_back(std::move(rec));
    }

    void two_enclosed() {
        const TwoEnclosedClassification cls = classify_impl(inst_.graph, inst_.splittable);
        if (!cls.s_keep.empty()) {
            EditRecord rec;
            rec.rule = "two-enclosed";
            rec.s_removed = cls.s_keep;
            for (VertexId v : cls.s_keep) inst_.splittable.erase(v);
            trace_.push_back(std::move(rec));
        }
        std::vector<VertexId> fragments;
        for (VertexId v : cls.s_explode) {
            Graph& g = inst_.graph;
            EditRecord rec;
            rec.rule = "two-enclosed";
            rec.operands = {v};
            rec.forced = v;
            inst_.splittable.erase(v);
            if (inst_.problem == Problem::POVE) {
                for (VertexId u : g.neighbors(v))
                    if (g.degree(u) == 1) fragments.push_back(u);
                rec.kind = EditKind::Explode;
                rec.created = explode_vertex(g, v);
                for (VertexId c : rec.created)
                    if (g.degree(g.neighbors(c)[0]) == 1) fragments.push_back(c);
            } else {
                // Separate the two non-pendant neighbors; pendants stay with the lower one.
                const VertexId high = heavy_pair(g, v).second;
                rec.kind = EditKind::Split;
                rec.moved = {high};
                rec.created = {split_vertex(g, v, rec.moved)};
            }
            rec.s_removed = {v};
            spend(rec, "two-enclosed");
            if (rejected()) return;
        }
        remove("caterpillar", std::move(fragments));
        contract_enclosed_runs();
    }

    void degree_one() {
        Graph& g = inst_.graph;
        // Removing v, its pendants and adding xy leaves every survivor's degree and degree*
        // unchanged, so one table serves the whole fixpoint.
        const auto ds = degree_star_table(g);
        auto lowest_deg1 = [&](VertexId v) {
            VertexId x = kNoVertex;
            for (VertexId u : g.neighbors(v))
                if (g.degree(u) > 1 && ds[u] == 1 && (x == kNoVertex || u < x)) x = u;
            return x;
        };
        std::vector<VertexId> work;
        for (VertexId v = g.next_id() - 1; v >= 0; --v)
            if (g.contains(v) && ds[v] == 2) work.push_back(v);
        while (!work.empty()) {
            const VertexId v = work.back();
            work.pop_back();
            if (!g.contains(v) || ds[v] != 2) continue;
            const VertexId x = lowest_deg1(v);
            if (x == kNoVertex) continue;
            const auto [a, b] = heavy_pair(g, v);
            const VertexId y = a == x ? b : a;
            if (g.has_edge(x, y)) throw InternalError("degree*-1 vertex adjacent to both ends of its path");

            EditRecord rec;
            rec.rule = "degree-one";
            rec.kind = EditKind::Contract;
            rec.operands.push_back(v);
            for (VertexId u : g.neighbors(v))
                if (g.degree(u) == 1) rec.operands.push_back(u);
            rec.added = {std::min(x, y), std::max(x, y)};
            if (inst_.splittable.contains(v)) {
                rec.s_added = {x};
                rec.stand_in = x;
                rec.stood_for = v;
            } else if (inst_.splittable.contains(x)) {
                rec.s_removed = {x};
            }
            g.remove_vertices(rec.operands);
            for (VertexId u : rec.operands) inst_.splittable.erase(u);
            g.add_edge(x, y);
            for (VertexId u : rec.s_removed) inst_.splittable.erase(u);
            for (VertexId u : rec.s_added) inst_.splittable.insert(u);
            trace_.push_back(std::move(rec));
            work.push_back(y);
        }
    }

    // Explodes every vertex whose potential exceeds the budget.
    void explode_high() {
        Graph& g = inst_.graph;
        std::vector<std::uint32_t> ds = degree_star_table(g);
        auto mu = [&](VertexId v) { return ds[v] > 2 ? ds[v] - 2 : 0u; };
        std::priority_queue<std::pair<std::uint32_t, VertexId>> heap;  // (potential, -id)
        for (VertexId v = 0; v < g.next_id(); ++v)
            if (g.contains(v) && mu(v) > 0) heap.emplace(mu(v), -v);
        while (!heap.empty()) {
            const auto [p, neg] = heap.top();
            const VertexId v = -neg;
            if (!g.contains(v) || mu(v) != p) {
                heap.pop();
                if (g.contains(v) && mu(v) > 0) heap.emplace(mu(v), -v);
                continue;
            }
            if (static_cast<long long>(p) <= inst_.budget) break;
            heap.pop();
            if (!inst_.splittable.contains(v)) {
                reject("explode-k");
                return;
            }
            EditRecord rec;
            rec.rule = "explode-k";
            rec.kind = EditKind::Explode;
            rec.operands = {v};
            rec.forced = v;
            rec.s_removed = {v};
            std::vector<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
            inst_.splittable.erase(v);
            rec.created = explode_vertex(g, v);
            ds.resize(static_cast<std::size_t>(g.next_id()), 0);
            for (VertexId u : nbrs) {
                if (g.degree(u) == 1) {
                    ds[u] = 0;  // its only neighbor is now a stub
                } else {
                    --ds[u];
                    if (mu(u) > 0) heap.emplace(mu(u), -u);
                }
            }
            for (VertexId c : rec.created) ds[c] = g.degree(g.neighbors(c)[0]) > 1 ? 1 : 0;
            spend(rec, "explode-k");
            if (rejected()) return;
        }
    }

    bool potential_exceeds_budget() const {
        for (std::uint32_t d : degree_star_table(inst_.graph))
            if (d > 2 && static_cast<long long>(d - 2) > inst_.budget) return true;
        return false;
    }

    void global_pove() {
        // k <= INT_MAX, so 2k^2 + 2k < 2^64.
        const auto k = static_cast<std::uint64_t>(inst_.budget);
        if (potential_sum(degree_star_table(inst_.graph)) > 2 * k * k + 2 * k) reject("global-potential");
    }

    void global_povs() {
        if (potential_sum(degree_star_table(inst_.graph)) > 2 * static_cast<std::uint64_t>(inst_.budget))
            reject("global-potential");
    }

    const Instance& instance() const { return inst_; }

private:
    void remove(const std::string& rule, std::vector<VertexId> vs) {
        if (vs.empty()) return;
        inst_.graph.remove_vertices(vs);
        for (VertexId v : vs) inst_.splittable.erase(v);
        EditRecord rec;
        rec.rule = rule;
        rec.kind = EditKind::RemoveVertices;
        rec.operands = std::move(vs);
        trace_.push_back(std::move(rec));
    }

    // Every remaining 2-enclosed vertex is outside S; each maximal run of them collapses into
    // one edge between the run's two end neighbors.
    void contract_enclosed_runs() {
        Graph& g = inst_.graph;
        const auto ds = degree_star_table(g);
        const auto n = static_cast<std::size_t>(g.next_id());
        std::vector<std::uint8_t> mark(n, 0);  // 1 = 2-enclosed, 2 = already in a run
        for (VertexId v = 0; v < g.next_id(); ++v)
            if (g.contains(v) && enclosed(g, ds, v)) mark[v] = 1;

        std::vector<EditRecord> runs;
        for (VertexId s = 0; s < g.next_id(); ++s) {
            if (mark[s] != 1) continue;
            if (inst_.splittable.contains(s)) throw InternalError("2-enclosed vertex left in S after classification");
            std::vector<VertexId> run{s};
            mark[s] = 2;
            VertexId ends[2];
            const auto [a0, b0] = heavy_pair(g, s);
            const VertexId start[2] = {a0, b0};
            for (int side = 0; side < 2; ++side) {
                VertexId prev = s, cur = start[side];
                while (mark[cur] == 1) {
                    mark[cur] = 2;
                    run.push_back(cur);
                    const auto [a, b] = heavy_pair(g, cur);
                    const VertexId next = a == prev ? b : a;
                    prev = cur;
                    cur = next;
                }
                if (mark[cur] == 2) throw InternalError("cycle of 2-enclosed vertices survived");
                ends[side] = cur;
            }
            if (ends[0] == ends[1] || g.has_edge(ends[0], ends[1]))
                throw InternalError("contracting a 2-enclosed run would create a multi-edge");
            EditRecord rec;
            rec.rule = "two-enclosed";
            rec.kind = EditKind::Contract;
            for (VertexId v : run) {
                rec.operands.push_back(v);
                for (VertexId u : g.neighbors(v))
                    if (g.degree(u) == 1) rec.operands.push_back(u);
            }
            rec.added = {std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
            runs.push_back(std::move(rec));
        }
        for (auto& rec : runs) {
            g.remove_vertices(rec.operands);
            for (VertexId v : rec.operands) inst_.splittable.erase(v);
            g.add_edge(rec.added.first, rec.added.second);
            trace_.push_back(std::move(rec));
        }
    }

    Instance inst_;
    EditTrace trace_;
    Verdict verdict_ = Verdict::Open;
    std::string reject_rule_;
};

template <typename Fn>
ReductionOutcome run_rule(const Instance& inst, Fn fn) {
    Reducer r(inst);
    fn(r);
    return std::move(r).finish();
}

}  // namespace

bool is_two_enclosed(const Graph& g, VertexId v) {
    if (degree_star(g, v) != 2) return false;
    for (VertexId u : g.neighbors(v))
        if (g.degree(u) > 1 && degree_star(g, u) != 2) return false;
    return true;
}

ReductionOutcome rr_pendant(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.pendant(); });
}
ReductionOutcome rr_caterpillar(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.components(true, false); });
}
ReductionOutcome rr_pseudo_caterpillar(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.components(false, true); });
}
ReductionOutcome rr_non_adjacent(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.non_adjacent(); });
}
ReductionOutcome rr_two_enclosed(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.two_enclosed(); });
}
ReductionOutcome rr_deg1(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.degree_one(); });
}
ReductionOutcome rr_explode_k(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.explode_high(); });
}
ReductionOutcome rr_global_pove(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.global_pove(); });
}
ReductionOutcome rr_global_povs(const Instance& inst) {
    return run_rule(inst, [](Reducer& r) { r.global_povs(); });
}

TwoEnclosedClassification classify_two_enclosed(const Instance& inst) {
    inst.validate();
    return classify_impl(inst.graph, inst.splittable);
}

ReductionOutcome kernelize_pove(const Instance& inst) {
    if (inst.problem != Problem::POVE) throw InputError("kernelize_pove needs a pove instance");
    return run_rule(inst, [](Reducer& r) {
        // Explosions later in the pipeline lower k, which can re-arm the potential rule; rerun
        // until every potential fits the final budget.
        for (;;) {
            r.explode_high();
            if (r.rejected()) return;
            r.global_pove();
            if (r.rejected()) return;
            r.components(true, true);
            if (r.rejected()) return;
            r.non_adjacent();
            r.two_enclosed();
            if (r.rejected()) return;
            r.degree_one();
            r.pendant();
            if (!r.potential_exceeds_budget()) break;
        }
        r.global_pove();
    });
}

ReductionOutcome kernelize_povs(const Instance& inst) {
    if (inst.problem != Problem::POVS) throw InputError("kernelize_povs needs a povs instance");
    return run_rule(inst, [](Reducer& r) {
        r.global_povs();
        if (r.rejected()) return;
        r.components(true, true);
        if (r.rejected()) return;
        r.non_adjacent();
        r.two_enclosed();
        if (r.rejected()) return;
        r.degree_one();
        r.pendant();
        r.global_povs();
    });
}

ExplosionSet lift_explosion_set(const EditTrace& trace, const ExplosionSet& reduced_witness) {
    std::vector<VertexId> w = reduced_witness.members;
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        if (it->stand_in != kNoVertex) {
            auto pos = std::find(w.begin(), w.end(), it->stand_in);
            if (pos != w.end()) *pos = it->stood_for;
        }
        if (it->forced != kNoVertex) w.push_back(it->forced);
    }
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return {std::move(w)};
}

}  // namespace pw1
