#include "pw1/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

namespace pw1::oracle {

SmallGraph SmallGraph::empty(int n) {
    if (n < 0 || n > 64) throw InputError("small graphs hold at most 64 vertices");
    return SmallGraph{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
}

void SmallGraph::add_edge(int u, int v) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
}

int SmallGraph::degree(int v) const { return std::popcount(adj[v]); }

int SmallGraph::num_edges() const {
    int twice = 0;
    for (auto row : adj) twice += std::popcount(row);
    return twice / 2;
}

SmallGraph to_small(const Graph& g, std::vector<VertexId>* order) {
    const std::vector<VertexId> ids = g.vertices();
    if (ids.size() > 64) throw InputError("oracle size guard: more than 64 vertices");
    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
    SmallGraph s = SmallGraph::empty(static_cast<int>(ids.size()));
    for (auto [u, v] : g.edges()) s.add_edge(index[u], index[v]);
    if (order) *order = ids;
    return s;
}

Graph to_graph(const SmallGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(g.n, edges);
}

namespace {

int count_components(const SmallGraph& g) {
    std::uint64_t left = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
    int comps = 0;
    while (left) {
        std::uint64_t frontier = left & (~left + 1);
        std::uint64_t seen = frontier;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.adj[std::countr_zero(f)];
            frontier = next & ~seen;
            seen |= frontier;
        }
        left &= ~seen;
        ++comps;
    }
    return comps;
}

// Caterpillar forest test on G - removed, where `extra[v]` degree-1 vertices hang off v.
bool caterpillar_forest_with_leaves(const SmallGraph& g, std::uint64_t removed, const std::vector<int>& extra) {
    SmallGraph h = SmallGraph::empty(g.n);
    int alive = 0;
    for (int v = 0; v < g.n; ++v) {
        if ((removed >> v) & 1U) continue;
        ++alive;
        h.adj[v] = g.adj[v] & ~removed;
    }
    // Removed vertices are isolated in h; discount them from the component count.
    const int comps = count_components(h) - (g.n - alive);
    if (h.num_edges() != alive - comps) return false;
    std::uint64_t inner = 0;
    for (int v = 0; v < g.n; ++v)
        if (!((removed >> v) & 1U) && h.degree(v) + extra[v] >= 2) inner |= std::uint64_t{1} << v;
    for (std::uint64_t f = inner; f; f &= f - 1)
        if (std::popcount(h.adj[std::countr_zero(f)] & inner) > 2) return false;
    return true;
}

}  // namespace

bool is_forest(const SmallGraph& g) { return g.num_edges() == g.n - count_components(g); }

bool is_caterpillar_forest(const SmallGraph& g) {
    return caterpillar_forest_with_leaves(g, 0, std::vector<int>(static_cast<std::size_t>(g.n), 0));
}

std::optional<int> brute_pove(const Instance& inst) {
    std::vector<VertexId> order;
    const SmallGraph g = to_small(inst.graph, &order);
    std::vector<int> cand;
    for (int i = 0; i < g.n; ++i)
        if (inst.splittable.contains(order[i])) cand.push_back(i);
    if (cand.size() > 20) throw InputError("oracle size guard: |S| > 20");

    // Exploding W removes it and leaves one degree-1 stub per edge; stubs on edges inside W
    // form separate single edges, which are caterpillars.
    std::optional<int> best;
    const std::uint32_t subsets = std::uint32_t{1} << cand.size();
    for (std::uint32_t sub = 0; sub < subsets; ++sub) {
        const int size = std::popcount(sub);
        if (best && size >= *best) continue;
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < cand.size(); ++i)
            if ((sub >> i) & 1U) w |= std::uint64_t{1} << cand[i];
        std::vector<int> extra(static_cast<std::size_t>(g.n), 0);
        for (int v = 0; v < g.n; ++v)
            if (!((w >> v) & 1U)) extra[v] = std::popcount(g.adj[v] & w);
        if (caterpillar_forest_with_leaves(g, w, extra)) best = size;
    }
    return best;
}

namespace {

struct SplitState {
    SmallGraph g;
    std::uint64_t s = 0;
};

// Relabels by (degree, membership in S, old index). Equal keys mean equal relabeled graphs,
// so merging on the key never joins non-isomorphic states.
std::vector<std::uint64_t> state_key(const SplitState& st) {
    const int n = st.g.n;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const auto ka = std::tuple(st.g.degree(a), (st.s >> a) & 1U, a);
        const auto kb = std::tuple(st.g.degree(b), (st.s >> b) & 1U, b);
        return ka < kb;
    });
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    std::vector<std::uint64_t> key;
    key.reserve(static_cast<std::size_t>(n) + 2);
    key.push_back(static_cast<std::uint64_t>(n));
    std::uint64_t smask = 0;
    for (int i = 0; i < n; ++i) {
        const int v = perm[i];
        if ((st.s >> v) & 1U) smask |= std::uint64_t{1} << i;
        std::uint64_t row = 0;
        for (std::uint64_t f = st.g.adj[v]; f; f &= f - 1) row |= std::uint64_t{1} << pos[std::countr_zero(f)];
        key.push_back(row);
    }
    key.push_back(smask);
    return key;
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : k) h = (h ^ x) * 1099511628211ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

enum class MoveSet { Single, UpToTwo, Any };

template <typename Target, typename Prune>
std::optional<int> split_bfs(const Instance& inst, int cap, MoveSet moves, Target target, Prune prune) {
    std::vector<VertexId> order;
    SplitState start{to_small(inst.graph, &order), 0};
    for (int i = 0; i < start.g.n; ++i)
        if (inst.splittable.contains(order[i])) start.s |= std::uint64_t{1} << i;
    if (start.g.n + cap > 64) throw InputError("oracle size guard: too many vertices for split search");
    if (target(start.g)) return 0;

    std::unordered_set<std::vector<std::uint64_t>, KeyHash> seen{state_key(start)};
    std::vector<SplitState> level{start};
    for (int depth = 1; depth <= cap; ++depth) {
        std::vector<SplitState> next;
        for (const SplitState& st : level) {
            for (int v = 0; v < st.g.n; ++v) {
                if (!((st.s >> v) & 1U)) continue;
                const int d = st.g.degree(v);
                if (d < 2) continue;
                std::vector<int> nb;
                for (std::uint64_t f = st.g.adj[v]; f; f &= f - 1) nb.push_back(std::countr_zero(f));
                std::vector<std::uint64_t> subsets;
                if (moves == MoveSet::Any) {
                    if (d > 20) throw InputError("oracle size guard: degree too large for unrestricted splits");
                    for (std::uint64_t sub = 1; sub + 1 < (std::uint64_t{1} << d); ++sub) subsets.push_back(sub);
                } else {
                    for (int i = 0; i < d; ++i) {
                        subsets.push_back(std::uint64_t{1} << i);
                        if (moves == MoveSet::UpToTwo && d > 2)
                            for (int j = i + 1; j < d; ++j) subsets.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
                    }
                }
                for (std::uint64_t sub : subsets) {
                    SplitState child{st.g, st.s};
                    const int w = child.g.n++;
                    child.g.adj.push_back(0);
                    child.s |= std::uint64_t{1} << w;
                    for (int i = 0; i < d; ++i) {
                        if (!((sub >> i) & 1U)) continue;
                        const int u = nb[i];
                        child.g.adj[v] &= ~(std::uint64_t{1} << u);
                        child.g.adj[u] &= ~(std::uint64_t{1} << v);
                        child.g.add_edge(w, u);
                    }
                    if (!seen.insert(state_key(child)).second) continue;
                    if (target(child.g)) return depth;
                    if (!prune(child.g, cap - depth)) next.push_back(std::move(child));
                }
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> brute_povs(const Instance& inst, int cap, bool unrestricted) {
    return split_bfs(inst, cap, unrestricted ? MoveSet::Any : MoveSet::UpToTwo, is_caterpillar_forest,
                     [](const SmallGraph&, int) { return false; });
}

std::optional<int> brute_povs_single_edge(const Instance& inst, int cap) {
    return split_bfs(inst, cap, MoveSet::Single, is_caterpillar_forest, [](const SmallGraph&, int) { return false; });
}

std::optional<int> brute_tovs(const Instance& inst, int cap, bool two_edge) {
    // A split adds one vertex and at most one component, so the cycle rank m - n + c drops by at
    // most one per step; states whose rank exceeds the steps left are dead ends.
    auto prune = [](const SmallGraph& g, int left) { return g.num_edges() - g.n + count_components(g) > left; };
    return split_bfs(inst, cap, two_edge ? MoveSet::UpToTwo : MoveSet::Single, is_forest, prune);
}

void for_each_labeled_graph(int n, const std::function<void(const SmallGraph&)>& fn) {
    if (n < 0 || n > 8) throw InputError("labeled enumeration supports n <= 8");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        SmallGraph g = SmallGraph::empty(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
        fn(g);
    }
}

std::uint64_t canonical_code(const SmallGraph& g) {
    const int n = g.n;
    if (n > 11) throw InputError("canonical_code supports n <= 11");
    // Cell invariant: degree, then the sorted degrees of the neighbors.
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        inv[v].push_back(g.degree(v));
        std::vector<int> nd;
        for (std::uint64_t f = g.adj[v]; f; f &= f - 1) nd.push_back(g.degree(std::countr_zero(f)));
        std::sort(nd.begin(), nd.end());
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b] || (inv[a] == inv[b] && a < b); });
    std::vector<std::pair<int, int>> cells;  // [begin, end) ranges of equal invariants
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[order[j]] == inv[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }

    auto encode = [&](const std::vector<int>& ord) {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.has_edge(ord[i], ord[j]) ? 1U : 0U);
        return code;
    };

    // Odometer over the permutations of every cell.
    for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
    std::uint64_t best = encode(order);
    for (;;) {
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
            auto [b, e] = cells[c];
            if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
        }
        if (c == cells.size()) break;
        best = std::min(best, encode(order));
    }
    return best;
}

std::vector<SmallGraph> graph_classes(int n) {
    if (n < 0 || n > 8) throw InputError("class enumeration supports n <= 8");
    std::vector<SmallGraph> classes{SmallGraph::empty(0)};
    for (int size = 1; size <= n; ++size) {
        std::map<std::uint64_t, SmallGraph> found;
        for (const SmallGraph& base : classes) {
            const std::uint32_t limit = std::uint32_t{1} << (size - 1);
            for (std::uint32_t nb = 0; nb < limit; ++nb) {
                SmallGraph g = base;
                g.n = size;
                g.adj.push_back(0);
                for (int u = 0; u < size - 1; ++u)
                    if ((nb >> u) & 1U) g.add_edge(u, size - 1);
                found.emplace(canonical_code(g), std::move(g));
            }
        }
        classes.clear();
        for (auto& [code, g] : found) classes.push_back(std::move(g));
    }
    return classes;
}

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Instance generate(const GeneratorParams& params) {
    if (params.n < 0) throw InputError("negative vertex count");
    if (params.extra_edges < 0) throw InputError("negative extra edge count");
    std::mt19937_64 rng(params.seed);
    const int n = params.n;
    std::vector<VertexId> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);

    std::vector<Edge> edges;
    std::set<Edge> present;
    auto add = [&](VertexId u, VertexId v) {
        const Edge e{std::min(u, v), std::max(u, v)};
        if (u == v || !present.insert(e).second) return false;
        edges.push_back(e);
        return true;
    };
    for (int at = 0; at < n;) {
        const int left = n - at;
        const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(left, 40)));
        const int spine = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(size));
        for (int i = 1; i < spine; ++i) add(perm[at + i - 1], perm[at + i]);
        for (int i = spine; i < size; ++i)
            add(perm[at + static_cast<int>(rng() % static_cast<std::uint64_t>(spine))], perm[at + i]);
        at += size;
    }
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    for (int added = 0, tries = 0; added < params.extra_edges && static_cast<long long>(edges.size()) < max_edges &&
                                   tries < 100 * params.extra_edges + 100;
         ++tries) {
        const auto u = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n));
        const auto v = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n));
        if (add(u, v)) ++added;
    }

    Instance inst;
    inst.graph = Graph::from_edges(n, edges);
    for (VertexId v = 0; v < n; ++v)
        if (unit(rng) < params.s_fraction) inst.splittable.insert(v);
    inst.budget = params.budget;
    inst.problem = params.problem;
    return inst;
}

SmallGraph random_small_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SmallGraph g = SmallGraph::empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

std::vector<std::uint64_t> census_masks(int n, int random_count, std::uint64_t seed) {
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> masks{all, 0};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) masks.push_back(rng() & all);
    return masks;
}

}  // namespace pw1::oracle
