#include "pw1/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace pw1 {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

long long integer(std::string_view tok, std::size_t line, const char* what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        ++line_no;
        fn(line_no, line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::optional<Instance> inst;
    long long n = 0, m = 0;
    bool seen_s = false;
    std::vector<Edge> edges;
    std::set<Edge> present;
    std::size_t last_line = 0;

    auto vertex = [&](std::string_view tok, std::size_t line) {
        const long long v = integer(tok, line, "a vertex id");
        if (v < 1 || v > n) throw ParseError(line, "vertex id " + std::string(tok) + " outside 1.." + std::to_string(n));
        return static_cast<VertexId>(v);
    };

    for_each_line(text, [&](std::size_t line, std::string_view raw) {
        last_line = line;
        const auto tok = tokens(raw);
        if (tok.empty() || tok[0] == "c") return;
        if (tok[0] == "p") {
            if (inst) throw ParseError(line, "second header line");
            if (tok.size() != 5) throw ParseError(line, "header needs: p <problem> <n> <m> <k>");
            const auto problem = parse_problem_tag(tok[1]);
            if (!problem) throw ParseError(line, "unknown problem '" + std::string(tok[1]) + "'");
            n = integer(tok[2], line, "n");
            m = integer(tok[3], line, "m");
            const long long k = integer(tok[4], line, "k");
            if (n < 0 || n > std::numeric_limits<VertexId>::max() - 1) throw ParseError(line, "vertex count out of range");
            if (m < 0 || m > n * (n - 1) / 2) throw ParseError(line, "edge count out of range");
            if (k < 0 || k > std::numeric_limits<int>::max()) throw ParseError(line, "budget out of range");
            inst.emplace();
            inst->problem = *problem;
            inst->budget = static_cast<int>(k);
            edges.reserve(static_cast<std::size_t>(m));
            return;
        }
        if (!inst) throw ParseError(line, "directive before the header");
        if (tok[0] == "s") {
            if (seen_s) throw ParseError(line, "second s line");
            if (!edges.empty()) throw ParseError(line, "s line after edges");
            seen_s = true;
            if (tok.size() < 2) throw ParseError(line, "s line needs a count");
            const long long count = integer(tok[1], line, "the S count");
            if (count < 0 || static_cast<std::size_t>(count) != tok.size() - 2)
                throw ParseError(line, "s count " + std::string(tok[1]) + " does not match " +
                                           std::to_string(tok.size() - 2) + " listed ids");
            for (std::size_t i = 2; i < tok.size(); ++i) {
                const VertexId v = vertex(tok[i], line);
                if (inst->splittable.contains(v)) throw ParseError(line, "vertex " + std::to_string(v) + " listed twice");
                inst->splittable.insert(v);
            }
            return;
        }
        if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(line, "edge line needs: e <u> <v>");
            const VertexId u = vertex(tok[1], line), v = vertex(tok[2], line);
            if (u == v) throw ParseError(line, "self-loop at " + std::to_string(u));
            const Edge e{std::min(u, v), std::max(u, v)};
            if (!present.insert(e).second)
                throw ParseError(line, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
            if (static_cast<long long>(edges.size()) == m) throw ParseError(line, "more than m = " + std::to_string(m) + " edges");
            edges.push_back(e);
            return;
        }
        throw ParseError(line, "unknown directive '" + std::string(tok[0]) + "'");
    });

    if (!inst) throw ParseError(0, "missing header line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(last_line, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    std::vector<VertexId> ids(static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i) ids[i] = i + 1;
    inst->graph = Graph::from_edges(ids, edges);
    if (!seen_s)
        for (VertexId v : ids) inst->splittable.insert(v);
    return std::move(*inst);
}

Instance relabel_compact(const Instance& inst) {
    const std::vector<VertexId> ids = inst.graph.vertices();
    std::map<VertexId, VertexId> to;
    for (std::size_t i = 0; i < ids.size(); ++i) to[ids[i]] = static_cast<VertexId>(i + 1);
    std::vector<VertexId> new_ids(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) new_ids[i] = static_cast<VertexId>(i + 1);
    std::vector<Edge> edges;
    for (auto [u, v] : inst.graph.edges()) edges.emplace_back(to[u], to[v]);
    Instance out;
    out.graph = Graph::from_edges(new_ids, edges);
    for (VertexId v : inst.splittable.to_vector())
        if (inst.graph.contains(v)) out.splittable.insert(to[v]);
    out.budget = inst.budget;
    out.problem = inst.problem;
    return out;
}

std::string format_instance(const Instance& inst) {
    const std::vector<VertexId> ids = inst.graph.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != static_cast<VertexId>(i + 1)) throw InputError("format_instance needs vertex ids 1..n");
    std::string out = "p ";
    out += problem_tag(inst.problem);
    out += " " + std::to_string(ids.size()) + " " + std::to_string(inst.graph.num_edges()) + " " +
           std::to_string(inst.budget) + "\n";
    const std::vector<VertexId> s = inst.splittable.to_vector();
    if (s.size() != ids.size()) {
        out += "s " + std::to_string(s.size());
        for (VertexId v : s) out += " " + std::to_string(v);
        out += "\n";
    }
    for (auto [u, v] : inst.graph.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Witness parse_witness(std::string_view text, Problem problem) {
    ExplosionSet explosions;
    SplitSequence splits;
    for_each_line(text, [&](std::size_t line, std::string_view raw) {
        const auto tok = tokens(raw);
        if (tok.empty() || tok[0] == "c" || tok[0] == "r" || tok[0] == "min") return;
        if (tok[0] != "w" || tok.size() < 3) throw ParseError(line, "expected a witness line");
        auto id = [&](std::string_view t) {
            const long long v = integer(t, line, "a vertex id");
            if (v < 0 || v > std::numeric_limits<VertexId>::max()) throw ParseError(line, "vertex id out of range");
            return static_cast<VertexId>(v);
        };
        if (tok[1] == "explode") {
            if (problem != Problem::POVE) throw ParseError(line, "explosions only apply to pove");
            if (tok.size() != 3) throw ParseError(line, "w explode takes one vertex");
            explosions.members.push_back(id(tok[2]));
        } else if (tok[1] == "split") {
            if (problem == Problem::POVE) throw ParseError(line, "splits do not apply to pove");
            if (tok.size() < 4) throw ParseError(line, "w split needs: <v> <d> <u1> ... <ud>");
            const long long d = integer(tok[3], line, "the moved count");
            if (d < 0 || static_cast<std::size_t>(d) != tok.size() - 4)
                throw ParseError(line, "split count does not match the listed neighbors");
            SplitStep step{id(tok[2]), {}};
            for (std::size_t i = 4; i < tok.size(); ++i) step.moved.push_back(id(tok[i]));
            splits.steps.push_back(std::move(step));
        } else {
            throw ParseError(line, "unknown witness kind '" + std::string(tok[1]) + "'");
        }
    });
    if (problem == Problem::POVE) return explosions;
    return splits;
}

std::string format_witness(const Witness& w) {
    std::string out;
    if (const auto* e = std::get_if<ExplosionSet>(&w)) {
        for (VertexId v : e->members) out += "w explode " + std::to_string(v) + "\n";
        return out;
    }
    for (const SplitStep& step : std::get<SplitSequence>(w).steps) {
        out += "w split " + std::to_string(step.vertex) + " " + std::to_string(step.moved.size());
        for (VertexId u : step.moved) out += " " + std::to_string(u);
        out += "\n";
    }
    return out;
}

}  // namespace pw1
