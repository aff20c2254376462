#include "pw1/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pw1/instance_io.hpp"
#include "pw1/layout.hpp"
#include "pw1/oracle.hpp"
#include "pw1/pove.hpp"
#include "pw1/povs.hpp"
#include "pw1/recognition.hpp"
#include "pw1/reduce.hpp"
#include "pw1/tovs.hpp"

namespace pw1::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open " + path);
    buf << file.rdbuf();
    return buf.str();
}

SolveResult solve_any(const Instance& inst, const SolveOptions& opts) {
    switch (inst.problem) {
        case Problem::POVE: return solve_pove(inst, opts);
        case Problem::POVS: return solve_povs(inst, opts);
        case Problem::TOVS: return solve_tovs(inst, opts);
    }
    throw InternalError("unknown problem");
}

void print_layout(std::ostream& out, const LayerPair& layers) {
    out << "layer 1:";
    for (VertexId v : layers.top) out << ' ' << v;
    out << "\nlayer 2:";
    for (VertexId v : layers.bottom) out << ' ' << v;
    out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solvers for pathwidth-one vertex explosion and splitting"};
    app.name("pw1");
    app.require_subcommand(1);

    std::string file, witness_file, dir;
    bool want_witness = false, minimize = false, no_kernel = false, stats = false;

    auto* solve = app.add_subcommand("solve", "Decide the instance; exit 0 for yes, 1 for no");
    solve->add_option("instance", file, "Instance file, - for stdin")->required();
    solve->add_flag("--witness", want_witness, "Print a witness for yes-instances");
    solve->add_flag("--min", minimize, "Report the smallest feasible budget");
    solve->add_flag("--no-kernel", no_kernel, "Branch on the input without kernelizing");
    solve->add_flag("--stats", stats, "Print search statistics as comment lines");

    auto* kernelize = app.add_subcommand("kernelize", "Print the kernel, or 'r no'");
    kernelize->add_option("instance", file, "Instance file, - for stdin")->required();

    auto* verify = app.add_subcommand("verify", "Check a witness against an instance");
    verify->add_option("instance", file, "Instance file")->required();
    verify->add_option("witness", witness_file, "Witness file, - for stdin")->required();

    oracle::GeneratorParams gen;
    std::string gen_problem = "pove";
    auto* generate = app.add_subcommand("generate", "Print a random instance");
    generate->add_option("--n", gen.n, "Vertex count")->check(CLI::NonNegativeNumber);
    generate->add_option("--extra", gen.extra_edges, "Edges added beyond a caterpillar forest")->check(CLI::NonNegativeNumber);
    generate->add_option("--s-fraction", gen.s_fraction, "Probability that a vertex is splittable")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", gen.seed, "Random seed");
    generate->add_option("--k", gen.budget, "Budget")->check(CLI::NonNegativeNumber);
    generate->add_option("--problem", gen_problem, "pove, povs or tovs")->check(CLI::IsMember({"pove", "povs", "tovs"}));

    auto* bench = app.add_subcommand("bench", "Solve every instance file in a directory, CSV on stdout");
    bench->add_option("dir", dir, "Directory of instance files")->required()->check(CLI::ExistingDirectory);

    auto* draw = app.add_subcommand("draw2layer", "Crossing-free two-layer drawing of a pathwidth-one graph");
    draw->add_option("instance", file, "Instance file, - for stdin")->required();
    draw->add_flag("--witness", want_witness, "Apply a solver witness first if the graph needs edits");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kYes : kUsage;
    }

    try {
        if (*solve) {
            const Instance inst = parse_instance(slurp(file, in));
            const SolveResult res = solve_any(inst, {!no_kernel, want_witness, minimize});
            out << "r " << (res.yes ? "yes" : "no") << '\n';
            if (res.minimum) out << "min " << *res.minimum << '\n';
            if (res.witness) out << format_witness(*res.witness);
            if (stats) {
                out << "c nodes " << res.nodes << '\n';
                if (res.kernel_rejected) out << "c kernel rejected\n";
            }
            return res.yes ? kYes : kNo;
        }
        if (*kernelize) {
            const Instance inst = parse_instance(slurp(file, in));
            if (inst.problem == Problem::TOVS) {
                err << "kernelize: tovs has no kernel, it is solved directly\n";
                return kUsage;
            }
            const ReductionOutcome red = inst.problem == Problem::POVE ? kernelize_pove(inst) : kernelize_povs(inst);
            if (red.verdict == Verdict::TrivialNo) {
                out << "r no\n";
                return kNo;
            }
            out << format_instance(relabel_compact(red.reduced));
            return kYes;
        }
        if (*verify) {
            const Instance inst = parse_instance(slurp(file, in));
            const Witness w = parse_witness(slurp(witness_file, in), inst.problem);
            const VerifyResult v = verify_witness(inst, w);
            if (v.ok) {
                out << "valid\n";
                return kYes;
            }
            out << "invalid " << verify_reason_name(v.reason) << ": " << v.detail << '\n';
            return kNo;
        }
        if (*generate) {
            gen.problem = *parse_problem_tag(gen_problem);
            out << format_instance(relabel_compact(oracle::generate(gen)));
            return kYes;
        }
        if (*bench) {
            std::vector<std::filesystem::path> files;
            for (const auto& entry : std::filesystem::directory_iterator(dir))
                if (entry.is_regular_file()) files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            out << "instance,n,m,k,decision,nodes,millis\n";
            for (const auto& path : files) {
                const Instance inst = parse_instance(slurp(path.string(), in));
                const auto start = std::chrono::steady_clock::now();
                const SolveResult res = solve_any(inst, {});
                const auto ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                std::ostringstream millis;
                millis.setf(std::ios::fixed);
                millis.precision(3);
                millis << ms;
                out << path.filename().string() << ',' << inst.graph.num_vertices() << ',' << inst.graph.num_edges()
                    << ',' << inst.budget << ',' << (res.yes ? "yes" : "no") << ',' << res.nodes << ','
                    << millis.str() << '\n';
            }
            return kYes;
        }
        if (*draw) {
            const Instance inst = parse_instance(slurp(file, in));
            Graph g = inst.graph;
            if (want_witness && !has_pathwidth_le_one(g)) {
                if (inst.problem == Problem::TOVS) throw InputError("tovs witnesses target forests, not pathwidth one");
                const SolveResult res = solve_any(inst, {true, true, false});
                if (!res.yes) {
                    out << "r no\n";
                    return kNo;
                }
                if (const auto* e = std::get_if<ExplosionSet>(&*res.witness))
                    g = apply_explosion_set(inst, *e);
                else
                    g = apply_split_sequence(inst, std::get<SplitSequence>(*res.witness)).graph;
            }
            if (!has_pathwidth_le_one(g)) {
                err << "draw2layer: graph has pathwidth > 1\n";
                return kNo;
            }
            print_layout(out, two_layer_layout(g).combined);
            return kYes;
        }
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace pw1::cli
