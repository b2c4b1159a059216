// semitrans: build Mycielski-type graphs, check orientations for
// semi-transitivity, search for semi-transitive orientations, and run the
// bipartite-classification sweep.
//
// Exit codes: 0 success / SemiTransitive / Sat / clean sweep;
//             1 usage or parse error (also enumeration cap exceeded);
//             2 Cyclic; 3 HasShortcut; 4 Unsat or sweep mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "semitrans/certificates.hpp"
#include "semitrans/io.hpp"
#include "semitrans/mycielski.hpp"
#include "semitrans/solver.hpp"
#include "semitrans/sweep.hpp"

namespace {

using namespace semitrans;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCyclic = 2;
constexpr int kExitShortcut = 3;
constexpr int kExitUnsat = 4;

struct BuildArgs {
    std::string family;
    std::vector<int> sizes;
    std::string transform = "none";
    std::string input;
    std::string output;
};

int run_build(const BuildArgs& args) {
    Graph g;
    if (args.family == "cycle" || args.family == "path" || args.family == "complete") {
        if (args.sizes.size() != 1) {
            std::cerr << "build: family " << args.family << " takes one size\n";
            return kExitUsage;
        }
        int k = args.sizes[0];
        g = args.family == "cycle" ? make_cycle(k)
                                   : args.family == "path" ? make_path(k) : make_complete(k);
    } else if (args.family == "complete_bipartite") {
        if (args.sizes.size() != 2) {
            std::cerr << "build: complete_bipartite takes two sizes\n";
            return kExitUsage;
        }
        g = make_complete_bipartite(args.sizes[0], args.sizes[1]);
    } else if (args.family == "from-file") {
        if (args.input.empty()) {
            std::cerr << "build: from-file requires --input\n";
            return kExitUsage;
        }
        g = read_edge_list_file(args.input);
    } else {
        std::cerr << "build: unknown family " << args.family << '\n';
        return kExitUsage;
    }

    std::optional<int> base_n;
    if (args.transform == "mycielski") {
        auto lg = mycielski(g);
        base_n = lg.base_n;
        g = lg.graph;
    } else if (args.transform == "extended") {
        auto lg = extended_mycielski(g);
        base_n = lg.base_n;
        g = lg.graph;
    } else if (args.transform != "none") {
        std::cerr << "build: unknown transform " << args.transform << '\n';
        return kExitUsage;
    }

    write_edge_list_file(args.output, g);
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count();
    if (base_n) std::cout << " base_n=" << *base_n;
    std::cout << '\n';
    return kExitOk;
}

int run_check(const std::string& graph_path, const std::string& orient_path) {
    Graph g = read_edge_list_file(graph_path);
    Orientation o = read_orientation_file(orient_path);
    if (!(o.base() == g)) {
        std::cerr << "check: orientation file is for a different graph\n";
        return kExitUsage;
    }
    Verdict v = check_semi_transitive(o);
    std::cout << verdict_to_json(v).dump(2) << '\n';
    switch (v.kind) {
        case Verdict::Kind::SemiTransitive: return kExitOk;
        case Verdict::Kind::Cyclic: return kExitCyclic;
        case Verdict::Kind::HasShortcut: return kExitShortcut;
    }
    return kExitUsage;
}

int run_solve(const std::string& graph_path, std::optional<int> source,
              std::optional<int> sink, const std::string& mode, std::string cert_path) {
    Graph g = read_edge_list_file(graph_path);
    SolveOptions opts;
    opts.forced_source = source;
    opts.forced_sink = sink;
    if (mode == "exhaustive")
        opts.mode = SolveOptions::Mode::Exhaustive;
    else if (mode == "backtracking")
        opts.mode = SolveOptions::Mode::Backtracking;
    else if (mode != "auto") {
        std::cerr << "solve: unknown mode " << mode << '\n';
        return kExitUsage;
    }
    SolveResult result = solve(g, opts);
    std::cout << solve_result_to_json(result).dump(2) << '\n';
    if (!result.sat()) return kExitUnsat;
    if (cert_path.empty()) cert_path = graph_path + ".cert";
    write_orientation_file(cert_path, *result.certificate);
    std::cerr << "certificate written to " << cert_path << '\n';
    return kExitOk;
}

int run_sweep_cmd(const SweepOptions& opts, const std::string& csv_path,
                  const std::string& json_path) {
    SweepReport report = run_sweep(opts);
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) {
            std::cerr << "sweep: cannot write " << csv_path << '\n';
            return kExitUsage;
        }
        write_sweep_csv(f, report, opts.extended);
    } else {
        write_sweep_csv(std::cout, report, opts.extended);
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "sweep: cannot write " << json_path << '\n';
            return kExitUsage;
        }
        f << sweep_report_to_json(report).dump(2) << '\n';
    }
    std::cerr << "rows=" << report.rows.size() << " mismatches=" << report.mismatch_ids.size()
              << '\n';
    return report.ok() ? kExitOk : kExitUnsat;
}

int run_export_dot(const std::string& graph_path, const std::string& orient_path,
                   std::optional<int> base_n, const std::string& output) {
    Graph g = read_edge_list_file(graph_path);
    std::optional<Orientation> o;
    if (!orient_path.empty()) {
        o = read_orientation_file(orient_path);
        if (!(o->base() == g)) {
            std::cerr << "export-dot: orientation file is for a different graph\n";
            return kExitUsage;
        }
    }
    std::string dot = to_dot(g, o ? &*o : nullptr, base_n);
    if (output.empty()) {
        std::cout << dot;
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "export-dot: cannot write " << output << '\n';
            return kExitUsage;
        }
        f << dot;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-transitive orientation toolkit"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "construct a graph family, optionally Mycielski-transformed");
    build->add_option("family", build_args.family,
                      "cycle | path | complete | complete_bipartite | from-file")
        ->required();
    build->add_option("sizes", build_args.sizes, "family size parameters");
    build->add_option("--transform", build_args.transform, "none | mycielski | extended");
    build->add_option("--input", build_args.input, "edge-list input for from-file");
    build->add_option("-o,--output", build_args.output, "edge-list output path")->required();

    std::string check_graph, check_orient;
    auto* check = app.add_subcommand("check", "verdict for a given orientation");
    check->add_option("graph", check_graph, "edge-list file")->required();
    check->add_option("orientation", check_orient, "orientation file")->required();

    std::string solve_graph, solve_mode = "auto", solve_cert;
    std::optional<int> solve_source, solve_sink;
    auto* solve_cmd = app.add_subcommand("solve", "search for a semi-transitive orientation");
    solve_cmd->add_option("graph", solve_graph, "edge-list file")->required();
    solve_cmd->add_option("--source", solve_source, "force this vertex to be a source");
    solve_cmd->add_option("--sink", solve_sink, "force this vertex to be a sink");
    solve_cmd->add_option("--mode", solve_mode, "auto | exhaustive | backtracking");
    solve_cmd->add_option("--cert", solve_cert, "certificate output path (default <graph>.cert)");

    SweepOptions sweep_opts;
    std::string sweep_csv, sweep_json;
    auto* sweep_cmd = app.add_subcommand("sweep", "classification sweep: bipartite vs Mycielskian decision");
    sweep_cmd->add_option("--max-n", sweep_opts.max_n, "enumerate labeled graphs on 1..N vertices");
    sweep_cmd->add_flag("!--include-disconnected", sweep_opts.connected_only,
                        "also enumerate disconnected graphs");
    sweep_cmd->add_option("--cap", sweep_opts.enumeration_cap, "enumeration size cap");
    sweep_cmd->add_option("--family", sweep_opts.family, "cycle | path | complete");
    sweep_cmd->add_option("--from", sweep_opts.family_from, "first family size");
    sweep_cmd->add_option("--to", sweep_opts.family_to, "last family size");
    sweep_cmd->add_flag("--extended", sweep_opts.extended, "also classify extended Mycielskians");
    sweep_cmd->add_option("--csv", sweep_csv, "CSV output path (default stdout)");
    sweep_cmd->add_option("--json", sweep_json, "JSON report output path");

    std::string dot_graph, dot_orient, dot_out;
    std::optional<int> dot_base_n;
    auto* dot_cmd = app.add_subcommand("export-dot", "DOT drawing, three-layer for Mycielskians");
    dot_cmd->add_option("graph", dot_graph, "edge-list file")->required();
    dot_cmd->add_option("--orientation", dot_orient, "orientation file (directed output)");
    dot_cmd->add_option("--mycielski-base", dot_base_n, "base size for role annotations");
    dot_cmd->add_option("-o,--output", dot_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) return run_build(build_args);
        if (check->parsed()) return run_check(check_graph, check_orient);
        if (solve_cmd->parsed())
            return run_solve(solve_graph, solve_source, solve_sink, solve_mode, solve_cert);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_opts, sweep_csv, sweep_json);
        if (dot_cmd->parsed()) return run_export_dot(dot_graph, dot_orient, dot_base_n, dot_out);
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
