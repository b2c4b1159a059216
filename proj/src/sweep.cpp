#include "semitrans/sweep.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

#include "semitrans/mycielski.hpp"

namespace semitrans {

namespace {

void classify(const Graph& g, const std::string& id, const SweepOptions& opts,
              SweepReport& report) {
    SweepRow row;
    row.id = id;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.bipartite = std::holds_alternative<Bipartition>(bipartition(g));

    SolveResult mu_result = solve(mycielski(g).graph);
    row.mu_sat = mu_result.sat();
    row.nodes = mu_result.stats.nodes;
    row.millis = mu_result.stats.millis;

    bool mismatch = row.mu_sat != row.bipartite;
    if (opts.extended) {
        SolveResult ext_result = solve(extended_mycielski(g).graph);
        row.mu_ext_sat = ext_result.sat();
        row.ext_nodes = ext_result.stats.nodes;
        row.ext_millis = ext_result.stats.millis;
        mismatch = mismatch || (*row.mu_ext_sat != row.bipartite);
    }
    if (mismatch) report.mismatch_ids.push_back(id);
    report.rows.push_back(std::move(row));
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opts) {
    SweepReport report;
    for (int n = 1; n <= opts.max_n; ++n) {
        LabeledGraphEnumerator en(n, opts.connected_only, opts.enumeration_cap);
        while (auto g = en.next()) {
            std::string id = "g" + std::to_string(n) + "_" + std::to_string(en.last_mask());
            classify(*g, id, opts, report);
        }
    }
    if (!opts.family.empty()) {
        for (int k = opts.family_from; k <= opts.family_to; ++k) {
            Graph g;
            if (opts.family == "cycle")
                g = make_cycle(k);
            else if (opts.family == "path")
                g = make_path(k);
            else if (opts.family == "complete")
                g = make_complete(k);
            else
                throw std::invalid_argument("run_sweep: unknown family " + opts.family);
            classify(g, opts.family + "_" + std::to_string(k), opts, report);
        }
    }
    return report;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report, bool extended) {
    out << "id,n,m,bipartite,mu_decision,nodes,millis";
    if (extended) out << ",mu_ext_decision,ext_nodes,ext_millis";
    out << '\n';
    for (const auto& row : report.rows) {
        out << row.id << ',' << row.n << ',' << row.m << ','
            << (row.bipartite ? "true" : "false") << ','
            << (row.mu_sat ? "sat" : "unsat") << ',' << row.nodes << ',' << row.millis;
        if (extended)
            out << ',' << (row.mu_ext_sat && *row.mu_ext_sat ? "sat" : "unsat") << ','
                << row.ext_nodes << ',' << row.ext_millis;
        out << '\n';
    }
}

nlohmann::json sweep_report_to_json(const SweepReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json j{{"id", row.id},
                         {"n", row.n},
                         {"m", row.m},
                         {"bipartite", row.bipartite},
                         {"mu_decision", row.mu_sat ? "sat" : "unsat"},
                         {"nodes", row.nodes},
                         {"millis", row.millis}};
        if (row.mu_ext_sat) {
            j["mu_ext_decision"] = *row.mu_ext_sat ? "sat" : "unsat";
            j["ext_nodes"] = row.ext_nodes;
            j["ext_millis"] = row.ext_millis;
        }
        rows.push_back(std::move(j));
    }
    return nlohmann::json{{"rows", std::move(rows)},
                          {"summary",
                           {{"total", report.rows.size()},
                            {"mismatches", report.mismatch_ids.size()},
                            {"mismatch_ids", report.mismatch_ids}}}};
}

nlohmann::json solve_result_to_json(const SolveResult& result) {
    nlohmann::json j;
    j["outcome"] = result.sat() ? "sat" : "unsat";
    if (result.sat()) {
        nlohmann::json cert = nlohmann::json::array();
        for (auto [t, h] : result.certificate->arcs()) cert.push_back({t, h});
        j["certificate"] = std::move(cert);
    } else {
        j["certificate"] = nullptr;
    }
    j["stats"] = {{"nodes", result.stats.nodes},
                  {"cycle_prunes", result.stats.cycle_prunes},
                  {"shortcut_prunes", result.stats.shortcut_prunes},
                  {"millis", result.stats.millis}};
    return j;
}

namespace {

nlohmann::json property_to_json(const ColoringPropertyReport::Property& p) {
    return {{"pass", p.pass}, {"violations", p.violations}};
}

}  // namespace

nlohmann::json coloring_property_report_to_json(const ColoringPropertyReport& report) {
    return {{"blue_to_red_edges", property_to_json(report.blue_to_red_edges)},
            {"two_path_forward", property_to_json(report.two_path_forward)},
            {"two_path_backward", property_to_json(report.two_path_backward)},
            {"odd_runs", property_to_json(report.odd_runs)},
            {"all_pass", report.all_pass()}};
}

nlohmann::json pattern_decomposition_to_json(const PatternDecomposition& decomposition) {
    nlohmann::json runs = nlohmann::json::array();
    for (auto [color, len] : decomposition.runs)
        runs.push_back({{"color", color == PatternColor::Blue ? "blue" : "red"},
                        {"length", len}});
    return {{"runs", std::move(runs)}};
}

}  // namespace semitrans
