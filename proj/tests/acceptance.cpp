// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run directly or through ctest (test name "acceptance").

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semitrans/certificates.hpp"
#include "semitrans/io.hpp"
#include "semitrans/mycielski.hpp"
#include "semitrans/solver.hpp"

using namespace semitrans;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %-38s (%.1f s)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), secs,
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

SolveOptions forced_source(int v) {
    SolveOptions o;
    o.forced_source = v;
    return o;
}

SolveOptions exhaustive_mode() {
    SolveOptions o;
    o.mode = SolveOptions::Mode::Exhaustive;
    return o;
}

bool odd_cycle_mycielskians_unsat(std::string& detail) {
    if (solve(mycielski(make_cycle(3)).graph, exhaustive_mode()).sat()) {
        detail = "mu(C3) reported satisfiable by exhaustive search";
        return false;
    }
    if (solve(mycielski(make_cycle(5)).graph, exhaustive_mode()).sat()) {
        detail = "mu(C5) reported satisfiable by exhaustive search";
        return false;
    }
    auto mu7 = mycielski(make_cycle(7));
    auto r = solve(mu7.graph, forced_source(mu7.apex_vertex()));
    if (r.sat()) {
        detail = "mu(C7) reported satisfiable";
        return false;
    }
    detail = "mu(C7) nodes=" + std::to_string(r.stats.nodes);
    return true;
}

bool extended_odd_cycles_unsat(std::string& detail) {
    auto ext3 = extended_mycielski(make_cycle(3));
    if (solve(ext3.graph, forced_source(ext3.apex_vertex())).sat()) {
        detail = "extended mu(C3) reported satisfiable";
        return false;
    }
    auto ext5 = extended_mycielski(make_cycle(5));
    auto r = solve(ext5.graph, forced_source(ext5.apex_vertex()));
    if (r.sat()) {
        detail = "extended mu(C5) reported satisfiable";
        return false;
    }
    detail = "extended mu(C5) nodes=" + std::to_string(r.stats.nodes);
    return true;
}

bool bipartite_direction(std::string& detail) {
    int checked = 0;
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphEnumerator en(n, true, 5);
        while (auto g = en.next()) {
            auto res = bipartition(*g);
            auto* parts = std::get_if<Bipartition>(&res);
            if (!parts) continue;
            ++checked;
            Orientation built = bipartite_mycielski_orientation(*g, *parts);
            if (!check_semi_transitive(built).semi_transitive() ||
                !check_semi_transitive_reference(built).semi_transitive()) {
                detail = "constructed orientation rejected for n=" + std::to_string(n) +
                         " mask=" + std::to_string(en.last_mask());
                return false;
            }
            if (!solve(mycielski(*g).graph).sat()) {
                detail = "mu(G) unsat for bipartite G, n=" + std::to_string(n) +
                         " mask=" + std::to_string(en.last_mask());
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " bipartite bases";
    return checked == 219;  // 1 + 1 + 3 + 19 + 195 connected bipartite graphs
}

bool converse_direction(std::string& detail) {
    int checked = 0;
    for (int n = 3; n <= 4; ++n) {
        LabeledGraphEnumerator en(n, true, 4);
        while (auto g = en.next()) {
            if (std::holds_alternative<Bipartition>(bipartition(*g))) continue;
            ++checked;
            if (solve(mycielski(*g).graph).sat()) {
                detail = "mu(G) sat for non-bipartite G, n=" + std::to_string(n) +
                         " mask=" + std::to_string(en.last_mask());
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " non-bipartite bases";
    return checked == 20;  // 1 on three vertices, 19 on four
}

bool sweep_classification(std::string& detail) {
    fs::path dir = fs::temp_directory_path() / "semitrans_acceptance";
    fs::create_directories(dir);
    fs::path csv = dir / "sweep.csv";
    fs::path json_path = dir / "sweep.json";
    std::string cmd = std::string(SEMITRANS_CLI_PATH) + " sweep --max-n 4 --csv " +
                      csv.string() + " --json " + json_path.string() + " > " +
                      (dir / "sweep.out").string() + " 2>&1";
    int raw = std::system(cmd.c_str());
    int code = (raw == -1) ? -1 : (WIFEXITED(raw) ? WEXITSTATUS(raw) : -1);
    if (code != 0) {
        detail = "sweep exit code " + std::to_string(code);
        return false;
    }
    std::ifstream jf(json_path);
    if (!jf) {
        detail = "missing sweep.json";
        return false;
    }
    auto j = nlohmann::json::parse(jf);
    const int mismatches = j["summary"]["mismatches"].get<int>();
    const int total = j["summary"]["total"].get<int>();
    detail = std::to_string(total) + " rows, " + std::to_string(mismatches) + " mismatches";
    return mismatches == 0 && total == 44;  // 1 + 1 + 4 + 38 connected labeled graphs
}

bool checker_equivalence(std::string& detail) {
    long long orientations = 0;
    for (int n = 1; n <= 4; ++n) {
        LabeledGraphEnumerator en(n, false, 4);
        while (auto g = en.next()) {
            const int m = g->edge_count();
            for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
                std::vector<std::uint8_t> flags(static_cast<size_t>(m));
                for (int e = 0; e < m; ++e) flags[e] = (mask >> e) & 1;
                Orientation o(*g, std::move(flags));
                Verdict fast = check_semi_transitive(o);
                Verdict ref = check_semi_transitive_reference(o);
                ++orientations;
                if (fast.kind != ref.kind) {
                    detail = "verdict mismatch at n=" + std::to_string(n) +
                             " graph=" + std::to_string(en.last_mask()) +
                             " orientation=" + std::to_string(mask);
                    return false;
                }
                if (!replay_witness(o, fast) || !replay_witness(o, ref)) {
                    detail = "witness replay failed at n=" + std::to_string(n) +
                             " graph=" + std::to_string(en.last_mask()) +
                             " orientation=" + std::to_string(mask);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(orientations) + " orientations";
    return true;
}

bool source_sink_relocation(std::string& detail) {
    std::vector<std::pair<std::string, Graph>> instances = {
        {"C4", make_cycle(4)},       {"C5", make_cycle(5)},  {"C6", make_cycle(6)},
        {"K3", make_complete(3)},    {"K4", make_complete(4)}, {"P4", make_path(4)},
        {"mu(C4)", mycielski(make_cycle(4)).graph},
    };
    for (const auto& [name, g] : instances) {
        auto report = verify_source_theorem(g);
        if (!report.all_pass()) {
            detail = name + " has relocation violations";
            return false;
        }
    }
    detail = std::to_string(instances.size()) + " graphs, every vertex as source and sink";
    return true;
}

bool proof_diagnostics(std::string& detail) {
    for (int nc : {4, 6}) {
        auto mu = mycielski(make_cycle(nc));
        auto result = solve(mu.graph, forced_source(mu.apex_vertex()));
        if (!result.sat()) {
            detail = "no apex-source certificate for mu(C" + std::to_string(nc) + ")";
            return false;
        }
        auto colored = color_cycle(*result.certificate);
        auto* coloring = std::get_if<CycleColoring>(&colored);
        if (!coloring) {
            detail = "mixed shadow directions in mu(C" + std::to_string(nc) + ") certificate";
            return false;
        }
        auto report = check_coloring_properties(*result.certificate, *coloring);
        if (!report.all_pass()) {
            detail = "coloring property failed for mu(C" + std::to_string(nc) + ")";
            return false;
        }
        if (parity_argument(pattern_decomposition(*coloring)) != ParityVerdict::Consistent) {
            detail = "parity inconsistent for mu(C" + std::to_string(nc) + ")";
            return false;
        }
    }
    auto mu5 = mycielski(make_cycle(5));
    if (solve(mu5.graph, forced_source(mu5.apex_vertex())).sat()) {
        detail = "mu(C5) unexpectedly satisfiable";
        return false;
    }
    return true;
}

bool construction_counts(std::string& detail) {
    std::vector<Graph> bases;
    for (int k = 3; k <= 9; ++k) bases.push_back(make_cycle(k));
    for (int k = 1; k <= 6; ++k) bases.push_back(make_path(k));
    for (int k = 1; k <= 4; ++k) bases.push_back(make_complete(k));
    bases.push_back(make_complete_bipartite(2, 3));
    bases.push_back(make_complete_bipartite(1, 5));
    for (int n = 1; n <= 4; ++n) {
        LabeledGraphEnumerator en(n, false, 4);
        while (auto g = en.next()) bases.push_back(*g);
    }
    for (const auto& g : bases) {
        const int n = g.vertex_count();
        const int m = g.edge_count();
        auto mu = mycielski(g);
        auto ext = extended_mycielski(g);
        if (mu.graph.vertex_count() != 2 * n + 1 || mu.graph.edge_count() != 3 * m + n ||
            ext.graph.vertex_count() != 2 * n + 1 ||
            ext.graph.edge_count() != m + n * (n - 1) + n) {
            detail = "count formula violated at n=" + std::to_string(n) +
                     " m=" + std::to_string(m);
            return false;
        }
    }
    for (int k = 2; k <= 4; ++k) {
        Graph kn = make_complete(k);
        if (!(extended_mycielski(kn).graph == mycielski(kn).graph)) {
            detail = "extended and plain Mycielskian differ on K" + std::to_string(k);
            return false;
        }
    }
    detail = std::to_string(bases.size()) + " base graphs";
    return true;
}

}  // namespace

int main() {
    criterion("odd_cycle_mycielskians_unsat", odd_cycle_mycielskians_unsat);
    criterion("extended_odd_cycles_unsat", extended_odd_cycles_unsat);
    criterion("bipartite_direction_sat", bipartite_direction);
    criterion("converse_direction_unsat", converse_direction);
    criterion("sweep_classification", sweep_classification);
    criterion("checker_equivalence", checker_equivalence);
    criterion("source_sink_relocation", source_sink_relocation);
    criterion("proof_diagnostics", proof_diagnostics);
    criterion("construction_counts", construction_counts);

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
