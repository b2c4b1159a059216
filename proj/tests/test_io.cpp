#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "semitrans/io.hpp"
#include "semitrans/mycielski.hpp"
#include "semitrans/sweep.hpp"

using namespace semitrans;

TEST_SUITE_BEGIN("io");

TEST_CASE("edge list round trip") {
    Graph g = mycielski(make_cycle(4)).graph;
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);

    std::stringstream empty_graph("0 0\n");
    CHECK(read_edge_list(empty_graph) == Graph());
}

TEST_CASE("edge list writer output is sorted") {
    std::stringstream ss;
    write_edge_list(ss, Graph(3, {{2, 1}, {1, 0}}));
    CHECK(ss.str() == "3 2\n0 1\n1 2\n");
}

TEST_CASE("edge list parse errors") {
    auto fails = [](const std::string& text) {
        std::stringstream ss(text);
        CHECK_THROWS_AS(read_edge_list(ss), std::invalid_argument);
    };
    fails("");
    fails("3");
    fails("3 2\n0 1\n");      // missing edge line
    fails("3 1\n0 3\n");      // endpoint out of range
    fails("3 1\n1 1\n");      // self-loop
    fails("3 2\n0 1\n1 0\n"); // duplicate
    fails("3 -1\n");
}

TEST_CASE("orientation round trip") {
    Graph c4 = make_cycle(4);
    Orientation o = orient(c4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::stringstream ss;
    write_orientation(ss, o);
    Orientation back = read_orientation(ss);
    CHECK(back == o);

    std::stringstream text("4 4\n0 1\n0 3\n1 2\n2 3\norient: 1>0\norient: 0>3\n"
                           "orient: 1>2\norient: 3>2\n");
    Orientation parsed = read_orientation(text);
    CHECK(parsed.is_arc(1, 0));
    CHECK(parsed.is_arc(3, 2));
}

TEST_CASE("orientation parse errors") {
    auto fails = [](const std::string& text) {
        std::stringstream ss(text);
        CHECK_THROWS_AS(read_orientation(ss), std::invalid_argument);
    };
    fails("3 1\n0 1\n");                        // missing orient line
    fails("3 1\n0 1\ndirection: 0>1\n");        // wrong tag
    fails("3 1\n0 1\norient: 0-1\n");           // bad separator
    fails("3 1\n0 1\norient: 0>2\n");           // not an edge
    fails("3 2\n0 1\n1 2\norient: 0>1\norient: 1>0\n");  // duplicate + missing
}

TEST_CASE("verdict json shapes") {
    Orientation tri = orient(make_complete(3), {{0, 1}, {1, 2}, {0, 2}});
    auto ok = verdict_to_json(check_semi_transitive(tri));
    CHECK(ok["verdict"] == "semi_transitive");
    CHECK_FALSE(ok.contains("witness"));

    Orientation cyc = orient(make_complete(3), {{0, 1}, {1, 2}, {2, 0}});
    auto jc = verdict_to_json(check_semi_transitive(cyc));
    CHECK(jc["verdict"] == "cyclic");
    CHECK(jc["witness"]["cycle"] == nlohmann::json({0, 1, 2, 0}));

    Orientation sc = orient(make_cycle(4), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto js = verdict_to_json(check_semi_transitive(sc));
    CHECK(js["verdict"] == "has_shortcut");
    CHECK(js["witness"]["path"] == nlohmann::json({0, 1, 2, 3}));
    CHECK(js["witness"]["shortcut_edge"] == nlohmann::json({0, 3}));
    CHECK(js["witness"]["violation"] == nlohmann::json({0, 2}));
}

TEST_CASE("solve result json") {
    auto sat = solve(make_cycle(4));
    auto j = solve_result_to_json(sat);
    CHECK(j["outcome"] == "sat");
    CHECK(j["certificate"].is_array());
    CHECK(j["certificate"].size() == 4);
    CHECK(j["stats"].contains("nodes"));
    CHECK(j["stats"].contains("cycle_prunes"));
    CHECK(j["stats"].contains("shortcut_prunes"));
    CHECK(j["stats"].contains("millis"));

    auto unsat = solve(mycielski(make_cycle(3)).graph);
    auto ju = solve_result_to_json(unsat);
    CHECK(ju["outcome"] == "unsat");
    CHECK(ju["certificate"].is_null());
}

TEST_CASE("coloring report and decomposition json") {
    Graph c4 = make_cycle(4);
    auto parts = std::get<Bipartition>(bipartition(c4));
    Orientation o = bipartite_mycielski_orientation(c4, parts);
    auto coloring = std::get<CycleColoring>(color_cycle(o));

    auto report = coloring_property_report_to_json(check_coloring_properties(o, coloring));
    CHECK(report["all_pass"] == true);
    CHECK(report["blue_to_red_edges"]["pass"] == true);
    CHECK(report["blue_to_red_edges"]["violations"].empty());
    CHECK(report.contains("two_path_forward"));
    CHECK(report.contains("two_path_backward"));
    CHECK(report.contains("odd_runs"));

    auto dec = pattern_decomposition_to_json(pattern_decomposition(coloring));
    REQUIRE(dec["runs"].size() == 1);
    CHECK(dec["runs"][0]["color"] == "blue");
    CHECK(dec["runs"][0]["length"] == 4);
}

TEST_CASE("dot export") {
    Graph c3 = make_complete(3);
    std::string undirected = to_dot(c3);
    CHECK(undirected.find("graph G {") == 0);
    CHECK(undirected.find("0 -- 1;") != std::string::npos);
    CHECK(undirected.find("->") == std::string::npos);

    Orientation o = orient(c3, {{0, 1}, {1, 2}, {0, 2}});
    std::string directed = to_dot(c3, &o);
    CHECK(directed.find("digraph G {") == 0);
    CHECK(directed.find("0 -> 1;") != std::string::npos);

    auto mu = mycielski(make_cycle(5));
    std::string roles = to_dot(mu.graph, nullptr, mu.base_n);
    CHECK(roles.find("role=original") != std::string::npos);
    CHECK(roles.find("role=shadow") != std::string::npos);
    CHECK(roles.find("role=apex") != std::string::npos);
    CHECK(roles.find("label=\"2'\"") != std::string::npos);
    CHECK(roles.find("rank=same") != std::string::npos);

    CHECK_THROWS_AS(to_dot(c3, nullptr, 5), std::invalid_argument);
    Orientation other = orient(make_path(2), {{0, 1}});
    CHECK_THROWS_AS(to_dot(c3, &other), std::invalid_argument);
}

TEST_CASE("sweep report over tiny graphs") {
    SweepOptions opts;
    opts.max_n = 3;
    auto report = run_sweep(opts);
    CHECK(report.ok());
    CHECK(report.rows.size() == 6);  // 1 + 1 + 4 connected labeled graphs

    std::ostringstream csv;
    write_sweep_csv(csv, report, false);
    CHECK(csv.str().find("id,n,m,bipartite,mu_decision,nodes,millis\n") == 0);
    CHECK(csv.str().find("g3_7,3,3,false,unsat") != std::string::npos);  // the triangle row

    auto j = sweep_report_to_json(report);
    CHECK(j["summary"]["mismatches"] == 0);
    CHECK(j["rows"].size() == 6);
}

TEST_CASE("family sweep with extended column") {
    SweepOptions opts;
    opts.family = "cycle";
    opts.family_from = 3;
    opts.family_to = 4;
    opts.extended = true;
    auto report = run_sweep(opts);
    CHECK(report.ok());
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].id == "cycle_3");
    CHECK_FALSE(report.rows[0].mu_sat);
    CHECK(report.rows[0].mu_ext_sat.has_value());
    CHECK_FALSE(*report.rows[0].mu_ext_sat);
    CHECK(report.rows[1].mu_sat);
    CHECK(*report.rows[1].mu_ext_sat);

    std::ostringstream csv;
    write_sweep_csv(csv, report, true);
    CHECK(csv.str().find("mu_ext_decision") != std::string::npos);
}

TEST_SUITE_END();
