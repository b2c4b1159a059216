#include "semitrans/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace semitrans {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("parse error: " + what);
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    return f;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) parse_fail("expected header line \"n m\"");
    if (m < 0) parse_fail("negative edge count");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) parse_fail("expected edge line " + std::to_string(i + 1));
        es.emplace_back(u, v);
    }
    return Graph(n, std::move(es));
}

Graph read_edge_list_file(const std::string& path) {
    auto f = open_or_fail(path);
    return read_edge_list(f);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write file: " + path);
    write_edge_list(f, g);
}

Orientation read_orientation(std::istream& in) {
    Graph g = read_edge_list(in);
    std::vector<std::pair<int, int>> dirs;
    dirs.reserve(static_cast<size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) {
        std::string tag;
        if (!(in >> tag)) parse_fail("expected orient line " + std::to_string(i + 1));
        if (tag != "orient:") parse_fail("expected \"orient:\" tag, got \"" + tag + "\"");
        std::string spec;
        if (!(in >> spec)) parse_fail("expected direction after orient:");
        auto gt = spec.find('>');
        if (gt == std::string::npos) parse_fail("direction must look like u>v: " + spec);
        try {
            int t = std::stoi(spec.substr(0, gt));
            int h = std::stoi(spec.substr(gt + 1));
            dirs.emplace_back(t, h);
        } catch (const std::exception&) {
            parse_fail("bad direction: " + spec);
        }
    }
    return orient(g, dirs);
}

Orientation read_orientation_file(const std::string& path) {
    auto f = open_or_fail(path);
    return read_orientation(f);
}

void write_orientation(std::ostream& out, const Orientation& o) {
    write_edge_list(out, o.base());
    for (int e = 0; e < o.base().edge_count(); ++e) {
        auto [t, h] = o.arc(e);
        out << "orient: " << t << '>' << h << '\n';
    }
}

void write_orientation_file(const std::string& path, const Orientation& o) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write file: " + path);
    write_orientation(f, o);
}

nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    switch (v.kind) {
        case Verdict::Kind::SemiTransitive:
            j["verdict"] = "semi_transitive";
            break;
        case Verdict::Kind::Cyclic:
            j["verdict"] = "cyclic";
            j["witness"] = {{"cycle", v.cycle->cycle}};
            break;
        case Verdict::Kind::HasShortcut:
            j["verdict"] = "has_shortcut";
            j["witness"] = {
                {"path", v.shortcut->path},
                {"shortcut_edge", {v.shortcut->shortcut_edge.first, v.shortcut->shortcut_edge.second}},
                {"violation", {v.shortcut->violation.first, v.shortcut->violation.second}},
            };
            break;
    }
    return j;
}

std::string to_dot(const Graph& g, const Orientation* o, std::optional<int> mycielski_base_n) {
    if (mycielski_base_n && g.vertex_count() != 2 * *mycielski_base_n + 1)
        throw std::invalid_argument("to_dot: base size does not match vertex count");
    if (o && !(o->base() == g))
        throw std::invalid_argument("to_dot: orientation is for a different graph");

    std::ostringstream out;
    const bool directed = o != nullptr;
    out << (directed ? "digraph" : "graph") << " G {\n";

    if (mycielski_base_n) {
        const int bn = *mycielski_base_n;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v < bn)
                out << "  " << v << " [label=\"" << v << "\", role=original, base=" << v << "];\n";
            else if (v < 2 * bn)
                out << "  " << v << " [label=\"" << (v - bn) << "'\", role=shadow, base="
                    << (v - bn) << "];\n";
            else
                out << "  " << v << " [label=\"x\", role=apex];\n";
        }
        auto rank_group = [&](int from, int to) {
            out << "  { rank=same;";
            for (int v = from; v < to; ++v) out << ' ' << v << ';';
            out << " }\n";
        };
        if (bn > 0) {
            rank_group(0, bn);
            rank_group(bn, 2 * bn);
        }
        out << "  { rank=same; " << 2 * bn << "; }\n";
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    }

    if (directed) {
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [t, h] = o->arc(e);
            out << "  " << t << " -> " << h << ";\n";
        }
    } else {
        for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace semitrans
