#include "srgdist/edgelist.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace srg {

void export_graph(const Graph& g, std::ostream& out, GraphFormat format) {
    auto edges = g.edges();
    if (format == GraphFormat::EdgeList) {
        out << g.order() << ' ' << edges.size() << '\n';
        for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    } else {
        nlohmann::ordered_json j;
        j["order"] = g.order();
        j["edges"] = nlohmann::ordered_json::array();
        for (const auto& [u, v] : edges) j["edges"].push_back({u, v});
        out << j.dump(2) << '\n';
    }
}

void export_graph(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    export_graph(g, out, format);
    if (!out) throw IoError("write failed: " + path);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

} // namespace

Graph import_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("line 1: missing header \"n m\"");
    long long n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra)) parse_fail(lineno, "expected header \"n m\"");
        if (n < 1 || m < 0) parse_fail(lineno, "bad header values");
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) parse_fail(lineno + 1, "expected " + std::to_string(m) +
                                                 " edges, found " + std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra)) parse_fail(lineno, "expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(lineno, "vertex out of range");
        if (u == v) parse_fail(lineno, "self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line()) parse_fail(lineno, "trailing content after the last edge");
    return Graph(static_cast<int>(n), edges);
}

Graph import_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return import_graph(in);
}

} // namespace srg
