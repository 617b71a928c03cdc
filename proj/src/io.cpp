#include "itp/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace itp {

GraphFormat format_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "col" || ext == "dimacs") return GraphFormat::Dimacs;
    if (ext == "json") return GraphFormat::Json;
    return GraphFormat::EdgeList;
}

GraphFormat format_from_name(const std::string& name) {
    if (name == "dimacs") return GraphFormat::Dimacs;
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "json") return GraphFormat::Json;
    throw ParseError("unknown graph format '" + name + "' (expected dimacs, edgelist or json)");
}

std::string format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::Dimacs: return "dimacs";
        case GraphFormat::EdgeList: return "edgelist";
        case GraphFormat::Json: return "json";
    }
    return "?";
}

namespace {

ParsedGraph finish(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> warnings) {
    ParsedGraph out{Graph(n, std::move(edges)), std::move(warnings)};
    if (out.graph.duplicates_dropped() > 0)
        out.warnings.push_back(std::to_string(out.graph.duplicates_dropped()) +
                               " duplicate edge(s) dropped");
    return out;
}

ParsedGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> warnings;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            std::string kind;
            if (!(ls >> kind >> n >> m_declared) || kind != "edge" || n < 0)
                throw ParseError("malformed header, expected 'p edge <n> <m>'", lineno);
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw ParseError("edge before problem line", lineno);
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("malformed edge line", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge endpoint out of range 1.." + std::to_string(n), lineno);
            if (u == v) throw ParseError("self-loop at node " + std::to_string(u), lineno);
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError("unrecognized line tag '" + tag + "'", lineno);
    }
    if (n < 0) throw ParseError("missing 'p edge' header");
    ParsedGraph out = finish(n, std::move(edges), std::move(warnings));
    if (m_declared >= 0 && m_declared != out.graph.edge_count())
        out.warnings.push_back("header declared " + std::to_string(m_declared) + " edges, found " +
                               std::to_string(out.graph.edge_count()));
    return out;
}

ParsedGraph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int declared_n = -1;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "#") continue;
        if (first_content && first == "n") {
            if (!(ls >> declared_n) || declared_n < 0)
                throw ParseError("malformed node-count line, expected 'n <count>'", lineno);
            first_content = false;
            continue;
        }
        first_content = false;
        int u, v;
        try {
            size_t pos = 0;
            u = std::stoi(first, &pos);
            if (pos != first.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("malformed edge line, expected 'u v'", lineno);
        }
        if (!(ls >> v)) throw ParseError("malformed edge line, expected 'u v'", lineno);
        if (u < 0 || v < 0) throw ParseError("negative node id", lineno);
        if (u == v) throw ParseError("self-loop at node " + std::to_string(u), lineno);
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
            throw ParseError("edge endpoint out of declared range 0.." + std::to_string(declared_n - 1),
                             lineno);
        max_id = std::max(max_id, std::max(u, v));
        edges.emplace_back(u, v);
    }
    int n = declared_n >= 0 ? declared_n : max_id + 1;
    return finish(n, std::move(edges), {});
}

int checked_node_value(const nlohmann::json& v, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    long long x = v.get<long long>();
    if (x < 0 || x > std::numeric_limits<int>::max())
        throw ParseError(std::string(what) + " out of range: " + std::to_string(x));
    return static_cast<int>(x);
}

ParsedGraph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n"))
        throw ParseError("json graph must be an object with integer field 'n'");
    int n = checked_node_value(j["n"], "'n'");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("'edges' must be an array of [u,v] pairs");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("'edges' must be an array of [u,v] pairs");
            edges.emplace_back(checked_node_value(e[0], "edge endpoint"),
                               checked_node_value(e[1], "edge endpoint"));
        }
    }
    return finish(n, std::move(edges), {});
}

}  // namespace

ParsedGraph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::Dimacs: return parse_dimacs(text);
        case GraphFormat::EdgeList: return parse_edgelist(text);
        case GraphFormat::Json: return parse_json(text);
    }
    throw ParseError("unknown format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
        case GraphFormat::Dimacs:
            out << "p edge " << g.node_count() << ' ' << g.edge_count() << '\n';
            for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
            break;
        case GraphFormat::EdgeList:
            out << "n " << g.node_count() << '\n';
            for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
            break;
        case GraphFormat::Json: {
            nlohmann::ordered_json j;
            j["n"] = g.node_count();
            auto arr = nlohmann::ordered_json::array();
            for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
            j["edges"] = std::move(arr);
            out << j.dump() << '\n';
            break;
        }
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + path + "'");
    out << content;
}

ParsedGraph load_graph_file(const std::string& path, GraphFormat format) {
    return parse_graph(read_file(path), format);
}

}  // namespace itp
