#pragma once

#include <string>
#include <vector>

#include "itp/graph.hpp"

namespace itp {

enum class GraphFormat { Dimacs, EdgeList, Json };

// Returns the format implied by a file name, defaulting to EdgeList.
GraphFormat format_from_path(const std::string& path);
GraphFormat format_from_name(const std::string& name);  // "dimacs" | "edgelist" | "json"
std::string format_name(GraphFormat f);

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;  // duplicate edges, count mismatches
};

// Parses a graph from file content.
//   dimacs:   "p edge <n> <m>" header, "e <u> <v>" lines with 1-based ids,
//             "c ..." comment lines.
//   edgelist: "u v" per line, 0-based, n = max id + 1; an optional first line
//             "n <count>" declares isolated trailing nodes.
//   json:     {"n": int, "edges": [[u,v], ...]}
// Duplicate edges are deduplicated with a warning; self-loops are an error.
ParsedGraph parse_graph(const std::string& text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

ParsedGraph load_graph_file(const std::string& path, GraphFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace itp
