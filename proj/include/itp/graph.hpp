#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "itp/errors.hpp"

namespace itp {

// Sorted, duplicate-free list of node ids. Used for dominating sets, vertex
// covers, demand sets and type classes alike.
using NodeSet = std::vector<int>;

bool set_contains(const NodeSet& s, int v);
void set_insert(NodeSet& s, int v);

// node -> set of color ids; proper colorings use one-element sets per node.
struct ColoringAssignment {
    std::vector<std::vector<int>> colors;  // indexed by node, each sorted ascending

    int node_count() const { return static_cast<int>(colors.size()); }
    // Total number of distinct colors across all nodes.
    int distinct_color_count() const;
};

// Simple undirected graph over dense ids 0..n-1. Immutable once built.
// Adjacency is kept both as sorted neighbor lists and as bitset rows, so
// membership tests, whole-neighborhood comparisons and hashes are cheap.
class Graph {
public:
    Graph() = default;

    // Normalizes edges to (min,max), sorts and deduplicates them.
    // Self-loops and out-of-range endpoints throw ParseError. The number of
    // duplicate edges dropped is reported via duplicates_dropped().
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int duplicates_dropped() const { return duplicates_dropped_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Bitset row of v's neighborhood, blocks_per_row() words of 64 bits.
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * blocks_; }
    size_t blocks_per_row() const { return blocks_; }

    bool same_open_neighborhood(int u, int v) const;
    // N(u) \ {v} == N(v) \ {u}; the node-type relation.
    bool same_type(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    int duplicates_dropped_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;
    size_t blocks_ = 0;
};

// ---- certificate validators -------------------------------------------------

// Every node outside D has a neighbor in D.
bool is_dominating_set(const Graph& g, const NodeSet& d);

// Every edge has at least one endpoint in c.
bool is_vertex_cover(const Graph& g, const NodeSet& c);

// Adjacent nodes have disjoint color sets (multicolor-aware).
bool is_proper_coloring(const Graph& g, const ColoringAssignment& a);

// Proper, exactly one color per node, exactly k distinct colors used, and
// every color class has size floor(n/k) or ceil(n/k).
bool is_equitable_coloring(const Graph& g, const ColoringAssignment& a, int k);

// ---- structure helpers -------------------------------------------------------

bool is_connected(const Graph& g);

// Node sets of the connected components, ordered by smallest member.
std::vector<NodeSet> connected_components(const Graph& g);

// Induced subgraph; also reports the original id of each subgraph node.
struct Subgraph {
    Graph graph;
    std::vector<int> original_id;  // subgraph node -> id in the host graph
};
Subgraph induced_subgraph(const Graph& g, const NodeSet& nodes);

}  // namespace itp
