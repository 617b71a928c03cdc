#include "itp/graph.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace itp {

bool set_contains(const NodeSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

void set_insert(NodeSet& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
}

int ColoringAssignment::distinct_color_count() const {
    std::vector<int> all;
    for (const auto& cs : colors) all.insert(all.end(), cs.begin(), cs.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return static_cast<int>(all.size());
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw ParseError("negative node count");
    // Adjacency is stored as dense bitset rows, n^2/8 bytes in total.
    if (n > 50000)
        throw ParseError("node count " + std::to_string(n) +
                         " exceeds the 50000-node limit of the dense adjacency representation");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError("self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    duplicates_dropped_ = static_cast<int>(edges.end() - last);
    edges.erase(last, edges.end());
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    blocks_ = (static_cast<size_t>(n_) + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * blocks_, 0);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[static_cast<size_t>(u) * blocks_ + v / 64] |= uint64_t{1} << (v % 64);
        bits_[static_cast<size_t>(v) * blocks_ + u / 64] |= uint64_t{1} << (u % 64);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return (row(u)[v / 64] >> (v % 64)) & 1;
}

bool Graph::same_open_neighborhood(int u, int v) const {
    return std::memcmp(row(u), row(v), blocks_ * sizeof(uint64_t)) == 0;
}

bool Graph::same_type(int u, int v) const {
    if (u == v) return true;
    // N(u)\{v} == N(v)\{u}  <=>  rows equal after masking out u and v in both.
    const uint64_t* ru = row(u);
    const uint64_t* rv = row(v);
    for (size_t b = 0; b < blocks_; ++b) {
        uint64_t mask = ~uint64_t{0};
        if (u / 64 == static_cast<int>(b)) mask &= ~(uint64_t{1} << (u % 64));
        if (v / 64 == static_cast<int>(b)) mask &= ~(uint64_t{1} << (v % 64));
        if ((ru[b] & mask) != (rv[b] & mask)) return false;
    }
    return true;
}

bool is_dominating_set(const Graph& g, const NodeSet& d) {
    const int n = g.node_count();
    if (n == 0) return true;
    std::vector<uint64_t> covered(g.blocks_per_row(), 0);
    for (int v : d) {
        covered[v / 64] |= uint64_t{1} << (v % 64);
        const uint64_t* r = g.row(v);
        for (size_t b = 0; b < covered.size(); ++b) covered[b] |= r[b];
    }
    for (int v = 0; v < n; ++v)
        if (!((covered[v / 64] >> (v % 64)) & 1)) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const NodeSet& c) {
    std::vector<char> in(g.node_count(), 0);
    for (int v : c) in[v] = 1;
    for (const auto& [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

namespace {

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

}  // namespace

bool is_proper_coloring(const Graph& g, const ColoringAssignment& a) {
    if (a.node_count() != g.node_count()) return false;
    for (const auto& [u, v] : g.edges())
        if (!disjoint_sorted(a.colors[u], a.colors[v])) return false;
    return true;
}

bool is_equitable_coloring(const Graph& g, const ColoringAssignment& a, int k) {
    const int n = g.node_count();
    if (k < 1 || a.node_count() != n) return false;
    std::vector<std::pair<int, int>> counts;  // color -> size, sorted by color
    for (int v = 0; v < n; ++v) {
        if (a.colors[v].size() != 1) return false;
        int c = a.colors[v][0];
        auto it = std::lower_bound(counts.begin(), counts.end(), std::make_pair(c, 0));
        if (it != counts.end() && it->first == c) ++it->second;
        else counts.insert(it, {c, 1});
    }
    if (static_cast<int>(counts.size()) != k) return false;
    const int lo = n / k, hi = (n + k - 1) / k;
    for (const auto& [c, size] : counts)
        if (size != lo && size != hi) return false;
    return is_proper_coloring(g, a);
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

std::vector<NodeSet> connected_components(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> comp(n, -1);
    std::vector<NodeSet> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Subgraph induced_subgraph(const Graph& g, const NodeSet& nodes) {
    std::vector<int> local(g.node_count(), -1);
    for (size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    Subgraph s{Graph(static_cast<int>(nodes.size()), std::move(edges)), nodes};
    return s;
}

}  // namespace itp
