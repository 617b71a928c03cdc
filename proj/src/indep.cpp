#include "itp/indep.hpp"

#include <algorithm>

namespace itp {

std::vector<NodeSet> all_independent_sets(const Graph& g) {
    const int n = g.node_count();
    if (n > 30)
        throw CapExceeded("independent-set enumeration limited to 30 nodes, got " +
                          std::to_string(n));
    std::vector<uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= uint32_t{1} << v;
        adj[v] |= uint32_t{1} << u;
    }
    std::vector<NodeSet> sets;
    const uint32_t limit = n >= 31 ? 0 : uint32_t{1} << n;
    for (uint32_t mask = 1; mask < limit; ++mask) {
        bool independent = true;
        for (uint32_t m = mask; m && independent;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            if (adj[v] & mask) independent = false;
        }
        if (!independent) continue;
        NodeSet s;
        for (uint32_t m = mask; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            s.push_back(v);
        }
        sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end(), [](const NodeSet& a, const NodeSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return sets;
}

}  // namespace itp
