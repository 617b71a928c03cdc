#include "itp/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace itp {

namespace {

void guard(bool ok, const std::string& what) {
    if (!ok) throw CapExceeded(what);
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.node_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= uint32_t{1} << v;
        adj[v] |= uint32_t{1} << u;
    }
    return adj;
}

NodeSet mask_to_set(uint32_t mask) {
    NodeSet s;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) s.push_back(v);
    return s;
}

// Subsets of {0..n-1} of the given size in increasing numeric order.
template <typename F>
bool for_each_subset_of_size(int n, int size, F&& f) {
    if (size == 0) return f(uint32_t{0});
    if (size > n) return false;
    uint32_t mask = (uint32_t{1} << size) - 1;
    const uint32_t limit = uint32_t{1} << n;
    while (mask < limit) {
        if (f(mask)) return true;
        uint32_t c = mask & -mask, r = mask + c;  // Gosper's hack
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return false;
}

}  // namespace

NodeSet bf_dominating_set(const Graph& g) {
    const int n = g.node_count();
    guard(n <= 20, "bf_dominating_set guard: n=" + std::to_string(n) + " exceeds 20");
    auto adj = adjacency_masks(g);
    const uint32_t all = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    for (int size = 0; size <= n; ++size) {
        uint32_t found = 0;
        bool ok = for_each_subset_of_size(n, size, [&](uint32_t mask) {
            uint32_t covered = mask;
            for (uint32_t m = mask; m;) {
                int v = __builtin_ctz(m);
                m &= m - 1;
                covered |= adj[v];
            }
            if (covered == all) {
                found = mask;
                return true;
            }
            return false;
        });
        if (ok) return mask_to_set(found);
    }
    return mask_to_set(all);
}

NodeSet bf_vertex_cover(const Graph& g) {
    const int n = g.node_count();
    guard(n <= 20, "bf_vertex_cover guard: n=" + std::to_string(n) + " exceeds 20");
    const auto& edges = g.edges();
    for (int size = 0; size <= n; ++size) {
        uint32_t found = 0;
        bool ok = for_each_subset_of_size(n, size, [&](uint32_t mask) {
            for (const auto& [u, v] : edges)
                if (!((mask >> u) & 1) && !((mask >> v) & 1)) return false;
            found = mask;
            return true;
        });
        if (ok) return mask_to_set(found);
    }
    return {};
}

namespace {

struct ChromaticSearch {
    const std::vector<uint32_t>& adj;
    const std::vector<int>& order;  // degree-descending node order
    std::vector<int> color;         // by original node id, -1 = unassigned
    int k = 0;

    bool assign(size_t idx, int used) {
        if (idx == order.size()) return true;
        int v = order[idx];
        uint32_t forbidden = 0;
        for (uint32_t m = adj[v]; m;) {
            int u = __builtin_ctz(m);
            m &= m - 1;
            if (color[u] >= 0) forbidden |= uint32_t{1} << color[u];
        }
        // Allow one fresh color at most: removes color-permutation symmetry.
        int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if ((forbidden >> c) & 1) continue;
            color[v] = c;
            if (assign(idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::pair<int, ColoringAssignment> bf_chromatic(const Graph& g) {
    const int n = g.node_count();
    guard(n <= 18, "bf_chromatic guard: n=" + std::to_string(n) + " exceeds 18");
    if (n == 0) return {0, ColoringAssignment{}};
    auto adj = adjacency_masks(g);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = 1; k <= n; ++k) {
        ChromaticSearch s{adj, order, std::vector<int>(n, -1), k};
        if (s.assign(0, 0)) {
            ColoringAssignment a;
            a.colors.resize(n);
            for (int v = 0; v < n; ++v) a.colors[v] = {s.color[v]};
            return {k, a};
        }
    }
    return {n, ColoringAssignment{}};
}

std::pair<int, ColoringAssignment> bf_multicolor(const Graph& g, const std::vector<long long>& w) {
    const int n = g.node_count();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight vector size mismatch");
    long long total = std::accumulate(w.begin(), w.end(), 0LL);
    guard(total <= 18, "bf_multicolor guard: sum(w)=" + std::to_string(total) + " exceeds 18");

    std::vector<int> first_copy(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v) {
        first_copy[v] = m;
        m += static_cast<int>(w[v]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < w[v]; ++i)
            for (int j = i + 1; j < w[v]; ++j)
                edges.emplace_back(first_copy[v] + i, first_copy[v] + j);
    for (const auto& [u, v] : g.edges())
        for (int i = 0; i < w[u]; ++i)
            for (int j = 0; j < w[v]; ++j)
                edges.emplace_back(first_copy[u] + i, first_copy[v] + j);
    Graph blowup(m, std::move(edges));
    auto [k, blow_colors] = bf_chromatic(blowup);

    ColoringAssignment a;
    a.colors.resize(n);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < w[v]; ++i)
            a.colors[v].push_back(blow_colors.colors[first_copy[v] + i][0]);
        std::sort(a.colors[v].begin(), a.colors[v].end());
    }
    return {k, a};
}

namespace {

struct EquitableSearch {
    const std::vector<uint32_t>& adj;
    int n, k, cap_high, cap_low, max_high;  // max_high = n mod k classes may reach cap_high
    std::vector<int> assignment;
    std::vector<int> class_size;
    std::vector<uint32_t> class_members;

    bool place(int v, int used) {
        if (v == n) return used == k;
        // Opening every remaining class must stay possible.
        if (k - used > n - v) return false;
        int tries = std::min(used + 1, k);  // first-use ordering breaks class symmetry
        for (int c = 0; c < tries; ++c) {
            if (adj[v] & class_members[c]) continue;
            int next = class_size[c] + 1;
            if (next > cap_high) continue;
            if (next == cap_high && cap_high != cap_low) {
                int high_used = 0;
                for (int i = 0; i < k; ++i) high_used += class_size[i] == cap_high ? 1 : 0;
                if (high_used >= max_high) continue;
            }
            assignment[v] = c;
            class_size[c] += 1;
            class_members[c] |= uint32_t{1} << v;
            if (place(v + 1, std::max(used, c + 1))) return true;
            class_members[c] &= ~(uint32_t{1} << v);
            class_size[c] -= 1;
            assignment[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<ColoringAssignment> bf_equitable(const Graph& g, int k) {
    const int n = g.node_count();
    guard(n <= 12, "bf_equitable guard: n=" + std::to_string(n) + " exceeds 12");
    if (k < 1 || k > n) return std::nullopt;
    EquitableSearch s{adjacency_masks(g),
                      n,
                      k,
                      (n + k - 1) / k,
                      n / k,
                      n % k == 0 ? k : n % k,
                      std::vector<int>(n, -1),
                      std::vector<int>(k, 0),
                      std::vector<uint32_t>(k, 0)};
    if (!s.place(0, 0)) return std::nullopt;
    ColoringAssignment a;
    a.colors.resize(n);
    for (int v = 0; v < n; ++v) a.colors[v] = {s.assignment[v]};
    check_invariant(is_equitable_coloring(g, a, k), "bf_equitable produced an invalid witness");
    return a;
}

namespace {

bool pack(const BinPackingInstance& inst, int item, std::vector<long long>& load, Packing& bins) {
    if (item == inst.item_count()) {
        for (long long l : load)
            if (l != inst.capacity) return false;
        return true;
    }
    for (int b = 0; b < inst.bins; ++b) {
        bool was_empty = load[b] == 0;
        if (load[b] + inst.items[item] <= inst.capacity) {
            load[b] += inst.items[item];
            bins[b].push_back(item);
            if (pack(inst, item + 1, load, bins)) return true;
            bins[b].pop_back();
            load[b] -= inst.items[item];
        }
        // Empty bins are interchangeable; trying the first one suffices.
        if (was_empty) break;
    }
    return false;
}

}  // namespace

std::optional<Packing> bf_binpacking(const BinPackingInstance& inst) {
    guard(inst.item_count() <= 16,
          "bf_binpacking guard: l=" + std::to_string(inst.item_count()) + " exceeds 16");
    if (!inst.exact()) return std::nullopt;
    if (inst.bins < 1) return std::nullopt;
    for (int a : inst.items)
        if (a < 1 || a > inst.capacity) return std::nullopt;
    std::vector<long long> load(inst.bins, 0);
    Packing bins(inst.bins);
    if (!pack(inst, 0, load, bins)) return std::nullopt;
    return bins;
}

}  // namespace itp
