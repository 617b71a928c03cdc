#include "itp/gen.hpp"

#include <random>

namespace itp {

Graph complete_graph(int n) {
    if (n < 1) throw ParseError("complete(n) requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 1) throw ParseError("cycle(n) requires n >= 1");
    std::vector<std::pair<int, int>> e;
    if (n == 2) e.emplace_back(0, 1);
    else if (n >= 3)
        for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    if (n < 1) throw ParseError("path(n) requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw ParseError("complete_bipartite(m,n) requires m,n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) e.emplace_back(u, m + v);
    return Graph(m + n, std::move(e));
}

Graph random_graph(int n, int p_millionths, uint32_t seed) {
    if (n < 1) throw ParseError("random(n,p,seed) requires n >= 1");
    if (p_millionths < 0 || p_millionths > 1'000'000)
        throw ParseError("edge probability out of range");
    std::mt19937 rng(seed);
    // Threshold comparison against the raw 32-bit stream keeps the draw exact.
    const uint64_t threshold =
        (static_cast<uint64_t>(p_millionths) << 32) / 1'000'000;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<uint64_t>(rng()) < threshold) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

}  // namespace itp
