#pragma once

#include <cstdint>

#include "itp/graph.hpp"

namespace itp {

Graph complete_graph(int n);
Graph cycle_graph(int n);   // n=1 -> K_1, n=2 -> K_2
Graph path_graph(int n);
Graph complete_bipartite(int m, int n);

// Erdos-Renyi G(n, p). p is given in millionths so generation is integer-only
// and bit-reproducible across platforms; identical (n, p, seed) triples always
// produce identical graphs.
Graph random_graph(int n, int p_millionths, uint32_t seed);

inline int probability_to_millionths(double p) {
    if (p < 0.0 || p > 1.0) throw ParseError("edge probability must be in [0,1]");
    return static_cast<int>(p * 1'000'000 + 0.5);
}

}  // namespace itp
