#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "itp/binpacking.hpp"
#include "itp/graph.hpp"

namespace itp {

// Brute-force reference solvers. They share nothing with the parameterized
// solvers beyond the Graph type, so agreement between the two is meaningful
// evidence. Each has a hard size guard that fails loudly.

// Minimum dominating set by subset enumeration in increasing size. n <= 20.
NodeSet bf_dominating_set(const Graph& g);

// Minimum vertex cover, same scheme. n <= 20.
NodeSet bf_vertex_cover(const Graph& g);

// Chromatic number and a witness, by backtracking with first-use color
// symmetry pruning over a degree-descending node order. n <= 18.
std::pair<int, ColoringAssignment> bf_chromatic(const Graph& g);

// Minimum w-multicoloring via a blow-up: each node v becomes a clique of w(v)
// copies and every original edge becomes a complete join between the copy
// sets; a proper coloring of the blow-up gives each original node w(v)
// distinct colors with disjoint sets across edges, and vice versa, so the
// blow-up chromatic number equals the minimum number of multicolors.
// Requires sum(w) <= 18.
std::pair<int, ColoringAssignment> bf_multicolor(const Graph& g, const std::vector<long long>& w);

// Equitable k-colorability decision with witness. Backtracking over nodes
// with per-class capacity budgets ceil(n/k)/floor(n/k) and exact class count.
// n <= 12.
std::optional<ColoringAssignment> bf_equitable(const Graph& g, int k);

// Exact packing (every bin sums to exactly capacity) as k item-index sets,
// or nothing. Backtracking with bin-sum pruning; items <= 16.
std::optional<Packing> bf_binpacking(const BinPackingInstance& inst);

}  // namespace itp
