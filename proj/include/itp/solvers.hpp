#pragma once

#include <optional>
#include <vector>

#include "itp/graph.hpp"
#include "itp/ilp.hpp"
#include "itp/typepart.hpp"

namespace itp {

// Exact solvers parameterized by the iterated type partition. Each one walks
// down the type graph sequence, solves a generalized problem on the base
// graph, and lifts an explicit certificate back to the input graph.

struct SolveStats {
    int depth = 0;             // quotient levels descended below the input
    int base_size = 0;         // node count where the recursion bottomed out
    long long ilp_nodes = 0;   // search nodes of the base-case program, if any
};

// ---- dominating set --------------------------------------------------------

// D is a Q-stds (semi-total dominating set w.r.t. Q) when every node of Q has
// a neighbor in D and every other node is in D or dominated by D. Q = {} is
// ordinary domination.

// Quotient demand: every independent class, plus every class whose members
// are all demanded. (A clique class with an undemanded member can satisfy
// its demanded members through its own chosen representative.)
NodeSet ds_demand_lift(const TypePartition& p, const NodeSet& demand);

// One representative per selected quotient class: the lowest member id
// outside the demand set, or the lowest member when all are demanded.
NodeSet ds_solution_lift(const TypePartition& p, const NodeSet& quotient_solution,
                         const NodeSet& demand = {});

// Minimum Q-stds, or nothing iff some demanded node has no neighbor.
// Components are solved independently; within a component the recursion
// bottoms out at a base graph (brute force by increasing subset size) or at
// a complete graph, which is solved directly: its quotient is a single node
// whose demand could only be served by a class-internal neighbor, which the
// quotient cannot express.
std::optional<NodeSet> stds(const Graph& g, const NodeSet& demand, SolveStats* stats = nullptr);

// Minimum dominating set; stds with an empty demand set.
NodeSet dominating_set(const Graph& g, SolveStats* stats = nullptr);

// ---- coloring ---------------------------------------------------------------

// w-multicoloring: each node v gets w(v) distinct colors, adjacent nodes get
// disjoint sets; minimize the total number of distinct colors.
using MulticolorWeights = std::vector<long long>;

// Distributes the quotient's color sets to class members: a clique class
// splits its metavertex colors into consecutive chunks of sizes w(u_i)
// (members in id order, colors ascending); an independent class gives every
// member the w(u) smallest metavertex colors.
ColoringAssignment coloring_lift(const TypePartition& p, const ColoringAssignment& quotient,
                                 const MulticolorWeights& w);

ColoringAssignment multicoloring(const Graph& g, const MulticolorWeights& w,
                                 SolveStats* stats = nullptr,
                                 long long node_budget = kDefaultIlpBudget);

// Minimum proper coloring: multicoloring with unit weights.
ColoringAssignment coloring(const Graph& g, SolveStats* stats = nullptr,
                            long long node_budget = kDefaultIlpBudget);

// ---- vertex cover -----------------------------------------------------------

// 2-weighted vertex cover: w(v) <= s(v) for all v; find a vertex cover C
// minimizing Cost(C) = sum_{v in C} s(v) + sum_{v not in C} w(v).
struct VcWeights {
    std::vector<long long> w, s;
};

struct WvcSolution {
    NodeSet cover;
    long long cost = 0;
};

WvcSolution wvc2(const Graph& g, const VcWeights& weights, SolveStats* stats = nullptr);

// Minimum vertex cover: wvc2 with w = 0, s = 1.
NodeSet vertex_cover(const Graph& g, SolveStats* stats = nullptr);

}  // namespace itp
