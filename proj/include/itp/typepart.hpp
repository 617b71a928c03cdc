#pragma once

#include <string>
#include <utility>
#include <vector>

#include "itp/graph.hpp"

namespace itp {

// Two nodes u, v have the same type when N(u)\{v} == N(v)\{u}. The type
// partition is the (unique, coarsest) partition of V into same-type classes.
// Each class induces either a clique or an independent set; singletons count
// as cliques.

enum class ClassKind { Clique, Independent };

struct TypeClass {
    NodeSet members;  // sorted ascending
    ClassKind kind;
};

struct TypePartition {
    std::vector<TypeClass> classes;  // ordered by smallest member id
    std::vector<int> class_of;       // node -> class index

    int class_count() const { return static_cast<int>(classes.size()); }
};

TypePartition type_partition(const Graph& g);

// Quotient graph: one metavertex per class, adjacent iff the classes are
// completely joined in g. Metavertex ids equal class indices; the returned
// map makes that explicit. Verifies the all-or-nothing edge property and
// class kinds while counting cross edges; a violation means the partition
// did not come from type_partition.
std::pair<Graph, std::vector<int>> type_graph(const Graph& g, const TypePartition& p);

// One level of the iterated quotient chain: the graph together with its own
// type partition (singletons at the base).
struct TypeLevel {
    Graph graph;
    TypePartition partition;
};

// H^(0)=G, H^(1), ..., H^(d) where H^(i+1) is the type graph of H^(i) and
// H^(d) is the first base graph. Node counts strictly decrease until the base.
struct TypeSequence {
    std::vector<TypeLevel> levels;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    const Graph& base() const { return levels.back().graph; }
    int itp() const { return base().node_count(); }
};

TypeSequence type_sequence(const Graph& g);

// Class count of the type partition.
int neighborhood_diversity(const Graph& g);

// Node count of the base graph of the type graph sequence.
int iterated_type_partition(const Graph& g);

// True when g equals its own type graph (all type classes are singletons).
bool is_base_graph(const Graph& g);

std::string kind_name(ClassKind k);

}  // namespace itp
