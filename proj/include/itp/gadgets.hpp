#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itp/binpacking.hpp"
#include "itp/graph.hpp"

namespace itp {

// (a,k)-flower: a+1 disjoint k-cliques all joined to one central node.
// 1 + (a+1)*k nodes.
Graph flower(int a, int k);

// (k,l,B)-chain: independent sets S_1..S_k of size B and S_{k+1} of size l+1,
// consecutive sets completely joined. k*B + l + 1 nodes.
Graph chain(int k, int l, int B);

// Appends unit items until total == k*B. Rejects totals above k*B and items
// above capacity.
BinPackingInstance normalize_exact(BinPackingInstance inst);

struct NodeRole {
    enum class Tag { Chain1, Chain2, FlowerCenter, FlowerClique, BCenter, BClique };
    Tag tag;
    int set_index = -1;  // chains: which S_i, 1-based
    int item = -1;       // item flowers: 0-based item index
    int clique = -1;     // flowers: which clique, 0-based
    int pos = -1;        // flowers: position inside the clique, 0-based

    std::string to_string() const;
};

// The bin-packing reduction target: two (k,l,B)-chains, one capacity flower
// F_B and one flower F_{a_j} per item, every flower node joined to every
// chain node. Node numbering is fixed (chain 1, chain 2, F_B, then items in
// order), so role maps are reproducible. Equitably (k+3)-colorable iff the
// instance packs exactly.
struct ReductionGraph {
    Graph graph;
    std::vector<NodeRole> roles;
    BinPackingInstance instance;

    int items() const { return instance.item_count(); }
    int k() const { return instance.bins; }
    int capacity() const { return instance.capacity; }

    int b_center() const;
    int item_center(int j) const;
    NodeSet chain_nodes() const;  // both chains
};

// Builds the reduction graph. Requires k >= 2 (k-cliques of size 1 collapse
// the flower structure), B >= 1 and 1 <= a_j <= B. Construction is defined
// for non-exact instances too; the (k+3)(Bk+l+1) size identity and the
// packing equivalence hold only for exact ones.
ReductionGraph reduce_binpacking_to_eqc(const BinPackingInstance& inst);

// The constructive direction of the reduction: turn an exact packing into an
// equitable (k+3)-coloring of the reduction graph. Validates the packing and
// the produced certificate.
ColoringAssignment coloring_from_packing(const ReductionGraph& r, const Packing& packing);

// The reverse direction: extract a packing from any equitable (k+3)-coloring.
// The coloring properties used on the way (chains use exactly two colors
// never seen on flowers; the capacity center's color differs from every item
// center's color; bins sum to B) are asserted, turning proof steps into
// runtime checks.
Packing packing_from_coloring(const ReductionGraph& r, const ColoringAssignment& a);

// Blow-up of a connected base graph: repeat depth times, replacing every node
// with an independent set (first step) alternating with a clique, sizes drawn
// uniformly from [mult_min, mult_max], and every edge with a complete join.
// The result has iterated type partition |base| and its first quotient is the
// last replacement level.
Graph expand(const Graph& base, int depth, int mult_min, int mult_max, uint32_t seed);

struct InvariantCheck {
    std::string name;
    long long expected = 0;
    long long actual = 0;
    bool pass = false;
};

struct ReductionInvariantReport {
    std::vector<InvariantCheck> checks;
    bool all_pass() const;
};

// Checks the reduction graph's structural identities: node count against
// (k+3)(Bk+l+1), iterated type partition against 2k+3, and neighborhood
// diversity against 2(k+1) + (B+2) + sum_j (a_j+2). Failed checks are
// reported with the offending quantities rather than thrown.
ReductionInvariantReport verify_reduction_invariants(const ReductionGraph& r);

}  // namespace itp
