#pragma once

#include <vector>

#include "itp/graph.hpp"

namespace itp {

// All nonempty independent sets of g, ordered by size then lexicographically
// by member list. Exponential in g's node count; callers guard sizes.
std::vector<NodeSet> all_independent_sets(const Graph& g);

}  // namespace itp
