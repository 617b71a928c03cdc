#pragma once

#include <numeric>
#include <vector>

namespace itp {

// Exact-form bin packing: l items, k bins of capacity B, every bin must sum
// to exactly B. An instance with total(items) <= k*B normalizes to exact form
// by appending unit items.
struct BinPackingInstance {
    std::vector<int> items;  // a_1..a_l in input order
    int bins = 0;            // k
    int capacity = 0;        // B

    int item_count() const { return static_cast<int>(items.size()); }
    long long total() const { return std::accumulate(items.begin(), items.end(), 0LL); }
    bool exact() const { return total() == static_cast<long long>(bins) * capacity; }
};

// A packing as k item-index sets (0-based indices into items).
using Packing = std::vector<std::vector<int>>;

}  // namespace itp
