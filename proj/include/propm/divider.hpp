#pragma once

#include <vector>

#include "propm/model.hpp"

namespace propm {

/// Items ordered by (value ascending, item index ascending) from one agent's
/// perspective; a permutation of all items.
std::vector<int> sort_items_for(const Instance& instance, int agent);

/// Stage-1 prefix partition: S_k is the longest prefix of the remaining
/// sorted items with (n-k+1) * v_i(S_k) <= v_i(remaining before S_k); the
/// last bundle absorbs everything left. Requires that no single item exceeds
/// the divider's 1/n share (preprocessing guarantees this).
Partition build_divider_partition(const Instance& instance, int divider);

/// True iff concatenating the partition's bundles reproduces the divider's
/// sorted item order exactly.
bool has_prefix_structure(const Instance& instance, const Partition& partition);

}  // namespace propm
