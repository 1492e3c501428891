#include "propm/divider.hpp"

#include <algorithm>
#include <numeric>

namespace propm {

std::vector<int> sort_items_for(const Instance& instance, int agent) {
    auto row = instance.row(agent);
    std::vector<int> order(instance.num_items());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (row[a] != row[b]) return row[a] < row[b];
        return a < b;
    });
    return order;
}

Partition build_divider_partition(const Instance& instance, int divider) {
    const int n = instance.num_agents();
    const int m = instance.num_items();
    const Value total = instance.total(divider);
    for (int j = 0; j < m; ++j) {
        if (avg_share_compare(instance.value(divider, j), 1, total, n, true)) {
            throw ContractError("build_divider_partition: item exceeds the "
                                "divider's 1/n share: (agent " +
                                std::to_string(divider) + ", item " +
                                std::to_string(j) + ")");
        }
    }

    const std::vector<int> order = sort_items_for(instance, divider);
    std::vector<std::vector<int>> bundles(n);
    Value remaining = total;
    std::size_t pos = 0;
    for (int k = 1; k <= n; ++k) {
        Value taken = 0;
        while (pos < order.size()) {
            const Value next = taken + instance.value(divider, order[pos]);
            // longest prefix with v(S_k) <= remaining / (n-k+1)
            if (avg_share_compare(next, 1, remaining, n - k + 1, true)) break;
            taken = next;
            bundles[k - 1].push_back(order[pos]);
            ++pos;
        }
        remaining -= taken;
    }
    return Partition(instance, divider, std::move(bundles));
}

bool has_prefix_structure(const Instance& instance,
                          const Partition& partition) {
    const std::vector<int> order = sort_items_for(instance, partition.divider());
    std::size_t pos = 0;
    for (int k = 0; k < partition.size(); ++k) {
        std::vector<int> block(order.begin() + pos,
                               order.begin() + pos + partition.bundle(k).size());
        std::sort(block.begin(), block.end());
        if (block != partition.bundle(k)) return false;
        pos += block.size();
    }
    return pos == order.size();
}

}  // namespace propm
