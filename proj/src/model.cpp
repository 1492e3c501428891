#include "propm/model.hpp"

#include <algorithm>
#include <numeric>

namespace propm {

namespace {

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Instance::Instance(const std::vector<std::vector<Value>>& valuations) {
    if (valuations.empty()) {
        throw ValidationError("instance needs at least one agent");
    }
    if (valuations.size() > static_cast<std::size_t>(kMaxAgents)) {
        throw ValidationError("too many agents: " +
                              std::to_string(valuations.size()) + " > " +
                              std::to_string(kMaxAgents));
    }
    num_agents_ = static_cast<int>(valuations.size());
    const std::size_t cols = valuations.front().size();
    if (cols > static_cast<std::size_t>(kMaxItems)) {
        throw ValidationError("too many items: " + std::to_string(cols) +
                              " > " + std::to_string(kMaxItems));
    }
    num_items_ = static_cast<int>(cols);
    values_.reserve(valuations.size() * cols);
    totals_.reserve(valuations.size());
    for (int i = 0; i < num_agents_; ++i) {
        const auto& rw = valuations[i];
        if (rw.size() != cols) {
            throw ValidationError("valuations[" + std::to_string(i) +
                                  "]: expected " + std::to_string(cols) +
                                  " entries, got " + std::to_string(rw.size()));
        }
        Value total = 0;
        for (int j = 0; j < num_items_; ++j) {
            const Value v = rw[j];
            if (v < 0) {
                throw ValidationError("valuations" + pair_str(i, j) +
                                      ": negative value");
            }
            if (v > kMaxItemValue) {
                throw ValidationError("valuations" + pair_str(i, j) +
                                      ": value exceeds 2^40-1");
            }
            values_.push_back(v);
            total += v;  // < 2^56, no overflow
        }
        totals_.push_back(total);
    }
}

void Instance::check_agent(int agent) const {
    if (agent < 0 || agent >= num_agents_) {
        throw ContractError("agent index " + std::to_string(agent) +
                            " out of range [0," + std::to_string(num_agents_) +
                            ")");
    }
}

void Instance::check_item(int item) const {
    if (item < 0 || item >= num_items_) {
        throw ContractError("item index " + std::to_string(item) +
                            " out of range [0," + std::to_string(num_items_) +
                            ")");
    }
}

Instance Instance::restricted(const std::vector<int>& agents,
                              const std::vector<int>& items) const {
    if (agents.empty()) {
        throw ContractError("restricted: empty agent subset");
    }
    for (std::size_t p = 0; p < agents.size(); ++p) {
        check_agent(agents[p]);
        if (p > 0 && agents[p] <= agents[p - 1]) {
            throw ContractError("restricted: agent subset not strictly sorted");
        }
    }
    for (std::size_t p = 0; p < items.size(); ++p) {
        check_item(items[p]);
        if (p > 0 && items[p] <= items[p - 1]) {
            throw ContractError("restricted: item subset not strictly sorted");
        }
    }
    Instance sub;
    sub.num_agents_ = static_cast<int>(agents.size());
    sub.num_items_ = static_cast<int>(items.size());
    sub.values_.reserve(agents.size() * items.size());
    sub.totals_.reserve(agents.size());
    for (int a : agents) {
        Value total = 0;
        for (int j : items) {
            const Value v = value(a, j);
            sub.values_.push_back(v);
            total += v;
        }
        sub.totals_.push_back(total);
    }
    return sub;
}

std::vector<std::vector<Value>> Instance::rows() const {
    std::vector<std::vector<Value>> out(num_agents_);
    for (int i = 0; i < num_agents_; ++i) {
        auto r = row(i);
        out[i].assign(r.begin(), r.end());
    }
    return out;
}

bool avg_share_compare(Value value, Value count, Value total, Value n,
                       bool strict) {
    if (count < 1) {
        throw ContractError("avg_share_compare: count must be >= 1");
    }
    if (n < 1) {
        throw ContractError("avg_share_compare: n must be >= 1");
    }
    const __int128 lhs = static_cast<__int128>(value) * n;
    const __int128 rhs = static_cast<__int128>(count) * total;
    return strict ? lhs > rhs : lhs >= rhs;
}

Value bundle_value(const Instance& instance, int agent,
                   std::span<const int> items) {
    Value sum = 0;
    for (int j : items) {
        sum += instance.value(agent, j);
    }
    return sum;
}

Partition::Partition(const Instance& instance, int divider,
                     std::vector<std::vector<int>> bundles)
    : divider_(divider), bundles_(std::move(bundles)) {
    if (divider < 0 || divider >= instance.num_agents()) {
        throw ContractError("partition: divider index out of range");
    }
    if (static_cast<int>(bundles_.size()) != instance.num_agents()) {
        throw ContractError("partition: expected " +
                            std::to_string(instance.num_agents()) +
                            " bundles, got " + std::to_string(bundles_.size()));
    }
    std::vector<char> seen(instance.num_items(), 0);
    std::size_t covered = 0;
    for (auto& b : bundles_) {
        std::sort(b.begin(), b.end());
        for (int j : b) {
            if (j < 0 || j >= instance.num_items()) {
                throw ContractError("partition: item index out of range");
            }
            if (seen[j]) {
                throw ContractError("partition: item " + std::to_string(j) +
                                    " appears in two bundles");
            }
            seen[j] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(instance.num_items())) {
        throw ContractError("partition: bundles do not cover the item set");
    }
}

const std::vector<int>& Partition::bundle(int k) const {
    if (k < 0 || k >= size()) {
        throw ContractError("partition: bundle index out of range");
    }
    return bundles_[k];
}

int Decomposition::agent_count() const {
    int count = 0;
    for (const auto& sp : sub_problems) {
        count += static_cast<int>(sp.agent_indices.size());
    }
    return count;
}

bool Decomposition::contains_agent(int agent) const {
    for (const auto& sp : sub_problems) {
        if (std::binary_search(sp.agent_indices.begin(),
                               sp.agent_indices.end(), agent)) {
            return true;
        }
    }
    return false;
}

std::vector<int> Decomposition::all_agents() const {
    std::vector<int> out;
    for (const auto& sp : sub_problems) {
        out.insert(out.end(), sp.agent_indices.begin(), sp.agent_indices.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Decomposition::all_bundles() const {
    std::vector<int> out;
    for (const auto& sp : sub_problems) {
        out.insert(out.end(), sp.bundle_indices.begin(),
                   sp.bundle_indices.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Allocation::normalize() {
    for (auto& b : bundles) {
        std::sort(b.begin(), b.end());
    }
}

void Allocation::validate_partition(const Instance& instance) const {
    if (static_cast<int>(bundles.size()) != instance.num_agents()) {
        throw ValidationError("allocation: expected " +
                              std::to_string(instance.num_agents()) +
                              " bundles, got " +
                              std::to_string(bundles.size()));
    }
    std::vector<char> seen(instance.num_items(), 0);
    std::size_t covered = 0;
    for (std::size_t a = 0; a < bundles.size(); ++a) {
        for (int j : bundles[a]) {
            if (j < 0 || j >= instance.num_items()) {
                throw ValidationError("allocation: bundle " +
                                      std::to_string(a) + " holds item " +
                                      std::to_string(j) + " out of range");
            }
            if (seen[j]) {
                throw ValidationError("allocation: item " + std::to_string(j) +
                                      " allocated twice");
            }
            seen[j] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(instance.num_items())) {
        throw ValidationError("allocation: not every item is allocated");
    }
}

}  // namespace propm
