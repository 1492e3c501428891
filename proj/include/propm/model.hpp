#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace propm {

using Value = std::int64_t;

// Size limits chosen so that every cross-multiplied share comparison fits in
// a signed 128-bit intermediate: value*n < 2^56 * 2^12 = 2^68.
inline constexpr Value kMaxItemValue = (Value{1} << 40) - 1;
inline constexpr int kMaxAgents = 1 << 12;
inline constexpr int kMaxItems = 1 << 16;

// Malformed user-supplied data (dimensions, negative or oversized values,
// allocations that are not a partition). Maps to exit code 2 in the CLI.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated call contract or broken internal invariant; seeing one means a
// bug, never a property of the input. Maps to exit code 3 in the CLI.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Agents x items matrix of non-negative integer valuations with cached row
/// totals. Immutable after construction. The paper-style normalization
/// v_i(M)=1 is never materialized: every share threshold is evaluated as an
/// exact cross-multiplied integer comparison against total(i).
class Instance {
public:
    explicit Instance(const std::vector<std::vector<Value>>& valuations);

    int num_agents() const { return num_agents_; }
    int num_items() const { return num_items_; }

    Value value(int agent, int item) const {
        check_agent(agent);
        check_item(item);
        return values_[static_cast<std::size_t>(agent) * num_items_ + item];
    }
    Value total(int agent) const {
        check_agent(agent);
        return totals_[agent];
    }
    std::span<const Value> row(int agent) const {
        check_agent(agent);
        return {values_.data() + static_cast<std::size_t>(agent) * num_items_,
                static_cast<std::size_t>(num_items_)};
    }

    // Sub-instance over the given (sorted, unique, in-range) agent and item
    // subsets, keeping the original integer valuations. Position p of the
    // subset vectors becomes index p of the sub-instance.
    Instance restricted(const std::vector<int>& agents,
                        const std::vector<int>& items) const;

    std::vector<std::vector<Value>> rows() const;

    bool operator==(const Instance& other) const = default;

private:
    Instance() = default;
    void check_agent(int agent) const;
    void check_item(int item) const;

    int num_agents_ = 0;
    int num_items_ = 0;
    std::vector<Value> values_;  // row-major
    std::vector<Value> totals_;
};

/// Exact comparison of value/count against total/n without division:
/// strict:  value*n >  count*total
/// weak:    value*n >= count*total
/// All share thresholds in this library go through here. Both products are
/// formed in signed 128-bit arithmetic; with the instance limits above (and
/// int64 inputs in general) they cannot overflow.
bool avg_share_compare(Value value, Value count, Value total, Value n,
                       bool strict);

/// Exact integer sum of one agent's values over an item set.
Value bundle_value(const Instance& instance, int agent,
                   std::span<const int> items);

/// The divider's ordered bundles S_1..S_n. Bundles are stored as sorted
/// item-index vectors; they are pairwise disjoint and cover the item set.
class Partition {
public:
    Partition(const Instance& instance, int divider,
              std::vector<std::vector<int>> bundles);

    int divider() const { return divider_; }
    int size() const { return static_cast<int>(bundles_.size()); }
    const std::vector<int>& bundle(int k) const;
    const std::vector<std::vector<int>>& bundles() const { return bundles_; }

private:
    int divider_;
    std::vector<std::vector<int>> bundles_;
};

/// A set of bundle indices matched with an equally sized set of agents.
struct SubProblem {
    std::vector<int> bundle_indices;  // sorted indices into Partition bundles
    std::vector<int> agent_indices;   // sorted agent indices

    bool operator==(const SubProblem& other) const = default;
};

/// Disjoint sub-problems over a prefix of the divider's bundles; the state
/// that Algorithm-style iteration grows and repairs.
struct Decomposition {
    std::vector<SubProblem> sub_problems;

    int agent_count() const;
    bool contains_agent(int agent) const;
    std::vector<int> all_agents() const;   // sorted
    std::vector<int> all_bundles() const;  // sorted

    bool operator==(const Decomposition& other) const = default;
};

/// Final per-agent item bundles. Empty bundles are allowed.
struct Allocation {
    std::vector<std::vector<int>> bundles;

    void normalize();  // sort every bundle ascending

    // Throws ValidationError unless the bundles are pairwise disjoint and
    // their union is exactly the instance's item set.
    void validate_partition(const Instance& instance) const;

    bool operator==(const Allocation& other) const = default;
};

}  // namespace propm
