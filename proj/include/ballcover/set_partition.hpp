#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ballcover {

inline constexpr int kMaxSetPartitionSize = 12;

/// A division of {0, ..., n-1} into disjoint nonempty blocks. Blocks are
/// ascending and ordered by their smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    std::size_t size() const { return blocks.size(); }

    /// prod_A (|A| - 1)!
    long long epsilon() const {
        long long e = 1;
        for (const auto& b : blocks)
            for (std::size_t k = 2; k < b.size(); ++k) e *= static_cast<long long>(k);
        return e;
    }

    /// Number of blocks with at least two elements.
    std::size_t nontrivial_blocks() const {
        std::size_t c = 0;
        for (const auto& b : blocks) c += b.size() >= 2;
        return c;
    }

    /// One-based rendering, e.g. "{1,2}{3}".
    std::string str() const {
        std::string s;
        for (const auto& b : blocks) {
            s += '{';
            for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k] + 1);
            s += '}';
        }
        return s;
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// All set partitions of {0, ..., n-1} in restricted-growth-string order.
inline std::vector<SetPartition> set_partitions(int n) {
    if (n < 1 || n > kMaxSetPartitionSize)
        throw validation_error("set_partitions: n must be in [1, " + std::to_string(kMaxSetPartitionSize) + "], got " +
                               std::to_string(n));
    const auto size = static_cast<std::size_t>(n);
    std::vector<SetPartition> out;
    // rgs[i] is the block of element i, with rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<std::size_t> rgs(size, 0), prefix_max(size, 0);
    for (;;) {
        SetPartition p;
        p.blocks.resize(prefix_max.back() + 1);
        for (std::size_t i = 0; i < size; ++i) p.blocks[rgs[i]].push_back(static_cast<int>(i));
        out.push_back(std::move(p));

        std::size_t i = size - 1;
        while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
        if (i == 0) break;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t k = i + 1; k < size; ++k) {
            rgs[k] = 0;
            prefix_max[k] = prefix_max[i];
        }
    }
    return out;
}

}  // namespace ballcover
