#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace ballcover {

/// Disjoint sets over 0..n-1 with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t size() const { return parent_.size(); }

    std::size_t find(std::size_t i) {
        while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
        return i;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    /// Classes as ascending index lists, ordered by their smallest member.
    std::vector<std::vector<std::size_t>> groups() {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> slot(parent_.size(), parent_.size());
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            const std::size_t r = find(i);
            if (slot[r] == parent_.size()) {
                slot[r] = out.size();
                out.emplace_back();
            }
            out[slot[r]].push_back(i);
        }
        return out;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace ballcover
