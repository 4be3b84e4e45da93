#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ballcover {

/// Integer degree vector of a line bundle on a product of projective spaces,
/// one entry per factor. Ordered lexicographically.
class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::vector<int> entries) : entries_(std::move(entries)) {}
    Multidegree(std::initializer_list<int> entries) : entries_(entries) {}

    static Multidegree zero(std::size_t length) { return Multidegree(std::vector<int>(length, 0)); }

    static Multidegree unit(std::size_t length, std::size_t coordinate, int value = 1) {
        Multidegree m = zero(length);
        m.entries_.at(coordinate) = value;
        return m;
    }

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](int a) { return a == 0; });
    }
    bool is_effective() const {
        return std::all_of(entries_.begin(), entries_.end(), [](int a) { return a >= 0; });
    }

    /// Coordinates carrying a nonzero entry, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] != 0) s.push_back(i);
        return s;
    }
    std::size_t nonzero_count() const {
        return static_cast<std::size_t>(
            std::count_if(entries_.begin(), entries_.end(), [](int a) { return a != 0; }));
    }
    int min_entry() const { return *std::min_element(entries_.begin(), entries_.end()); }
    int total() const {
        int s = 0;
        for (int a : entries_) s += a;
        return s;
    }

    /// Componentwise a <= b.
    bool fits_in(const Multidegree& other) const {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] > other.entries_[i]) return false;
        return true;
    }

    Multidegree& operator+=(const Multidegree& o) {
        check_same_length(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    Multidegree& operator-=(const Multidegree& o) {
        check_same_length(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
    friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }
    friend Multidegree operator*(int k, Multidegree a) {
        for (int& x : a.entries_) x *= k;
        return a;
    }

    friend bool operator==(const Multidegree&, const Multidegree&) = default;
    friend std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) {
        return a.entries_ <=> b.entries_;
    }

    /// e.g. "(3,3,0)"
    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) os << ',';
            os << entries_[i];
        }
        os << ')';
        return os.str();
    }

private:
    void check_same_length(const Multidegree& o) const {
        if (o.size() != size())
            throw validation_error("multidegree length mismatch: " + str() + " vs " + o.str());
    }

    std::vector<int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Multidegree& m) { return os << m.str(); }

}  // namespace ballcover
