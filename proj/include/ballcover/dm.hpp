#pragma once

// Deligne-Mostow weight data of the isotrivial elliptic fibration obtained by
// projecting a ball-type cover of (P^1)^n onto one P^1 factor. Weights are in
// units of 1/6: type II fibers give 1, type IV give 2, type IV* give 4, and a
// tangency with a vertical fiber gives 5.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "cover.hpp"
#include "errors.hpp"
#include "union_find.hpp"

namespace ballcover {

inline constexpr int kDMWeightTotal = 12;

class DMWeights {
public:
    DMWeights() = default;
    explicit DMWeights(std::vector<int> weights) : w_(std::move(weights)) {
        for (int x : w_)
            if (x < 1 || x > 5) throw validation_error("DM weight " + std::to_string(x) + " outside 1..5");
        std::sort(w_.begin(), w_.end());
    }

    /// Parses "(1^8,4)" or "(1^8, 4)".
    static DMWeights parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.size() < 2 || s.front() != '(' || s.back() != ')')
            throw validation_error("DM data must look like (1^8,4), got '" + text + "'");
        s = s.substr(1, s.size() - 2);
        std::vector<int> w;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const std::size_t comma = std::min(s.find(',', pos), s.size());
            const std::string item = s.substr(pos, comma - pos);
            const std::size_t caret = item.find('^');
            try {
                std::size_t used = 0;
                const int weight = std::stoi(item.substr(0, caret), &used);
                if (used != std::min(caret, item.size())) throw std::invalid_argument(item);
                int count = 1;
                if (caret != std::string::npos) {
                    const std::string exponent = item.substr(caret + 1);
                    count = std::stoi(exponent, &used);
                    if (used != exponent.size() || count < 1) throw std::invalid_argument(item);
                }
                w.insert(w.end(), static_cast<std::size_t>(count), weight);
            } catch (const std::logic_error&) {
                throw validation_error("bad DM entry '" + item + "' in '" + text + "'");
            }
            pos = comma + 1;
        }
        return DMWeights(std::move(w));
    }

    const std::vector<int>& weights() const { return w_; }
    std::size_t points() const { return w_.size(); }
    int sum() const { return std::accumulate(w_.begin(), w_.end(), 0); }
    std::size_t count(int weight) const { return static_cast<std::size_t>(std::count(w_.begin(), w_.end(), weight)); }

    /// Removes one point of each listed weight and adds one of weight merged.
    /// Returns false (leaving *this unchanged) when a point is missing.
    bool merge(const std::vector<int>& removed, int merged) {
        std::vector<int> w = w_;
        for (int r : removed) {
            auto it = std::find(w.begin(), w.end(), r);
            if (it == w.end()) return false;
            w.erase(it);
        }
        w.push_back(merged);
        std::sort(w.begin(), w.end());
        w_ = std::move(w);
        return true;
    }

    /// "(1^8,4)", ascending by weight.
    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < w_.size();) {
            std::size_t e = k;
            while (e < w_.size() && w_[e] == w_[k]) ++e;
            if (k) s += ',';
            s += std::to_string(w_[k]);
            if (e - k > 1) s += '^' + std::to_string(e - k);
            k = e;
        }
        return s + ')';
    }

    friend bool operator==(const DMWeights&, const DMWeights&) = default;
    friend auto operator<=>(const DMWeights& a, const DMWeights& b) { return a.w_ <=> b.w_; }

private:
    std::vector<int> w_;
};

/// Role of a part with respect to the projection onto factor i:
/// A meets both P_i and one fiber direction k, B is a union of fibers over
/// P_i, C is constant along P_i with direction k.
struct MemberKind {
    enum class Kind { A, B, C };
    Kind kind = Kind::B;
    std::size_t direction = 0;  // meaningful for A and C
    int m_i = 0;
    int m_k = 0;

    std::string str() const {
        switch (kind) {
            case Kind::A:
                return "A(k=" + std::to_string(direction + 1) + ",m_i=" + std::to_string(m_i) +
                       ",m_k=" + std::to_string(m_k) + ")";
            case Kind::B:
                return "B(m_i=" + std::to_string(m_i) + ")";
            case Kind::C:
                return "C(k=" + std::to_string(direction + 1) + ",m_k=" + std::to_string(m_k) + ")";
        }
        return "?";
    }
    friend bool operator==(const MemberKind&, const MemberKind&) = default;
};

/// Zero-based factors i such that every part lives on {i} plus at most one other coordinate.
inline std::vector<std::size_t> valid_projections(const PartitionType& t) {
    detail::require_p1_cubic_type(t, "valid_projections");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.dimension(); ++i) {
        const bool ok = std::all_of(t.parts().begin(), t.parts().end(), [&](const Multidegree& p) {
            return p.nonzero_count() - (p[i] != 0 ? 1 : 0) <= 1;
        });
        if (ok) out.push_back(i);
    }
    return out;
}

inline void require_valid_projection(const PartitionType& t, std::size_t i) {
    const auto valid = valid_projections(t);
    if (std::find(valid.begin(), valid.end(), i) == valid.end())
        throw validation_error("projection " + std::to_string(i + 1) + " is not valid for " + t.str());
}

inline std::vector<MemberKind> classify_members(const PartitionType& t, std::size_t i) {
    require_valid_projection(t, i);
    std::vector<MemberKind> out;
    for (const auto& p : t.parts()) {
        MemberKind m;
        m.m_i = p[i];
        std::size_t other = t.dimension();
        for (std::size_t c : p.support())
            if (c != i) other = c;
        if (other == t.dimension()) {
            m.kind = MemberKind::Kind::B;
        } else {
            m.direction = other;
            m.m_k = p[other];
            m.kind = m.m_i == 0 ? MemberKind::Kind::C : MemberKind::Kind::A;
        }
        out.push_back(m);
    }
    return out;
}

/// Weights of the singular fibers of the projection to factor i for an SNC branch divisor.
inline DMWeights derive_weights(const PartitionType& t, std::size_t i) {
    using K = MemberKind::Kind;
    const auto members = classify_members(t, i);
    std::vector<int> w;
    auto add = [&w](long long count, int weight) { w.insert(w.end(), static_cast<std::size_t>(count), weight); };
    for (const auto& m : members) {
        if (m.kind == K::A) add(2LL * m.m_i * (m.m_k - 1), 1);
        if (m.kind == K::B) add(m.m_i, 4);
    }
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const MemberKind& x = members[a];
            const MemberKind& y = members[b];
            if (x.kind == K::B || y.kind == K::B || x.direction != y.direction) continue;
            if (x.kind == K::A && y.kind == K::A) add(1LL * x.m_i * y.m_k + 1LL * y.m_i * x.m_k, 2);
            else if (x.kind == K::A && y.kind == K::C) add(1LL * x.m_i * y.m_k, 2);
            else if (x.kind == K::C && y.kind == K::A) add(1LL * y.m_i * x.m_k, 2);
        }
    DMWeights out(std::move(w));
    if (out.sum() != kDMWeightTotal)
        throw consistency_error("DM weights " + out.str() + " of " + t.str() + " at projection " +
                                std::to_string(i + 1) + " sum to " + std::to_string(out.sum()));
    return out;
}

/// A non-SNC feature of an n = 2 branch curve. Part indices are zero-based.
struct Degeneration {
    enum class Kind { Node, Tangency };
    Kind kind = Kind::Node;
    std::size_t first = 0;
    std::size_t second = 0;

    static Degeneration node(std::size_t j) { return {Kind::Node, j, j}; }
    static Degeneration tangency(std::size_t a, std::size_t b) { return {Kind::Tangency, a, b}; }

    std::string str() const {
        if (kind == Kind::Node) return "node(" + std::to_string(first + 1) + ")";
        return "tangent(" + std::to_string(first + 1) + "," + std::to_string(second + 1) + ")";
    }
    friend bool operator==(const Degeneration&, const Degeneration&) = default;
};

inline DMWeights apply_degenerations(const PartitionType& t, std::size_t i,
                                     const std::vector<Degeneration>& descriptors) {
    using K = MemberKind::Kind;
    detail::require_p1_cubic_type(t, "apply_degenerations");
    if (t.dimension() != 2)
        throw validation_error("degenerations are only modelled on (P^1)^2, got n = " + std::to_string(t.dimension()));
    const auto members = classify_members(t, i);
    DMWeights w = derive_weights(t, i);
    for (const auto& d : descriptors) {
        if (d.first >= t.size() || d.second >= t.size())
            throw descriptor_error(d.str() + " refers to a part that does not exist in " + t.str());
        const std::string where = d.str() + " at projection " + std::to_string(i + 1) + " on " + w.str();
        if (d.kind == Degeneration::Kind::Node) {
            if (members[d.first].kind != K::A)
                throw descriptor_error(d.str() + ": part " + t[d.first].str() + " is " + members[d.first].str() +
                                       " at projection " + std::to_string(i + 1) + ", a node needs kind A");
            if (!w.merge({1, 1}, 2)) throw descriptor_error(where + ": two weight-1 points are not available");
            continue;
        }
        if (d.first == d.second) throw descriptor_error(d.str() + ": a tangency needs two distinct parts");
        const MemberKind& x = members[d.first];
        const MemberKind& y = members[d.second];
        const bool a_b = (x.kind == K::A && y.kind == K::B) || (x.kind == K::B && y.kind == K::A);
        const bool same_fiber = x.kind != K::B && y.kind != K::B && (x.kind == K::A || y.kind == K::A) &&
                                x.direction == y.direction;
        if (a_b) {
            if (!w.merge({1, 4}, 5)) throw descriptor_error(where + ": needs a weight-1 and a weight-4 point");
        } else if (same_fiber) {
            if (!w.merge({2, 2}, 4)) throw descriptor_error(where + ": two weight-2 points are not available");
        } else {
            throw descriptor_error(d.str() + ": kinds " + x.str() + " and " + y.str() + " cannot be tangent");
        }
    }
    if (w.sum() != kDMWeightTotal) throw consistency_error("degenerated DM weights " + w.str() + " do not sum to 12");
    return w;
}

/// A labelled lattice with the DM data it is known to carry.
struct DMEntry {
    std::string label;
    std::vector<DMWeights> weights;
};

/// Labels joined whenever they share an identical weight multiset.
inline std::vector<std::vector<std::string>> commensurability_classes(const std::vector<DMEntry>& entries) {
    DisjointSets sets(entries.size());
    std::map<DMWeights, std::size_t> owner;
    for (std::size_t e = 0; e < entries.size(); ++e)
        for (const auto& w : entries[e].weights) {
            auto [it, inserted] = owner.emplace(w, e);
            if (!inserted) sets.unite(it->second, e);
        }
    std::vector<std::vector<std::string>> out;
    for (const auto& group : sets.groups()) {
        std::vector<std::string> labels;
        for (std::size_t e : group) labels.push_back(entries[e].label);
        out.push_back(std::move(labels));
    }
    return out;
}

/// Weight multisets joined whenever they occur in the same entry; each class
/// is sorted, classes ordered by first occurrence.
inline std::vector<std::vector<DMWeights>> commensurable_weight_classes(const std::vector<DMEntry>& entries) {
    std::vector<DMWeights> distinct;
    std::map<DMWeights, std::size_t> index;
    for (const auto& e : entries)
        for (const auto& w : e.weights)
            if (index.emplace(w, distinct.size()).second) distinct.push_back(w);
    DisjointSets sets(distinct.size());
    for (const auto& e : entries)
        for (std::size_t k = 1; k < e.weights.size(); ++k) sets.unite(index[e.weights[0]], index[e.weights[k]]);
    std::vector<std::vector<DMWeights>> out;
    for (const auto& group : sets.groups()) {
        std::vector<DMWeights> cls;
        for (std::size_t g : group) cls.push_back(distinct[g]);
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace ballcover
