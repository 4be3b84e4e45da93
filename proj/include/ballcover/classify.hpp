#pragma once

// Partition types of (3,...,3) on (P^1)^n up to coordinate permutation:
// canonical forms, enumeration, the ball-type support criterion, Fermat
// half-twists, the refinement order and completeness.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chow.hpp"
#include "cover.hpp"
#include "errors.hpp"
#include "hodge.hpp"
#include "multidegree.hpp"

namespace ballcover {

inline constexpr int kMaxEnumerationDimension = 5;
inline constexpr int kMaxBallEnumerationDimension = 6;
inline constexpr std::size_t kMaxRefinementParts = 12;

using PartList = std::vector<Multidegree>;

struct CanonicalType {
    PartitionType partition;  // parts stored in canonical order
    PartList key;

    std::string str() const { return partition.str(); }
    friend bool operator==(const CanonicalType& a, const CanonicalType& b) { return a.key == b.key; }
    friend bool operator<(const CanonicalType& a, const CanonicalType& b) { return a.key < b.key; }
};

namespace detail {

inline void require_p1_cubic_type(const PartitionType& t, const char* what) {
    if (!t.is_p1_cubic())
        throw validation_error(std::string(what) + " needs ambient (P^1)^n and d = 3, got " + t.ambient().str() +
                               ", d = " + std::to_string(t.degree()));
}

// Parts of a (P^1)^n, d = 3 type have entries in 0..3, so a part is a base-4
// number with the first coordinate most significant and numeric order equals
// lexicographic order.
using Code = std::uint32_t;

class PermutationTables {
public:
    explicit PermutationTables(std::size_t n) : n_(n), codes_(std::size_t{1} << (2 * n)) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Code> table(codes_);
            for (Code c = 0; c < codes_; ++c) {
                Code image = 0;
                for (std::size_t i = 0; i < n; ++i) image = image * 4 + digit(c, perm[i]);
                table[c] = image;
            }
            tables_.push_back(std::move(table));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::size_t n() const { return n_; }
    const std::vector<std::vector<Code>>& tables() const { return tables_; }

    Code digit(Code c, std::size_t i) const { return (c >> (2 * (n_ - 1 - i))) & 3u; }

    Code encode(const Multidegree& m) const {
        Code c = 0;
        for (std::size_t i = 0; i < n_; ++i) c = c * 4 + static_cast<Code>(m[i]);
        return c;
    }
    Multidegree decode(Code c) const {
        std::vector<int> v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = static_cast<int>(digit(c, i));
        return Multidegree(std::move(v));
    }

    static const PermutationTables& get(std::size_t n) {
        static std::mutex mutex;
        static std::map<std::size_t, std::unique_ptr<PermutationTables>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<PermutationTables>(n);
        return *slot;
    }

private:
    std::size_t n_;
    Code codes_;
    std::vector<std::vector<Code>> tables_;
};

// Extremal (min or max) descending-sorted code list over all permutations.
inline std::vector<Code> extremal_codes(const PermutationTables& pt, const std::vector<Code>& codes, bool minimum) {
    std::vector<Code> best, candidate(codes.size());
    for (const auto& table : pt.tables()) {
        for (std::size_t j = 0; j < codes.size(); ++j) candidate[j] = table[codes[j]];
        std::sort(candidate.begin(), candidate.end(), std::greater<>());
        if (best.empty() || (minimum ? candidate < best : candidate > best)) best = candidate;
    }
    return best;
}

inline std::vector<Code> encode_parts(const PermutationTables& pt, const PartitionType& t) {
    std::vector<Code> codes;
    codes.reserve(t.size());
    for (const auto& p : t.parts()) {
        for (int a : p)
            if (a > 3) throw validation_error("part " + p.str() + " has an entry above 3");
        codes.push_back(pt.encode(p));
    }
    return codes;
}

inline PartList decode_parts(const PermutationTables& pt, const std::vector<Code>& codes) {
    PartList parts;
    parts.reserve(codes.size());
    for (Code c : codes) parts.push_back(pt.decode(c));
    return parts;
}

inline CanonicalType make_canonical(const PermutationTables& pt, const std::vector<Code>& canonical_codes) {
    PartList key = decode_parts(pt, canonical_codes);
    return CanonicalType{PartitionType::p1_cubic(key), key};
}

inline void check_enumeration_range(int n, int max, const char* what) {
    if (n < 2 || n > max)
        throw validation_error(std::string(what) + ": n must be in [2, " + std::to_string(max) + "], got " +
                               std::to_string(n));
}

}  // namespace detail

/// Lexicographic minimum over all coordinate permutations of the
/// descending-sorted part list.
inline PartList canonical_key(const PartitionType& t) {
    detail::require_p1_cubic_type(t, "canonical_key");
    const auto& pt = detail::PermutationTables::get(t.dimension());
    return detail::decode_parts(pt, detail::extremal_codes(pt, detail::encode_parts(pt, t), true));
}

inline CanonicalType canonicalize(const PartitionType& t) {
    PartList key = canonical_key(t);
    return CanonicalType{PartitionType::p1_cubic(key), key};
}

/// Representative used when printing tables: the lexicographic maximum, which
/// puts the heaviest part first, e.g. "(3,2)+(0,1)".
inline PartitionType display_form(const PartitionType& t) {
    detail::require_p1_cubic_type(t, "display_form");
    const auto& pt = detail::PermutationTables::get(t.dimension());
    return PartitionType::p1_cubic(
        detail::decode_parts(pt, detail::extremal_codes(pt, detail::encode_parts(pt, t), false)));
}

/// Every part has at most two nonzero components and every pairwise sum at
/// most three.
inline bool is_ball_type(const PartitionType& t) {
    detail::require_p1_cubic_type(t, "is_ball_type");
    for (const auto& p : t.parts())
        if (p.nonzero_count() > 2) return false;
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if ((t[a] + t[b]).nonzero_count() > 3) return false;
    return true;
}

/// At most one part is supported on any single coordinate.
inline bool is_reduced(const PartitionType& t) {
    std::set<std::size_t> seen;
    for (const auto& p : t.parts()) {
        const auto s = p.support();
        if (s.size() == 1 && !seen.insert(s.front()).second) return false;
    }
    return true;
}

/// All partitions of (3,...,3) into effective nonzero parts, one canonical
/// representative per class, sorted by key.
inline std::vector<CanonicalType> enumerate_partitions(int n) {
    detail::check_enumeration_range(n, kMaxEnumerationDimension, "enumerate_partitions");
    const auto size = static_cast<std::size_t>(n);
    const auto& pt = detail::PermutationTables::get(size);

    std::vector<detail::Code> candidates;
    for (detail::Code c = 1; c < (detail::Code{1} << (2 * size)); ++c) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end(), std::greater<>());

    std::set<std::vector<detail::Code>> seen;
    std::vector<detail::Code> current;
    std::vector<int> remaining(size, 3);

    auto fits = [&](detail::Code c) {
        for (std::size_t i = 0; i < size; ++i)
            if (static_cast<int>(pt.digit(c, i)) > remaining[i]) return false;
        return true;
    };
    // Parts are chosen in descending order, so the next part must carry the
    // first coordinate the remainder has not yet used up.
    auto rec = [&](auto&& self, std::size_t start) -> void {
        std::size_t lead = 0;
        while (lead < size && remaining[lead] == 0) ++lead;
        if (lead == size) {
            seen.insert(detail::extremal_codes(pt, current, true));
            return;
        }
        for (std::size_t idx = start; idx < candidates.size(); ++idx) {
            const detail::Code c = candidates[idx];
            bool leading = pt.digit(c, lead) != 0;
            for (std::size_t i = 0; i < lead && leading; ++i) leading = pt.digit(c, i) == 0;
            if (!leading || !fits(c)) continue;
            for (std::size_t i = 0; i < size; ++i) remaining[i] -= static_cast<int>(pt.digit(c, i));
            current.push_back(c);
            self(self, idx);
            current.pop_back();
            for (std::size_t i = 0; i < size; ++i) remaining[i] += static_cast<int>(pt.digit(c, i));
        }
    };
    rec(rec, 0);

    std::vector<CanonicalType> out;
    out.reserve(seen.size());
    for (const auto& codes : seen) out.push_back(detail::make_canonical(pt, codes));
    std::sort(out.begin(), out.end());
    return out;
}

/// Reduced ball-type classes. Two-coordinate parts must pairwise share a
/// coordinate; whatever is left on each coordinate becomes one single part.
inline std::vector<CanonicalType> enumerate_ball_types(int n) {
    detail::check_enumeration_range(n, kMaxBallEnumerationDimension, "enumerate_ball_types");
    const auto size = static_cast<std::size_t>(n);
    const auto& pt = detail::PermutationTables::get(size);

    std::vector<Multidegree> pairs;
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a + 1; b < size; ++b)
            for (int x = 1; x <= 3; ++x)
                for (int y = 1; y <= 3; ++y) {
                    Multidegree m = Multidegree::zero(size);
                    m[a] = x;
                    m[b] = y;
                    pairs.push_back(m);
                }
    std::sort(pairs.begin(), pairs.end(), std::greater<>());

    std::set<std::vector<detail::Code>> seen;
    std::vector<std::size_t> chosen;
    std::vector<int> remaining(size, 3);

    auto emit = [&] {
        std::vector<detail::Code> codes;
        for (std::size_t idx : chosen) codes.push_back(pt.encode(pairs[idx]));
        for (std::size_t c = 0; c < size; ++c)
            if (remaining[c] > 0) codes.push_back(pt.encode(Multidegree::unit(size, c, remaining[c])));
        seen.insert(detail::extremal_codes(pt, codes, true));
    };
    auto shares_coordinate = [&](const Multidegree& p) {
        for (std::size_t idx : chosen) {
            bool shared = false;
            for (std::size_t i = 0; i < size && !shared; ++i) shared = p[i] != 0 && pairs[idx][i] != 0;
            if (!shared) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        emit();
        for (std::size_t idx = start; idx < pairs.size(); ++idx) {
            const Multidegree& p = pairs[idx];
            bool fits = true;
            for (std::size_t i = 0; i < size && fits; ++i) fits = p[i] <= remaining[i];
            if (!fits || (size > 2 && !shares_coordinate(p))) continue;
            for (std::size_t i = 0; i < size; ++i) remaining[i] -= p[i];
            chosen.push_back(idx);
            self(self, idx);
            chosen.pop_back();
            for (std::size_t i = 0; i < size; ++i) remaining[i] += p[i];
        }
    };
    rec(rec, 0);

    std::vector<CanonicalType> out;
    out.reserve(seen.size());
    for (const auto& codes : seen) out.push_back(detail::make_canonical(pt, codes));
    std::sort(out.begin(), out.end());
    return out;
}

/// Appends a zero coordinate to every part and adds (0,...,0,3).
inline PartitionType half_twist(const PartitionType& t) {
    if (t.degree() != 3) throw validation_error("half_twist needs d = 3, got d = " + std::to_string(t.degree()));
    if (!t.ambient().is_p1_power()) throw validation_error("half_twist needs ambient (P^1)^n");
    const std::size_t n = t.dimension();
    PartList parts;
    for (const auto& p : t.parts()) {
        auto v = p.entries();
        v.push_back(0);
        parts.emplace_back(std::move(v));
    }
    parts.push_back(Multidegree::unit(n + 1, n, 3));
    return PartitionType::p1_cubic(std::move(parts));
}

/// Base type when some coordinate c carries exactly one part and that part is 3 e_c.
inline std::optional<PartitionType> is_half_twist(const PartitionType& t) {
    if (!t.is_p1_cubic() || t.dimension() < 2) return std::nullopt;
    const std::size_t n = t.dimension();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t count = 0, which = 0;
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t[j][c] != 0) {
                ++count;
                which = j;
            }
        if (count != 1 || t[which] != Multidegree::unit(n, c, 3)) continue;
        PartList parts;
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (j == which) continue;
            std::vector<int> v;
            for (std::size_t i = 0; i < n; ++i)
                if (i != c) v.push_back(t[j][i]);
            parts.emplace_back(std::move(v));
        }
        return PartitionType::p1_cubic(std::move(parts));
    }
    return std::nullopt;
}

namespace detail {

inline void check_refinement_inputs(const PartitionType& fine, const PartitionType& coarse) {
    if (!(fine.cover() == coarse.cover()))
        throw validation_error("is_refinement: " + fine.str() + " and " + coarse.str() +
                               " live on different covers");
    if (fine.size() > kMaxRefinementParts || coarse.size() > kMaxRefinementParts)
        throw validation_error("is_refinement supports at most " + std::to_string(kMaxRefinementParts) + " parts");
}

// Assign fine parts one by one to coarse slots; remembers dead states
// (next fine index, sorted slot remainders).
inline bool refines_exactly(const PartList& fine, const PartList& coarse) {
    std::set<std::pair<std::size_t, PartList>> dead;
    PartList slots = coarse;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == fine.size()) {
            return std::all_of(slots.begin(), slots.end(), [](const Multidegree& m) { return m.is_zero(); });
        }
        PartList state = slots;
        std::sort(state.begin(), state.end());
        if (dead.count({i, state})) return false;
        std::set<Multidegree> tried;
        for (std::size_t j = 0; j < slots.size(); ++j) {
            if (!fine[i].fits_in(slots[j]) || !tried.insert(slots[j]).second) continue;
            slots[j] -= fine[i];
            const bool ok = self(self, i + 1);
            slots[j] += fine[i];
            if (ok) return true;
        }
        dead.insert({i, std::move(state)});
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

/// The parts of fine group into blocks whose sums are exactly the parts of coarse.
inline bool is_refinement(const PartitionType& fine, const PartitionType& coarse) {
    detail::check_refinement_inputs(fine, coarse);
    if (fine.size() < coarse.size()) return false;
    return detail::refines_exactly(fine.sorted_parts(), coarse.sorted_parts());
}

/// is_refinement after some coordinate permutation of coarse.
inline bool is_refinement_up_to_symmetry(const PartitionType& fine, const PartitionType& coarse) {
    detail::check_refinement_inputs(fine, coarse);
    if (fine.size() < coarse.size()) return false;
    const std::size_t n = fine.dimension();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const PartList f = fine.sorted_parts();
    do {
        PartList c;
        for (const auto& p : coarse.parts()) {
            std::vector<int> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = p[perm[i]];
            c.emplace_back(std::move(v));
        }
        if (detail::refines_exactly(f, c)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace detail {

inline std::vector<CanonicalType> maximal_elements(const std::vector<CanonicalType>& pool) {
    std::vector<CanonicalType> out;
    for (const auto& t : pool) {
        bool maximal = true;
        for (const auto& other : pool) {
            if (other.partition.size() >= t.partition.size()) continue;
            if (is_refinement_up_to_symmetry(t.partition, other.partition)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(t);
    }
    return out;
}

}  // namespace detail

/// Reduced ball types that are not a proper refinement of another one.
inline std::vector<CanonicalType> maximal_ball_types(int n) {
    if (n < 3 || n > 4)
        throw validation_error("maximal_ball_types: n must be 3 or 4, got " + std::to_string(n));
    return detail::maximal_elements(enumerate_ball_types(n));
}

/// 1 + (1/2) int D_p D_q (K + D_p + D_q) on (P^1)^3: the arithmetic genus of D_p cap D_q.
inline std::int64_t intersection_genus(const Multidegree& p, const Multidegree& q) {
    if (p.size() != 3 || q.size() != 3)
        throw validation_error("intersection_genus works on (P^1)^3, got " + p.str() + ", " + q.str());
    if (!p.is_effective() || !q.is_effective()) throw validation_error("intersection_genus needs effective classes");
    const Ambient amb = Ambient::p1_power(3);
    const Multidegree adjoint = p + q - Multidegree{2, 2, 2};
    const Rational value =
        1 + integrate(class_of(amb, p) * class_of(amb, q) * class_of(amb, adjoint)) / Rational(2);
    return to_int64(value, "intersection genus");
}

/// Every pairwise intersection D_i cap D_j is a union of rational curves.
/// For n = 3 this is tested through the arithmetic genus (empty intersections
/// are skipped); for n >= 4 every ball type qualifies.
inline bool is_complete(const PartitionType& t) {
    detail::require_p1_cubic_type(t, "is_complete");
    if (t.dimension() < 3) throw validation_error("is_complete needs n >= 3");
    if (!is_ball_type(t)) throw validation_error("is_complete is only defined for ball types, got " + t.str());
    if (t.dimension() >= 4) return true;
    const Ambient amb = Ambient::p1_power(3);
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b) {
            if ((class_of(amb, t[a]) * class_of(amb, t[b])).is_zero()) continue;
            if (intersection_genus(t[a], t[b]) > 0) return false;
        }
    return true;
}

/// Every pairwise sum of parts has some component <= 1.
inline bool is_complete_componentwise(const PartitionType& t) {
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if ((t[a] + t[b]).min_entry() > 1) return false;
    return true;
}

/// Complete reduced ball types not properly refined by another complete one.
inline std::vector<CanonicalType> maximal_complete_types(int n) {
    if (n < 3 || n > 4)
        throw validation_error("maximal_complete_types: n must be 3 or 4, got " + std::to_string(n));
    std::vector<CanonicalType> pool;
    for (auto& t : enumerate_ball_types(n))
        if (is_complete(t.partition)) pool.push_back(std::move(t));
    return detail::maximal_elements(pool);
}

}  // namespace ballcover
