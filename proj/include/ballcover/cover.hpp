#pragma once

// Cyclic covers Y -> Z of degree d branched along a normal-crossing divisor
// D = D_1 + ... + D_m with D_j in |L_j| and sum_j L_j = d L, under the
// Calabi-Yau condition (d - 1) L = -K_Z.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "chow.hpp"
#include "errors.hpp"
#include "multidegree.hpp"
#include "rational.hpp"

namespace ballcover {

inline constexpr std::size_t kMaxParts = 20;

class CoverData {
public:
    /// Checks d >= 2 and (d - 1) L_i = n_i + 1 on every factor.
    CoverData(Ambient ambient, int degree, Multidegree base)
        : ambient_(std::move(ambient)), degree_(degree), base_(std::move(base)) {
        if (degree_ < 2) throw validation_error("covering degree must be >= 2, got " + std::to_string(degree_));
        if (base_.size() != ambient_.factors())
            throw validation_error("base line bundle " + base_.str() + " does not match " + ambient_.str());
        for (std::size_t i = 0; i < ambient_.factors(); ++i) {
            if ((degree_ - 1) * base_[i] != ambient_.dim(i) + 1)
                throw validation_error("Calabi-Yau condition (d-1)L = -K_Z fails on factor " + std::to_string(i + 1) +
                                       ": (" + std::to_string(degree_) + "-1)*" + std::to_string(base_[i]) +
                                       " != " + std::to_string(ambient_.dim(i) + 1));
        }
    }

    /// Solves the Calabi-Yau condition for L; fails when (n_i + 1) is not divisible by d - 1.
    static CoverData calabi_yau(Ambient ambient, int degree) {
        if (degree < 2) throw validation_error("covering degree must be >= 2, got " + std::to_string(degree));
        std::vector<int> base;
        for (int n : ambient.factor_dims()) {
            if ((n + 1) % (degree - 1) != 0)
                throw validation_error("no line bundle L with (d-1)L = -K_Z on P^" + std::to_string(n) +
                                       " for d = " + std::to_string(degree));
            base.push_back((n + 1) / (degree - 1));
        }
        return CoverData(std::move(ambient), degree, Multidegree(std::move(base)));
    }

    /// ((P^1)^n, 3, O(1,...,1))
    static CoverData p1_cubic(std::size_t n) { return calabi_yau(Ambient::p1_power(n), 3); }

    const Ambient& ambient() const { return ambient_; }
    int degree() const { return degree_; }
    const Multidegree& base() const { return base_; }
    Multidegree branch_degree() const { return degree_ * base_; }

    friend bool operator==(const CoverData&, const CoverData&) = default;

private:
    Ambient ambient_;
    int degree_;
    Multidegree base_;
};

/// A multiset of effective nonzero multidegrees summing to d L. Parts are
/// stored in the order given; use sorted_parts() for an order-free view.
class PartitionType {
public:
    PartitionType(CoverData cover, std::vector<Multidegree> parts)
        : cover_(std::move(cover)), parts_(std::move(parts)) {
        const std::size_t t = cover_.ambient().factors();
        if (parts_.empty()) throw validation_error("partition type needs at least one part");
        if (parts_.size() > kMaxParts)
            throw validation_error("partition type has " + std::to_string(parts_.size()) + " parts, limit is " +
                                   std::to_string(kMaxParts));
        Multidegree sum = Multidegree::zero(t);
        for (const auto& p : parts_) {
            if (p.size() != t)
                throw validation_error("part " + p.str() + " has length " + std::to_string(p.size()) +
                                       ", expected " + std::to_string(t));
            if (!p.is_effective()) throw validation_error("part " + p.str() + " is not effective");
            if (p.is_zero()) throw validation_error("part " + p.str() + " is zero");
            sum += p;
        }
        if (sum != cover_.branch_degree())
            throw validation_error("parts sum to " + sum.str() + ", expected d*L = " + cover_.branch_degree().str());
    }

    /// Partition of (3,...,3) on (P^1)^n with d = 3; n is read off the parts.
    static PartitionType p1_cubic(std::vector<Multidegree> parts) {
        if (parts.empty()) throw validation_error("partition type needs at least one part");
        const std::size_t n = parts.front().size();
        return PartitionType(CoverData::p1_cubic(n), std::move(parts));
    }

    const CoverData& cover() const { return cover_; }
    const Ambient& ambient() const { return cover_.ambient(); }
    int degree() const { return cover_.degree(); }
    std::size_t dimension() const { return static_cast<std::size_t>(ambient().dimension()); }
    const std::vector<Multidegree>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    const Multidegree& operator[](std::size_t j) const { return parts_[j]; }

    bool is_p1_cubic() const { return ambient().is_p1_power() && degree() == 3; }

    std::vector<Multidegree> sorted_parts() const {
        auto s = parts_;
        std::sort(s.begin(), s.end(), std::greater<>());
        return s;
    }

    /// "(3,3,0)+(0,0,3)"
    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < parts_.size(); ++j) s += (j ? "+" : "") + parts_[j].str();
        return s;
    }

private:
    CoverData cover_;
    std::vector<Multidegree> parts_;
};

/// e(Z) = prod_i (n_i + 1)
inline std::int64_t euler_ambient(const Ambient& ambient) {
    std::int64_t e = 1;
    for (int n : ambient.factor_dims()) e *= n + 1;
    return e;
}

namespace detail {

// prod_j (1 + c_1(L_j))
inline ChowClass branch_chern_product(const PartitionType& t) {
    ChowClass prod = ChowClass::one(t.ambient());
    for (const auto& p : t.parts()) prod *= ChowClass::one(t.ambient()) + class_of(t.ambient(), p);
    return prod;
}

// integral of c(Z) / prod_j (1 + c_1(L_j))
inline Rational chern_quotient_integral(const PartitionType& t) {
    return integrate(total_chern(t.ambient()) * inverse_unit(branch_chern_product(t)));
}

}  // namespace detail

/// e(Y) = e(Z) + (d - 1) * int_Z c(Z) / prod_j (1 + c_1(L_j)).
inline std::int64_t euler_cover(const PartitionType& t) {
    const Rational value = Rational(euler_ambient(t.ambient())) +
                           Rational(t.degree() - 1) * detail::chern_quotient_integral(t);
    return to_int64(value, "e(Y)");
}

/// e(D) by inclusion-exclusion over the strata D_S = cap_{j in S} D_j, with
/// e(D_S) = int_Z c(Z) prod_{j in S} c_1(L_j) / (1 + c_1(L_j)).
/// Independent of euler_cover; the two are tied by e(Y) = d e(Z) - (d - 1) e(D).
inline std::int64_t euler_branch(const PartitionType& t) {
    const Ambient& amb = t.ambient();
    const std::size_t m = t.size();
    const ChowClass chern = total_chern(amb);
    std::vector<ChowClass> factors;
    factors.reserve(m);
    for (const auto& p : t.parts()) {
        const ChowClass alpha = class_of(amb, p);
        factors.push_back(alpha * inverse_unit(ChowClass::one(amb) + alpha));
    }
    Rational total = 0;
    for (std::uint32_t subset = 1; subset < (1u << m); ++subset) {
        ChowClass stratum = chern;
        int count = 0;
        for (std::size_t j = 0; j < m && !stratum.is_zero(); ++j) {
            if (subset & (1u << j)) {
                stratum *= factors[j];
                ++count;
            }
        }
        if (stratum.is_zero()) continue;
        const Rational e = integrate(stratum);
        to_int64(e, "stratum Euler characteristic");
        total += (count % 2 == 1) ? e : Rational(-e);
    }
    return to_int64(total, "e(D)");
}

/// b'_n(Y) = (-1)^n (d - 1) int_Z c(Z) / prod_j (1 + c_1(L_j)) = (-1)^n (e(Y) - e(Z)).
inline std::int64_t primitive_betti(const PartitionType& t) {
    const int sign = (t.dimension() % 2 == 0) ? 1 : -1;
    const Rational value = Rational(sign * (t.degree() - 1)) * detail::chern_quotient_integral(t);
    return to_int64(value, "b'_n(Y)");
}

}  // namespace ballcover
