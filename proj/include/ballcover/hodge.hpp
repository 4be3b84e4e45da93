#pragma once

// Closed-form Hodge numbers of the chi-eigenspace of H^n(Y) for cyclic
// Calabi-Yau covers, and the ball-type test built on them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chow.hpp"
#include "cover.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "set_partition.hpp"

namespace ballcover {

namespace detail {

inline void require_p1_cubic(const PartitionType& t, const char* what) {
    if (!t.is_p1_cubic())
        throw validation_error(std::string(what) + " needs ambient (P^1)^n and d = 3, got " + t.ambient().str() +
                               ", d = " + std::to_string(t.degree()));
    // Column sums are 3 because the parts sum to d L = (3, ..., 3).
}

// sum_j prod_{i in A} a_j^i
inline Integer block_weight(const PartitionType& t, const std::vector<int>& block) {
    Integer sum = 0;
    for (const auto& part : t.parts()) {
        Integer prod = 1;
        for (int i : block) {
            prod *= part[static_cast<std::size_t>(i)];
            if (prod == 0) break;
        }
        sum += prod;
    }
    return sum;
}

// prod over blocks with |A| >= 2 of block_weight; singletons contribute nothing.
inline Integer nontrivial_block_product(const PartitionType& t, const SetPartition& p) {
    Integer prod = 1;
    for (const auto& b : p.blocks) {
        if (b.size() < 2) continue;
        prod *= block_weight(t, b);
        if (prod == 0) break;
    }
    return prod;
}

}  // namespace detail

/// h^n_chi(Y) for (P^1)^n, d = 3:
///   sum_{I in Pi_n} eps_I prod_{A in I, |A| >= 2} (sum_j prod_{i in A} a_j^i).
inline std::int64_t h_chi_top(const PartitionType& t) {
    detail::require_p1_cubic(t, "h_chi_top");
    Integer total = 0;
    for (const auto& p : set_partitions(static_cast<int>(t.dimension())))
        total += Integer(p.epsilon()) * detail::nontrivial_block_product(t, p);
    return to_int64(Rational(total), "h^n_chi");
}

/// Dimension of the GIT moduli of normal-crossing divisors of type T,
///   sum_j (prod_i C(n_i + a_j^i, n_i) - 1) - sum_i ((n_i + 1)^2 - 1),
/// which equals h^{n-1,1}_chi. May be negative; the caller decides what that means.
inline std::int64_t git_dimension(const PartitionType& t) {
    const Ambient& amb = t.ambient();
    Integer total = 0;
    for (const auto& part : t.parts()) {
        Integer sections = 1;
        for (std::size_t i = 0; i < amb.factors(); ++i) sections *= binomial(amb.dim(i) + part[i], amb.dim(i));
        total += sections - 1;
    }
    for (int n : amb.factor_dims()) total -= (n + 1) * (n + 1) - 1;
    return to_int64(Rational(total), "GIT dimension");
}

/// sum_{1 <= p <= n-2} h^{p,n-p}_chi for (P^1)^n, d = 3, n >= 3:
///   sum_{I in Pi_n, |I| < n} (eps_I - delta_I) prod_{A in I, |A| >= 2} (...),
/// delta_I = 1 iff exactly one block has two or more elements.
inline std::int64_t defect(const PartitionType& t) {
    detail::require_p1_cubic(t, "defect");
    const int n = static_cast<int>(t.dimension());
    if (n < 3) throw validation_error("defect is defined for n >= 3, got n = " + std::to_string(n));
    Integer total = 0;
    for (const auto& p : set_partitions(n)) {
        if (p.size() >= static_cast<std::size_t>(n)) continue;
        const long long delta = p.nontrivial_blocks() == 1 ? 1 : 0;
        const long long weight = p.epsilon() - delta;
        if (weight == 0) continue;
        total += Integer(weight) * detail::nontrivial_block_product(t, p);
    }
    return to_int64(Rational(total), "defect");
}

struct HodgeSummary {
    std::int64_t euler_Z = 0;
    std::int64_t euler_D = 0;
    std::int64_t euler_Y = 0;
    std::int64_t b_prime = 0;
    // b'_n / (d - 1). For d = 3 this is h^n_chi exactly; for larger d it is
    // the per-character average and need not be an integer.
    Rational h_chi_n = 0;
    std::int64_t h_n11 = 0;
    // h^n_chi - 1 - h^{n-1,1}_chi, i.e. the sum of h^{p,n-p}_chi over 1 <= p <= n-2.
    Rational defect = 0;
    bool is_ball = false;
    // True when the set-partition formulas were evaluated and matched the Chow integrals.
    bool combinatorial_check = false;
};

/// Aggregates the Euler, Betti and Hodge data of T. On (P^1)^n with d = 3 the
/// closed forms are cross-checked against the Chow integrals and any
/// disagreement throws consistency_error.
inline HodgeSummary hodge_summary(const PartitionType& t) {
    HodgeSummary s;
    s.euler_Z = euler_ambient(t.ambient());
    s.euler_Y = euler_cover(t);
    s.euler_D = euler_branch(t);
    s.b_prime = primitive_betti(t);
    s.h_n11 = git_dimension(t);

    const int d = t.degree();
    if (s.euler_Y != d * s.euler_Z - (d - 1) * s.euler_D)
        throw consistency_error("Hurwitz identity fails for " + t.str() + ": e(Y)=" + std::to_string(s.euler_Y) +
                                ", e(Z)=" + std::to_string(s.euler_Z) + ", e(D)=" + std::to_string(s.euler_D));
    const int sign = (t.dimension() % 2 == 0) ? 1 : -1;
    if (s.b_prime != sign * (s.euler_Y - s.euler_Z))
        throw consistency_error("b'_n != (-1)^n (e(Y) - e(Z)) for " + t.str());

    s.h_chi_n = Rational(s.b_prime, d - 1);
    s.defect = s.h_chi_n - 1 - s.h_n11;

    if (t.is_p1_cubic()) {
        const std::int64_t h = h_chi_top(t);
        if (2 * h != s.b_prime)
            throw consistency_error("2 h^n_chi = " + std::to_string(2 * h) + " but the Chow integral gives b' = " +
                                    std::to_string(s.b_prime) + " for " + t.str());
        if (t.dimension() >= 3) {
            const std::int64_t combinatorial = defect(t);
            if (Rational(combinatorial) != s.defect)
                throw consistency_error("set-partition defect " + std::to_string(combinatorial) +
                                        " != h^n_chi - 1 - h^{n-1,1}_chi = " + s.defect.str() + " for " + t.str());
        }
        s.combinatorial_check = true;
    }
    s.is_ball = s.defect == 0;
    return s;
}

// ---------------------------------------------------------------------------
// Hypersurface arrangements in P^n.

struct PnInvariants {
    Rational b_prime = 0;
    std::int64_t git_dim = 0;
    Rational defect = 0;  // b'/(d-1) - 1 - git_dim
    bool ball = false;
};

/// Partitions of n as multiplicity maps part -> count, largest parts first.
inline std::vector<std::map<int, int>> integer_partitions(int n) {
    std::vector<std::map<int, int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int largest) -> void {
        if (remaining == 0) {
            std::map<int, int> m;
            for (int p : current) ++m[p];
            out.push_back(std::move(m));
            return;
        }
        for (int p = std::min(remaining, largest); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Invariants of the d-fold cover of P^n branched along hypersurfaces of the
/// given degrees:
///   b'_n = (d - 1) sum_pi prod_{t in pi} (s_t - n - 1) / t  /  prod_t m(t, pi)!,
/// with s_t = sum_i l_i^t, and the GIT dimension sum_i (C(n + l_i, n) - 1) - (n + 1)^2 + 1.
inline PnInvariants pn_invariants(int n, int d, const std::vector<int>& degrees) {
    if (n < 1 || n > kMaxSetPartitionSize)
        throw validation_error("pn_invariants: n must be in [1, " + std::to_string(kMaxSetPartitionSize) + "]");
    if (d < 2) throw validation_error("pn_invariants: d must be >= 2");
    if (degrees.empty()) throw validation_error("pn_invariants: no hypersurfaces given");
    long long s1 = 0;
    for (int l : degrees) {
        if (l < 1) throw validation_error("pn_invariants: degrees must be positive");
        s1 += l;
    }
    if (static_cast<long long>(d) * (n + 1) != static_cast<long long>(d - 1) * s1)
        throw validation_error("Calabi-Yau condition d/(d-1) = s/(n+1) fails: d=" + std::to_string(d) +
                               ", s=" + std::to_string(s1) + ", n=" + std::to_string(n));

    auto power_sum = [&](int t) {
        Integer s = 0;
        for (int l : degrees) s += boost::multiprecision::pow(Integer(l), static_cast<unsigned>(t));
        return s;
    };

    Rational sum = 0;
    for (const auto& pi : integer_partitions(n)) {
        Rational term = 1;
        for (const auto& [t, mult] : pi) {
            const Rational factor(Integer(power_sum(t) - n - 1), Integer(t));
            for (int k = 0; k < mult; ++k) term *= factor;
            term /= Rational(factorial(mult));
        }
        sum += term;
    }

    PnInvariants out;
    out.b_prime = Rational(d - 1) * sum;
    if (!is_integral(out.b_prime))
        throw consistency_error("b'_n for P^" + std::to_string(n) + " is not an integer: " + out.b_prime.str());

    Integer git = 0;
    for (int l : degrees) git += binomial(n + l, n) - 1;
    git -= (n + 1) * (n + 1) - 1;
    out.git_dim = to_int64(Rational(git), "GIT dimension");
    out.defect = out.b_prime / (d - 1) - 1 - out.git_dim;
    out.ball = out.defect == 0;
    return out;
}

}  // namespace ballcover
