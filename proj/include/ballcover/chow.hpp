#pragma once

// Truncated intersection ring of a product of projective spaces
//
//     A*(P^{n_1} x ... x P^{n_t}) = Q[h_1, ..., h_t] / (h_1^{n_1+1}, ..., h_t^{n_t+1})
//
// with exact rational coefficients. Classes are sparse maps from exponent
// vectors to coefficients and are kept normalized (no stored zeros), so
// equality is plain map equality.

#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "multidegree.hpp"
#include "rational.hpp"

namespace ballcover {

inline constexpr int kMaxAmbientDimension = 16;

class Ambient {
public:
    explicit Ambient(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
        if (dims_.empty()) throw validation_error("ambient needs at least one factor");
        for (int d : dims_)
            if (d < 1) throw validation_error("projective factor dimension must be >= 1");
        if (dimension() > kMaxAmbientDimension)
            throw validation_error("ambient dimension " + std::to_string(dimension()) + " exceeds " +
                                   std::to_string(kMaxAmbientDimension));
    }

    /// (P^1)^n
    static Ambient p1_power(std::size_t n) { return Ambient(std::vector<int>(n, 1)); }

    const std::vector<int>& factor_dims() const { return dims_; }
    std::size_t factors() const { return dims_.size(); }
    int dim(std::size_t i) const { return dims_[i]; }
    int dimension() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }
    bool is_p1_power() const {
        for (int d : dims_)
            if (d != 1) return false;
        return true;
    }

    friend bool operator==(const Ambient&, const Ambient&) = default;

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? " x " : "") << "P^" << dims_[i];
        return os.str();
    }

private:
    std::vector<int> dims_;
};

class ChowClass {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, Rational>;

    explicit ChowClass(Ambient ambient) : ambient_(std::move(ambient)) {}

    static ChowClass constant(const Ambient& ambient, const Rational& c) {
        ChowClass r(ambient);
        r.add_term(Exponent(ambient.factors(), 0), c);
        return r;
    }
    static ChowClass one(const Ambient& ambient) { return constant(ambient, 1); }

    /// c * h_1^{e_1} ... h_t^{e_t}; vanishes when some e_i exceeds n_i.
    static ChowClass monomial(const Ambient& ambient, const Exponent& e, const Rational& c = 1) {
        if (e.size() != ambient.factors()) throw validation_error("exponent length mismatch");
        ChowClass r(ambient);
        r.add_term(e, c);
        return r;
    }

    const Ambient& ambient() const { return ambient_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(Exponent(ambient_.factors(), 0)); }

    ChowClass& operator+=(const ChowClass& o) {
        check_ambient(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ChowClass& operator-=(const ChowClass& o) {
        check_ambient(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    ChowClass& operator*=(const Rational& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(ChowClass a, const Rational& k) { return a *= k; }
    friend ChowClass operator*(const Rational& k, ChowClass a) { return a *= k; }
    friend ChowClass operator-(ChowClass a) { return a *= Rational(-1); }

    friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
        a.check_ambient(b);
        ChowClass r(a.ambient_);
        const std::size_t t = a.ambient_.factors();
        Exponent e(t);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                bool vanishes = false;
                for (std::size_t i = 0; i < t; ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > a.ambient_.dim(i)) {
                        vanishes = true;
                        break;
                    }
                }
                if (!vanishes) r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    ChowClass& operator*=(const ChowClass& o) { return *this = *this * o; }

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            os << (first ? "" : " + ") << c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*h" << (i + 1);
                if (e[i] > 1) os << '^' << e[i];
            }
            first = false;
        }
        return os.str();
    }

private:
    void add_term(const Exponent& e, const Rational& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] > ambient_.dim(i)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void check_ambient(const ChowClass& o) const {
        if (!(ambient_ == o.ambient_))
            throw validation_error("chow classes live on different ambients: " + ambient_.str() + " vs " +
                                   o.ambient_.str());
    }

    Ambient ambient_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const ChowClass& c) { return os << c.str(); }

/// h_i as a degree-one class.
inline ChowClass hyperplane(const Ambient& ambient, std::size_t i) {
    ChowClass::Exponent e(ambient.factors(), 0);
    e.at(i) = 1;
    return ChowClass::monomial(ambient, e);
}

/// First Chern class sum_i m_i h_i of the line bundle O(m).
inline ChowClass class_of(const Ambient& ambient, const Multidegree& m) {
    if (m.size() != ambient.factors())
        throw validation_error("multidegree " + m.str() + " has length " + std::to_string(m.size()) +
                               ", ambient has " + std::to_string(ambient.factors()) + " factors");
    ChowClass r(ambient);
    for (std::size_t i = 0; i < m.size(); ++i) r += hyperplane(ambient, i) * Rational(m[i]);
    return r;
}

/// Inverse of a class with constant term 1, via the finite Neumann series
/// 1 - u + u^2 - ... (u = a - 1 is nilpotent of order <= dim + 1).
inline ChowClass inverse_unit(const ChowClass& a) {
    const Ambient& amb = a.ambient();
    if (a.constant_term() != 1)
        throw validation_error("inverse_unit: constant term is " + a.constant_term().str() + ", expected 1");
    const ChowClass neg_u = ChowClass::one(amb) - a;
    ChowClass result = ChowClass::one(amb);
    ChowClass power = ChowClass::one(amb);
    for (int k = 1; k <= amb.dimension(); ++k) {
        power *= neg_u;
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

/// c(Z) = prod_i (1 + h_i)^{n_i + 1}.
inline ChowClass total_chern(const Ambient& ambient) {
    ChowClass c = ChowClass::one(ambient);
    for (std::size_t i = 0; i < ambient.factors(); ++i) {
        const ChowClass factor = ChowClass::one(ambient) + hyperplane(ambient, i);
        for (int k = 0; k <= ambient.dim(i); ++k) c *= factor;
    }
    return c;
}

/// Degree of the top-dimensional part: the coefficient of prod_i h_i^{n_i}.
inline Rational integrate(const ChowClass& a) { return a.coefficient(a.ambient().factor_dims()); }

}  // namespace ballcover
