#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "errors.hpp"

namespace ballcover {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Narrows an exact rational to a machine integer, failing loudly when the
// value is fractional or out of range.
inline std::int64_t to_int64(const Rational& q, const std::string& what) {
    if (!is_integral(q)) {
        throw consistency_error(what + " is not an integer: " + q.str());
    }
    const Integer& z = numerator(q);
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
        throw consistency_error(what + " overflows 64 bits: " + z.str());
    }
    return z.convert_to<std::int64_t>();
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace ballcover
