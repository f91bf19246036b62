#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace mtfloer {

/// Exact integer used for matrix entries and torsion coefficients.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational used by the degree-shift evaluator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd_value(Integer a, Integer b)
{
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Integer lcm_value(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return abs_value(a / gcd_value(a, b) * b);
}

inline std::string to_string(const Integer& x) { return x.str(); }

} // namespace mtfloer
