#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "error.hpp"

namespace skewhook {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::vector<BigInt> factorial_table(int n)
{
    std::vector<BigInt> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (int k = 1; k <= n; ++k)
        f[k] = f[k - 1] * k;
    return f;
}

inline BigInt factorial(int n) { return factorial_table(n).back(); }

/// Exact integral value of `q`; throws consistency_error when q has a denominator.
inline BigInt require_integer(const Rational& q, const char* what)
{
    if (denominator(q) != 1)
        throw consistency_error(std::string(what) + ": non-integral result " + q.str());
    return numerator(q);
}

} // namespace skewhook
