#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "starfold/errors.hpp"

namespace starfold {

// Counts and multiplicities leave the library as arbitrary-precision integers;
// exponents and homological indices stay machine ints.
using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0)
        throw ParameterError("factorial: negative argument");
    BigInt f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// Zero outside 0 <= k <= n.
inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt b = 1;
    for (int j = 1; j <= k; ++j) {
        b *= n - k + j;
        b /= j;
    }
    return b;
}

inline int checked_add(int x, int y) {
    long long r = static_cast<long long>(x) + y;
    if (r > INT32_MAX || r < INT32_MIN)
        throw ParameterError("integer overflow");
    return static_cast<int>(r);
}

inline int checked_mul(int x, int y) {
    long long r = static_cast<long long>(x) * y;
    if (r > INT32_MAX || r < INT32_MIN)
        throw ParameterError("integer overflow");
    return static_cast<int>(r);
}

// Ceiling of p/q for q > 0.
inline long long ceil_div(long long p, long long q) {
    if (q <= 0)
        throw ParameterError("ceil_div: q must be positive");
    long long d = p / q;
    if (p % q != 0 && p > 0)
        ++d;
    return d;
}

} // namespace starfold
