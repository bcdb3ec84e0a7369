#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "charnum/errors.hpp"

namespace charnum {

// All counts in this library are exact signed integers of arbitrary size.
using Int = boost::multiprecision::cpp_int;

// Integer division that must leave no remainder.
inline Int exact_div(const Int& num, const Int& den) {
    if (den == 0)
        throw internal_error("exact_div: zero divisor");
    Int q = num / den;
    if (q * den != num)
        throw internal_error("exact_div: " + num.str() + " is not divisible by " + den.str());
    return q;
}

inline Int factorial(int n) {
    if (n < 0)
        throw internal_error("factorial of negative argument");
    Int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1); // always exact: product of i+1 consecutive integers
    }
    return b;
}

} // namespace charnum
