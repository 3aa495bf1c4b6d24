#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qtilt {

// Exact arbitrary-precision integers and rationals used for every coefficient
// in the library.  No floating point appears anywhere in the computations.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Floor division (rounds towards minus infinity, unlike C++ '/').
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Euclidean remainder in [0, |b|), matching floor_div.
inline long long floor_mod(long long a, long long b) {
    return a - floor_div(a, b) * b;
}

} // namespace qtilt
