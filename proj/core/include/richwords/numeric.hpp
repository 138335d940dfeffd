#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace richwords {

/// Arbitrary-precision integer used for every count.
using BigInt = boost::multiprecision::cpp_int;

/// 50-decimal-digit binary float used for inequality checks in log space.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Natural logarithm of a positive integer, exact to Real precision.
Real log_of(const BigInt& value);

/// q (q-1) ... (q-k+1); 1 for k = 0.
BigInt falling_factorial(int q, int k);

}  // namespace richwords
