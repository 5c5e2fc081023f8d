#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lambert {

using Int = boost::multiprecision::cpp_int;

// floor(sqrt(x)), exact integer arithmetic only.
long long isqrt_floor(long long x);

bool is_perfect_square(long long x);

// C(n, k); zero for k < 0, n < 0 or n < k.
Int binomial(long long n, long long k);

Int int_pow(long long base, int exp);

}  // namespace lambert
