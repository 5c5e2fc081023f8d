#include "lambert/integer.hpp"

#include <stdexcept>

namespace lambert {

long long isqrt_floor(long long x) {
  if (x < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  if (x < 2) return x;
  long long r = x / 2;
  long long prev = 0;
  while (true) {
    long long next = (r + x / r) / 2;
    if (next == r || next == prev) break;
    prev = r;
    r = next;
  }
  if (r > x / r) --r;  // Newton can land one above
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

bool is_perfect_square(long long x) {
  if (x < 0) return false;
  const long long r = isqrt_floor(x);
  return r * r == x;
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

Int int_pow(long long base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int b = base;
  Int result = 1;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

}  // namespace lambert
