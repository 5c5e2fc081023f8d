#pragma once

// Test-only oracles, kept independent of the library's series and matrix
// code paths: plain-vector polynomial arithmetic, brute-force scans and
// direct enumerations.

#include <functional>
#include <vector>

#include "lambert/integer.hpp"
#include "lambert/qseries.hpp"

namespace oracle {

using lambert::Int;

// schoolbook truncated product on plain vectors
inline std::vector<Int> poly_mul_trunc(const std::vector<Int>& a,
                                       const std::vector<Int>& b, int order) {
  std::vector<Int> out(static_cast<size_t>(order) + 1, Int(0));
  for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(order); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(order); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// prod_{n=1}^{order} (1 - q^n) truncated, computed factor by factor
inline std::vector<Int> dense_euler_coeffs(int order) {
  std::vector<Int> out(static_cast<size_t>(order) + 1, Int(0));
  out[0] = 1;
  for (int n = 1; n <= order; ++n) {
    for (int i = order; i >= n; --i) {
      out[static_cast<size_t>(i)] -= out[static_cast<size_t>(i - n)];
    }
  }
  return out;
}

inline std::vector<long long> brute_divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline long long count_distinct_partitions(int n) {
  long long count = 0;
  std::function<void(int, int)> descend = [&](int remaining, int min_part) {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      descend(remaining - part, part + 1);
    }
  };
  descend(n, 1);
  return count;
}

// sum a_n q^n / (1 -+ q^n) accumulated term by term into a plain vector,
// bypassing lambert_coefficients entirely
inline std::vector<Int> lambert_series_direct(const std::vector<Int>& a,
                                              lambert::LambertSign sign, int order) {
  std::vector<Int> out(static_cast<size_t>(order) + 1, Int(0));
  for (int n = 1; n <= order && n <= static_cast<int>(a.size()); ++n) {
    const Int& an = a[static_cast<size_t>(n - 1)];
    if (an == 0) continue;
    long long m = 1;
    for (long long e = n; e <= order; e += n, ++m) {
      // 1/(1-q^n): all +;  1/(1+q^n): signs alternate starting +
      if (sign == lambert::LambertSign::minus || m % 2 == 1) {
        out[static_cast<size_t>(e)] += an;
      } else {
        out[static_cast<size_t>(e)] -= an;
      }
    }
  }
  return out;
}

}  // namespace oracle
