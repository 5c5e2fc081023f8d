#include "lambert/factorization.hpp"

#include <algorithm>
#include <numeric>

namespace lambert {

LambertPair pair_mu() {
  return LambertPair(
      "mu", [](long long n) { return Int(moebius(n)); },
      [](long long n) { return Int(n == 1 ? 1 : 0); });
}

LambertPair pair_phi() {
  return LambertPair(
      "phi", [](long long n) { return euler_phi(n); },
      [](long long n) { return Int(n); });
}

LambertPair pair_sigma(int alpha) {
  return LambertPair(
      "sigma_" + std::to_string(alpha),
      [alpha](long long n) { return int_pow(n, alpha); },
      [alpha](long long n) { return sigma_alpha(n, alpha); });
}

LambertPair pair_lambda() {
  return LambertPair(
      "lambda", [](long long n) { return Int(liouville(n)); },
      [](long long n) { return Int(is_positive_square(n) ? 1 : 0); });
}

LambertPair pair_abs_mu() {
  return LambertPair(
      "abs_mu", [](long long n) { return Int(abs_moebius(n)); },
      [](long long n) { return int_pow(2, omega_distinct(n)); });
}

LambertPair pair_jordan(int t) {
  return LambertPair(
      "jordan_" + std::to_string(t),
      [t](long long n) { return jordan_totient(n, t); },
      [t](long long n) { return int_pow(n, t); });
}

LambertPairLog pair_von_mangoldt() {
  return LambertPairLog(
      "von_mangoldt", [](long long n) { return von_mangoldt_formal(n); },
      [](long long n) { return log_formal(n); });
}

long long pentagonal_sum_bound(long long m, int s) {
  if (m < 0) throw std::invalid_argument("pentagonal_sum_bound: m must be >= 0");
  if (s != 1 && s != -1) throw std::invalid_argument("pentagonal_sum_bound: s must be +-1");
  // floor((sqrt(24m+1) - s) / 6); exact because no integer can sit between
  // floor(sqrt(x)) and sqrt(x)
  return (isqrt_floor(24 * m + 1) - s) / 6;
}

Int correction_phi_closed(long long m) {
  if (m < 0) throw std::invalid_argument("correction_phi_closed: m must be >= 0");
  const long long root = isqrt_floor(24 * m + 1);
  const long long u1 = (root + 1) / 6;
  const long long u2 = (root - 1) / 6;
  const long long sign1 = u1 % 2 == 0 ? 1 : -1;  // (-1)^{u_1}
  const long long sign2 = u2 % 2 == 0 ? 1 : -1;  // (-1)^{u_2}
  Int bracket = 8 - 5 * sign1;
  bracket += Int(-4) * (-2 + sign1 + sign2) * m;
  bracket += Int(2) * sign1 * u1 * (3 * u1 + 2);
  bracket += Int(sign2) * (6 * u2 * u2 + 8 * u2 - 3);
  if (bracket % 8 != 0) {
    throw std::logic_error("correction_phi_closed: expression not divisible by 8 at m=" +
                           std::to_string(m));
  }
  return Int(m + 1) - bracket / 8;
}

Int correction_mu_closed(long long m) {
  if (m < 0) throw std::invalid_argument("correction_mu_closed: m must be >= 0");
  Int acc = m == 0 ? 1 : 0;
  for (int b : {-1, +1}) {
    const long long bound = (isqrt_floor(24 * m + 25) - b) / 6;
    for (long long k = 1; k <= bound; ++k) {
      const long long arg = m + 1 - k * (3 * k + b) / 2;
      if (arg == 1) acc += k % 2 == 0 ? 1 : -1;  // (-1)^k
    }
  }
  return acc;
}

Int correction_lambda_closed(long long m) {
  if (m < 0) throw std::invalid_argument("correction_lambda_closed: m must be >= 0");
  Int acc = is_perfect_square(m + 1) ? 1 : 0;
  for (int b : {-1, +1}) {
    const long long bound = pentagonal_sum_bound(m, b);
    for (long long k = 1; k <= bound; ++k) {
      const long long arg = m + 1 - k * (3 * k + b) / 2;
      if (!is_perfect_square(arg)) continue;
      acc += k % 2 == 1 ? -1 : 1;
    }
  }
  return acc;
}

FormalLog correction_von_mangoldt_closed(long long m) {
  if (m < 0) throw std::invalid_argument("correction_von_mangoldt_closed: m must be >= 0");
  FormalLog acc = log_formal(m + 1);
  for (int b : {-1, +1}) {
    const long long bound = pentagonal_sum_bound(m, b);
    for (long long k = 1; k <= bound; ++k) {
      const long long arg = m + 1 - k * (3 * k + b) / 2;
      FormalLog term = log_formal(arg);
      term *= Int(k % 2 == 1 ? -1 : 1);
      acc += term;
    }
  }
  return acc;
}

Int correction_abs_mu_closed(long long m) {
  if (m < 0) throw std::invalid_argument("correction_abs_mu_closed: m must be >= 0");
  Int acc = int_pow(2, omega_distinct(m + 1));
  for (int b : {-1, +1}) {
    const long long bound = pentagonal_sum_bound(m, b);
    for (long long k = 1; k <= bound; ++k) {
      const long long arg = m + 1 - k * (3 * k + b) / 2;
      const Int term = int_pow(2, omega_distinct(arg));
      acc += k % 2 == 1 ? -term : term;
    }
  }
  return acc;
}

Int correction_jordan_closed(int t, long long m) {
  if (m < 0) throw std::invalid_argument("correction_jordan_closed: m must be >= 0");
  if (t < 0) throw std::invalid_argument("correction_jordan_closed: t must be >= 0");
  Int acc = int_pow(m + 1, t);
  for (int b : {-1, +1}) {
    const long long bound = pentagonal_sum_bound(m, b);
    for (long long k = 1; k <= bound; ++k) {
      const long long arg = m + 1 - k * (3 * k + b) / 2;
      const Int term = int_pow(arg, t);
      acc += k % 2 == 1 ? -term : term;
    }
  }
  return acc;
}

Int aperiodic_sequence(long long n) {
  if (n < 1) throw std::invalid_argument("aperiodic_sequence: n must be >= 1");
  const PartitionTable pt(static_cast<int>(n));
  Int acc = 0;
  for (long long k = 1;; ++k) {
    const long long idx1 = k * (3 * k - 1) / 2;
    const long long idx2 = k * (3 * k + 1) / 2;
    if (idx1 > n) break;
    Int term = inverse_entry_divisor_sum(n, idx1, pt);
    if (idx2 <= n) term += inverse_entry_divisor_sum(n, idx2, pt);
    acc += k % 2 == 1 ? term : -term;
  }
  return acc;
}

long long count_coprime_partitions(int n) {
  if (n < 1) throw std::invalid_argument("count_coprime_partitions: n must be >= 1");
  long long count = 0;
  std::vector<int> parts;
  std::function<void(int, int, long long)> descend = [&](int remaining, int max_part,
                                                         long long gcd_so_far) {
    if (remaining == 0) {
      if (gcd_so_far == 1) ++count;
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      descend(remaining - part, part, std::gcd(gcd_so_far, static_cast<long long>(part)));
    }
  };
  descend(n, n, 0);
  return count;
}

Int alternating_pentagonal_sum(long long n) {
  if (n < 1) throw std::invalid_argument("alternating_pentagonal_sum: n must be >= 1");
  const PartitionTable pt(static_cast<int>(n));
  Int acc = 0;
  for (int k = 0;; ++k) {
    const long long g = pentagonal_g(k);
    if (g > n) break;
    // k = 0 uses the divisor-sum extension of the column index to 0
    const Int entry = inverse_entry_divisor_sum(n, g, pt);
    acc += ((k + 1) / 2) % 2 == 0 ? entry : -entry;
  }
  return acc;
}

Int multiplicative_relation_residual(const LambertPair& pair, long long q, long long r) {
  if (q < 2 || r < 2) {
    throw std::invalid_argument("multiplicative_relation_residual: need q, r >= 2");
  }
  if (std::gcd(q, r) != 1) {
    throw std::invalid_argument("multiplicative_relation_residual: q and r must be coprime");
  }
  const Int lhs = pair.a(q) * pair.a(r);
  const Int rhs = pair.b(q * r) - pair.b(q) - pair.b(r) + pair.b(1);
  return lhs - rhs;
}

SigmaPartialSums sigma_partial_sum_check(int x) {
  if (x < 0) throw std::invalid_argument("sigma_partial_sum_check: x must be >= 0");
  const PartitionTable pt(x);
  SigmaPartialSums result{0, 0};
  for (long long n = 0; n <= x; ++n) {
    Int inner = 0;
    for (int s : {-1, +1}) {
      const long long bound = (isqrt_floor(24 * n + 25) - s) / 6;
      for (long long k = 1; k <= bound; ++k) {
        const long long wedge = k * (3 * k + s) / 2;
        inner += k % 2 == 1 ? Int(wedge) : Int(-wedge);
      }
    }
    result.convolution += inner * pt.p(x - n);
  }
  for (long long n = 1; n <= x + 1; ++n) result.direct += sigma_alpha(n, 1);
  return result;
}

IntSeries q_squared_variant_residual(const std::vector<Int>& a, int order) {
  if (order < 1) throw std::invalid_argument("q_squared_variant_residual: order must be >= 1");
  if (static_cast<int>(a.size()) < order) {
    throw std::invalid_argument("q_squared_variant_residual: need a_1..a_order");
  }
  IntSeries lhs(order);
  for (int n = 1; 2 * n <= order; ++n) {
    const Int& an = a[static_cast<size_t>(n - 1)];
    if (an == 0) continue;
    for (long long e = 2LL * n; e <= order; e += n) {
      lhs.add_coeff(static_cast<int>(e), an);
    }
  }
  // statistics from the enumeration, not from the series generator
  std::vector<std::vector<DistinctPartStats>> stats(static_cast<size_t>(order));
  for (int n = 1; n < order; ++n) {
    stats[static_cast<size_t>(n)] = distinct_partition_stats_all(n);
  }
  IntSeries inner(order);
  for (int n = 2; n <= order; ++n) {
    Int acc = 0;
    for (int k = 1; k <= n / 2; ++k) {
      const DistinctPartStats& st = stats[static_cast<size_t>(n - k)][static_cast<size_t>(k)];
      acc += Int(st.odd - st.even) * a[static_cast<size_t>(k - 1)];
    }
    inner.set_coeff(n, acc);
  }
  const IntSeries rhs = series_mul(series_reciprocal(euler_product(order)), inner);
  return lhs - rhs;
}

namespace {

// Direct expansion of sum_n a_n q^{(m+1)n} / (1-q^n)^{k+1} using the
// binomial expansion of the denominator; independent of the s-entry route.
IntSeries generalized_lhs_series(int m, int k, const std::vector<Int>& a, int order) {
  IntSeries lhs(order);
  for (int n = 1; (static_cast<long long>(m) + 1) * n <= order; ++n) {
    const Int& an = a[static_cast<size_t>(n - 1)];
    if (an == 0) continue;
    for (long long j = 0;; ++j) {
      const long long e = (m + 1LL + j) * n;
      if (e > order) break;
      lhs.add_coeff(static_cast<int>(e), binomial(k + j, k) * an);
    }
  }
  return lhs;
}

}  // namespace

IntSeries generalized_factorization_residual(int m, int k, const std::vector<Int>& a,
                                             int order) {
  if (m < 0 || k < 0) {
    throw std::invalid_argument("generalized_factorization_residual: need m, k >= 0");
  }
  if (order < 1) {
    throw std::invalid_argument("generalized_factorization_residual: order must be >= 1");
  }
  if (static_cast<int>(a.size()) < order) {
    throw std::invalid_argument("generalized_factorization_residual: need a_1..a_order");
  }
  const IntSeries lhs = generalized_lhs_series(m, k, a, order);
  const IntSeries euler = euler_product(order);
  IntSeries inner(order);
  for (int n = 1; n <= order; ++n) {
    Int acc = 0;
    for (int i = 1; i <= n / (m + 1); ++i) {
      const Int& ai = a[static_cast<size_t>(i - 1)];
      if (ai == 0) continue;
      if (k == 0) {
        // denominator power 1: no binomial weights, single shifted entry
        const long long row = n - static_cast<long long>(m) * i;
        if (row >= i) acc += s_entry(static_cast<int>(row), i, euler) * ai;
      } else {
        for (long long j = 0;; ++j) {
          const long long row = n - (m + j) * static_cast<long long>(i);
          if (row < i) break;  // s(row, i) vanishes below the diagonal
          acc += binomial(k - 1 + j, k - 1) * s_entry(static_cast<int>(row), i, euler) * ai;
        }
      }
    }
    inner.set_coeff(n, acc);
  }
  const IntSeries rhs = series_mul(series_reciprocal(euler), inner);
  return lhs - rhs;
}

Int generalized_coefficient_residual(int m, int k, const std::vector<Int>& a,
                                     long long n) {
  if (m < 0 || k < 0 || m < k) {
    throw std::invalid_argument("generalized_coefficient_residual: requires m >= k >= 0");
  }
  if (n < 1) throw std::invalid_argument("generalized_coefficient_residual: n must be >= 1");
  if (static_cast<long long>(a.size()) < n) {
    throw std::invalid_argument("generalized_coefficient_residual: need a_1..a_n");
  }
  Int lhs = 0;
  for (long long d : divisors(n)) {
    if (d > n / (m + 1)) continue;
    lhs += binomial(n / d - 1 - m + k, k) * a[static_cast<size_t>(d - 1)];
  }
  const PartitionTable pt(static_cast<int>(n));
  const IntSeries euler = euler_product(static_cast<int>(n));
  Int rhs = 0;
  for (long long q = 0; q <= n; ++q) {
    const Int& weight = pt.p(q);
    Int inner = 0;
    const long long rest = n - q;
    for (long long i = 1; i <= rest / (m + 1); ++i) {
      const Int& ai = a[static_cast<size_t>(i - 1)];
      if (ai == 0) continue;
      if (k == 0) {
        const long long row = rest - static_cast<long long>(m) * i;
        if (row >= i) inner += s_entry(static_cast<int>(row), static_cast<int>(i), euler) * ai;
      } else {
        for (long long j = 0;; ++j) {
          const long long row = rest - (m + j) * i;
          if (row < i) break;
          inner += binomial(k - 1 + j, k - 1) *
                   s_entry(static_cast<int>(row), static_cast<int>(i), euler) * ai;
        }
      }
    }
    rhs += weight * inner;
  }
  return lhs - rhs;
}

}  // namespace lambert
