#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lambert/arith.hpp"
#include "lambert/integer.hpp"
#include "lambert/matrices.hpp"
#include "lambert/qseries.hpp"

namespace lambert {

// Scaling of a pair value by an integer matrix entry.
inline Int scale_value(const Int& factor, const Int& value) { return factor * value; }
inline FormalLog scale_value(const Int& factor, const FormalLog& value) {
  FormalLog scaled = value;
  scaled *= factor;
  return scaled;
}

inline std::string value_string(const Int& v) { return v.str(); }
inline std::string value_string(const FormalLog& v) { return v.to_string(); }

// An arithmetic function together with its divisor-sum transform. V is the
// value domain: Int for ordinary pairs, FormalLog for the prime-exponent
// pair. Construction checks b(n) == sum_{d|n} a(d) up to check_bound; the
// b accessor returns the zero value for arguments <= 0, which every
// pentagonal-shift sum relies on.
template <typename V>
class LambertPairT {
 public:
  using Eval = std::function<V(long long)>;

  LambertPairT(std::string name, Eval a_eval, Eval b_eval, int check_bound = 24)
      : name_(std::move(name)), a_(std::move(a_eval)), b_(std::move(b_eval)) {
    for (long long n = 1; n <= check_bound; ++n) {
      V sum{};
      for (long long d : divisors(n)) sum += a_(d);
      if (!(sum == b_(n))) {
        throw std::invalid_argument("LambertPairT(" + name_ +
                                    "): b is not the divisor sum of a at n=" +
                                    std::to_string(n));
      }
    }
  }

  const std::string& name() const { return name_; }

  V a(long long n) const {
    if (n < 1) throw std::invalid_argument("LambertPairT::a: n must be >= 1");
    return a_(n);
  }

  V b(long long n) const {
    if (n < 1) return V{};
    return b_(n);
  }

 private:
  std::string name_;
  Eval a_;
  Eval b_;
};

using LambertPair = LambertPairT<Int>;
using LambertPairLog = LambertPairT<FormalLog>;

// The classical pairs (a_n, b_n).
LambertPair pair_mu();                  // (mu(n), [n = 1])
LambertPair pair_phi();                 // (phi(n), n)
LambertPair pair_sigma(int alpha);      // (n^alpha, sigma_alpha(n))
LambertPair pair_lambda();              // (lambda(n), [n is a square])
LambertPair pair_abs_mu();              // (|mu(n)|, 2^omega(n))
LambertPair pair_jordan(int t);         // (J_t(n), n^t)
LambertPairLog pair_von_mangoldt();     // (Lambda(n), log n), exact exponents

// Pentagonal correction terms B_{b,m} for m = 0..length-1.
template <typename V>
struct CorrectionVectorT {
  std::string fn;
  std::vector<V> values;
};

// Largest k with k(3k+s)/2 <= m, computed with the exact integer square
// root of 24m+1; s is +1 or -1.
long long pentagonal_sum_bound(long long m, int s);

// b_{m+1} minus the signed pentagonal shifts of b: the correction term that
// feeds the inverse-matrix reconstruction.
template <typename V>
V correction_term(const LambertPairT<V>& pair, long long m) {
  if (m < 0) throw std::invalid_argument("correction_term: m must be >= 0");
  V acc = pair.b(m + 1);
  for (int s : {-1, +1}) {
    const long long bound = pentagonal_sum_bound(m, s);
    for (long long k = 1; k <= bound; ++k) {
      const long long shift = k * (3 * k + s) / 2;
      const V term = pair.b(m + 1 - shift);
      if (k % 2 == 1) {
        acc -= term;
      } else {
        acc += term;
      }
    }
  }
  return acc;
}

// The same correction written as a single alternating sum over the
// generalized pentagonal numbers.
template <typename V>
V correction_term_pentagonal(const LambertPairT<V>& pair, long long m) {
  if (m < 0) throw std::invalid_argument("correction_term_pentagonal: m must be >= 0");
  V acc{};
  for (int j = 0;; ++j) {
    const long long g = pentagonal_g(j);
    if (g > m) break;  // argument m+1-g stays >= 1
    const V term = pair.b(m + 1 - g);
    if (((j + 1) / 2) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

template <typename V>
CorrectionVectorT<V> correction_vector(const LambertPairT<V>& pair, int length) {
  if (length < 1) throw std::invalid_argument("correction_vector: length must be >= 1");
  CorrectionVectorT<V> out{pair.name(), {}};
  out.values.reserve(static_cast<size_t>(length));
  for (long long m = 0; m < length; ++m) out.values.push_back(correction_term(pair, m));
  return out;
}

// Closed-form corrections for the classical pairs. The phi form is the
// printed rational expression; integrality of the /8 step is asserted.
Int correction_phi_closed(long long m);
Int correction_mu_closed(long long m);
Int correction_lambda_closed(long long m);
FormalLog correction_von_mangoldt_closed(long long m);
Int correction_abs_mu_closed(long long m);
Int correction_jordan_closed(int t, long long m);

// a_1..a_n recovered from the correction vector through the divisor-sum
// inverse entries.
template <typename V>
std::vector<V> recover_coefficients(const LambertPairT<V>& pair, int n) {
  if (n < 1) throw std::invalid_argument("recover_coefficients: n must be >= 1");
  const CorrectionVectorT<V> corrections = correction_vector(pair, n);
  const PartitionTable pt(n);
  std::vector<V> a;
  a.reserve(static_cast<size_t>(n));
  for (long long row = 1; row <= n; ++row) {
    V acc{};
    for (long long m = 0; m < row; ++m) {
      const Int entry = inverse_entry_divisor_sum(row, m + 1, pt);
      if (entry == 0) continue;
      acc += scale_value(entry, corrections.values[static_cast<size_t>(m)]);
    }
    a.push_back(acc);
  }
  return a;
}

// Same recovery from raw b data b_1..b_n.
template <typename V>
std::vector<V> recover_coefficients_from_b(const std::vector<V>& b) {
  const int n = static_cast<int>(b.size());
  if (n < 1) throw std::invalid_argument("recover_coefficients_from_b: empty b");
  const auto b_at = [&](long long idx) -> V {
    if (idx < 1 || idx > n) return V{};
    return b[static_cast<size_t>(idx - 1)];
  };
  // correction vector straight from the b accessor
  std::vector<V> corrections;
  corrections.reserve(static_cast<size_t>(n));
  for (long long m = 0; m < n; ++m) {
    V acc = b_at(m + 1);
    for (int s : {-1, +1}) {
      const long long bound = pentagonal_sum_bound(m, s);
      for (long long k = 1; k <= bound; ++k) {
        const long long shift = k * (3 * k + s) / 2;
        const V term = b_at(m + 1 - shift);
        if (k % 2 == 1) {
          acc -= term;
        } else {
          acc += term;
        }
      }
    }
    corrections.push_back(acc);
  }
  const PartitionTable pt(n);
  std::vector<V> a;
  a.reserve(static_cast<size_t>(n));
  for (long long row = 1; row <= n; ++row) {
    V acc{};
    for (long long m = 0; m < row; ++m) {
      const Int entry = inverse_entry_divisor_sum(row, m + 1, pt);
      if (entry == 0) continue;
      acc += scale_value(entry, corrections[static_cast<size_t>(m)]);
    }
    a.push_back(acc);
  }
  return a;
}

// Residual of b_n = sum_{k<=n} sum_{j<k} p(n-k) (-1)^{ceil(j/2)} b(k - G_j);
// zero when the double convolution recurrence holds.
template <typename V>
V double_sum_recurrence_residual(const LambertPairT<V>& pair, int n) {
  if (n < 1) throw std::invalid_argument("double_sum_recurrence_residual: n must be >= 1");
  const PartitionTable pt(n);
  V rhs{};
  for (int k = 1; k <= n; ++k) {
    const Int& weight = pt.p(n - k);
    if (weight == 0) continue;
    V inner{};
    for (int j = 0; j <= k - 1; ++j) {
      const long long g = pentagonal_g(j);
      const V term = pair.b(k - g);
      if (((j + 1) / 2) % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    rhs += scale_value(weight, inner);
  }
  rhs -= pair.b(n);
  return rhs;
}

// Both sides of the as-stated pentagonal shift identity (which includes the
// j = 0 term, i.e. b_n itself, and generally fails) plus the corrected
// relation against the factorization coefficient sum_k s_{n,k} a_k.
template <typename V>
struct PentagonalShiftReport {
  V lhs;  // b_n
  V rhs;  // sum_j (-1)^{ceil(j/2)} b_{n-G_j}
  bool stated_holds = false;
  bool corrected_holds = false;
};

template <typename V>
PentagonalShiftReport<V> pentagonal_shift_report(const LambertPairT<V>& pair, int n) {
  if (n < 1) throw std::invalid_argument("pentagonal_shift_report: n must be >= 1");
  PentagonalShiftReport<V> report;
  report.lhs = pair.b(n);
  V rhs{};
  for (int j = 0; j <= n; ++j) {
    const long long g = pentagonal_g(j);
    if (g > n) break;
    const V term = pair.b(n - g);
    if (((j + 1) / 2) % 2 == 0) {
      rhs += term;
    } else {
      rhs -= term;
    }
  }
  report.rhs = rhs;
  report.stated_holds = report.lhs == report.rhs;
  const IntSeries euler = euler_product(n);
  V coefficient{};
  for (int k = 1; k <= n; ++k) {
    const Int entry = s_entry(n, k, euler);
    if (entry == 0) continue;
    coefficient += scale_value(entry, pair.a(k));
  }
  report.corrected_holds = rhs == coefficient;
  return report;
}

// Alternating sum of inverse entries at pentagonal column indices; the value
// of the aperiodic-partition counting sequence.
Int aperiodic_sequence(long long n);

// Enumeration cross-check: partitions of n whose parts have gcd 1.
long long count_coprime_partitions(int n);

// sum_k (-1)^{ceil(k/2)} s^{-1}(n, G_k) with the k = 0 column extended by the
// divisor sum at k = 0; identically zero.
Int alternating_pentagonal_sum(long long n);

// a_q * a_r - (b_{qr} - b_q - b_r + b_1) for coprime q, r >= 2. Zero for
// every multiplicative pair when q and r are distinct primes; nonzero in
// general for merely-coprime arguments.
Int multiplicative_relation_residual(const LambertPair& pair, long long q, long long r);

// Pentagonal convolution for the partial sums of the divisor-sum function
// against the directly sieved value.
struct SigmaPartialSums {
  Int convolution;
  Int direct;
};
SigmaPartialSums sigma_partial_sum_check(int x);

// LHS - RHS of the shifted factorization sum a_n q^{2n}/(1-q^n) =
// P(q) * sum_n sum_{k<=n/2} (s_o - s_e)(n-k, k) a_k q^n, with the statistics
// taken from the distinct-part enumeration. Zero series when it holds.
IntSeries q_squared_variant_residual(const std::vector<Int>& a, int order);

// LHS - RHS of the (m, k) generalized factorization
//   sum_n a_n q^{(m+1)n} / (1-q^n)^{k+1}
//     = P(q) * sum_n sum_i sum_j C(k-1+j, k-1) s(n-(m+j)i, i) a_i q^n.
// k = 0 is the direct specialization (no binomial weights).
IntSeries generalized_factorization_residual(int m, int k,
                                             const std::vector<Int>& a, int order);

// Coefficient identity for m >= k: LHS is the binomial divisor sum, RHS the
// partition-weighted triple sum. Returns LHS - RHS.
Int generalized_coefficient_residual(int m, int k, const std::vector<Int>& a,
                                     long long n);

}  // namespace lambert
