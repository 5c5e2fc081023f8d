#pragma once

#include <string>
#include <vector>

#include "lambert/integer.hpp"

namespace lambert {

// Truncated power series in q with exact integer coefficients. A series of
// order N stores c_0..c_N; every operation truncates at N and never touches
// higher exponents.
class IntSeries {
 public:
  explicit IntSeries(int order);
  IntSeries(int order, std::vector<Int> coeffs);

  static IntSeries one(int order);
  static IntSeries monomial(int order, int exponent, const Int& coeff = 1);

  int order() const { return order_; }
  const Int& coeff(int i) const;
  void set_coeff(int i, const Int& value);
  void add_coeff(int i, const Int& value);

  bool is_zero() const;
  bool operator==(const IntSeries&) const = default;

  IntSeries& operator+=(const IntSeries& other);
  IntSeries& operator-=(const IntSeries& other);
  friend IntSeries operator+(IntSeries a, const IntSeries& b) { return a += b; }
  friend IntSeries operator-(IntSeries a, const IntSeries& b) { return a -= b; }

  std::string to_string() const;

 private:
  void require_same_order(const IntSeries& other) const;

  int order_ = 0;
  std::vector<Int> coeffs_;
};

// Truncated Cauchy product; both operands must share the same order.
IntSeries series_mul(const IntSeries& a, const IntSeries& b);

// Inverse of a series with constant term +-1; a * reciprocal(a) == 1.
IntSeries series_reciprocal(const IntSeries& a);

// Generalized pentagonal numbers 0, 1, 2, 5, 7, 12, 15, ... via
// g(j) = ceil(j/2) * ceil((3j+1)/2) / 2.
long long pentagonal_g(int j);

// Truncation of prod_{n>=1} (1 - q^n), built from the sparse pentagonal sum.
IntSeries euler_product(int order);

// Truncation of prod_{n>=1} (1 + q^n); coefficient of q^n counts partitions
// of n into distinct parts.
IntSeries neg_q_pochhammer(int order);

// p(0..max_n) by the pentagonal recurrence. The accessor returns 0 for
// negative arguments.
class PartitionTable {
 public:
  explicit PartitionTable(int max_n);

  int max_n() const { return static_cast<int>(values_.size()) - 1; }
  const Int& p(long long n) const;

 private:
  std::vector<Int> values_;
};

PartitionTable partition_table(int max_n);

// q^j + q^{2j} + ... truncated at the given order; j must be >= 1.
IntSeries geometric_slice(int j, int order);

// Coefficient of q^i in q^j/(1-q^j) (q;q)_inf: the entries of the
// factorization matrix. Zero for j > i, one on the diagonal.
Int s_entry(int i, int j);
Int s_entry(int i, int j, const IntSeries& euler);  // euler.order() >= i

struct DistinctPartStats {
  long long odd = 0;
  long long even = 0;
  bool operator==(const DistinctPartStats&) const = default;
};

// Number of partitions of n into distinct parts that contain the part k,
// split by the parity of the number of parts.
DistinctPartStats distinct_partition_stats(int n, int k);

// Same statistic for every k = 1..n in one enumeration pass.
std::vector<DistinctPartStats> distinct_partition_stats_all(int n);

// Total number of parts over all distinct-part partitions of n, split by the
// parity of the number of parts.
DistinctPartStats parts_count_stats(int n);

// Sign of the Lambert denominator: minus selects q^n/(1 - q^n), plus selects
// q^n/(1 + q^n).
enum class LambertSign { minus, plus };

// Coefficients b_1..b_N of sum a_n q^n / (1 -+ q^n): the divisor transform
// for minus, the alternating divisor transform for plus.
std::vector<Int> lambert_coefficients(const std::vector<Int>& a,
                                      LambertSign sign);

}  // namespace lambert
