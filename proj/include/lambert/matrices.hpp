#pragma once

#include <optional>
#include <vector>

#include "lambert/integer.hpp"
#include "lambert/qseries.hpp"

namespace lambert {

// Unit lower-triangular integer matrix, rows and columns indexed from 1.
// Entries above the diagonal are implicitly zero.
class TriMatrix {
 public:
  explicit TriMatrix(int n);  // zero matrix
  static TriMatrix identity(int n);

  int size() const { return n_; }
  const Int& at(int i, int j) const;  // 1 <= j <= i <= n
  Int& at(int i, int j);
  Int get(int i, int j) const;  // zero above the diagonal

  bool unit_diagonal() const;
  bool operator==(const TriMatrix&) const = default;

 private:
  int n_;
  std::vector<std::vector<Int>> rows_;  // rows_[i-1] holds columns 1..i
};

TriMatrix tri_mul(const TriMatrix& a, const TriMatrix& b);

// Lower-triangular factorization matrix with entries s_entry(i, j).
TriMatrix factorization_matrix(int n);

// Exact inverse by forward substitution. Requires a unit diagonal and
// verifies m * inverse == identity before returning.
TriMatrix invert_unit_lower(const TriMatrix& m);

// Inverse entry via the divisor sum  sum_{d|n} p(d-k) mu(n/d); columns k = 0
// are meaningful too (used by the alternating pentagonal sum).
Int inverse_entry_divisor_sum(long long n, long long k);
Int inverse_entry_divisor_sum(long long n, long long k, const PartitionTable& pt);

// First inverse column for n = 1..count; verifies the Moebius-inverse
// property sum_{d|n} entry(d) == p(n-1) on the way.
std::vector<Int> first_column_sequence(int count);

// Largest absolute deviation across the three product-form recurrences for
// the inverse entries, evaluated for every 1 <= j <= n' <= n. Zero when the
// recurrences hold. Index-0 factors are treated as absent.
Int inverse_recurrence_residual(int n);

// m-fold nested alternating sum over strictly decreasing indices >= j+2;
// empty ranges contribute zero.
Int nested_sigma(int m, int i, int j);
Int nested_sigma(int m, int i, int j, const TriMatrix& a);

// delta_{i,j} - s_{i,j} + Sigma_1 - Sigma_2 + ... +- Sigma_{i-j}; equals the
// inverse entry. Exponential in i - j, intended for i <= 12.
Int nested_formula_entry(int i, int j);

// sum_{i=1}^{n-1} C(n-1, i) (-1)^{i+1} A^{i-1}, the binomial-weighted power
// sum that reproduces the inverse; n >= 2.
TriMatrix binomial_power_inverse(int n);

// Extends the inverse of size n to size n+1 by computing only the new bottom
// row from the entry generator.
TriMatrix block_extend_inverse(const TriMatrix& inv_n);

// Off-diagonal bottom row of the size-n inverse: entries (n,1) .. (n,n-1).
std::vector<Int> inverse_bottom_row(int n);

// Closed forms for special shapes of n (k past the midpoint, n prime, n a
// prime square, n twice an odd prime, n a product of two distinct primes).
// Empty when no special form applies.
std::optional<Int> inverse_entry_special(long long n, long long k);

}  // namespace lambert
