#include "lambert/matrices.hpp"

#include <functional>
#include <stdexcept>

#include "lambert/arith.hpp"

namespace lambert {

TriMatrix::TriMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("TriMatrix: size must be >= 1");
  rows_.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    rows_[static_cast<size_t>(i - 1)].assign(static_cast<size_t>(i), Int(0));
  }
}

TriMatrix TriMatrix::identity(int n) {
  TriMatrix m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

const Int& TriMatrix::at(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > i) {
    throw std::out_of_range("TriMatrix::at: index outside lower triangle");
  }
  return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

Int& TriMatrix::at(int i, int j) {
  if (i < 1 || i > n_ || j < 1 || j > i) {
    throw std::out_of_range("TriMatrix::at: index outside lower triangle");
  }
  return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

Int TriMatrix::get(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("TriMatrix::get: index outside matrix");
  }
  if (j > i) return 0;
  return at(i, j);
}

bool TriMatrix::unit_diagonal() const {
  for (int i = 1; i <= n_; ++i) {
    if (at(i, i) != 1) return false;
  }
  return true;
}

TriMatrix tri_mul(const TriMatrix& a, const TriMatrix& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("tri_mul: size mismatch");
  }
  const int n = a.size();
  TriMatrix out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      Int acc = 0;
      for (int k = j; k <= i; ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  }
  return out;
}

TriMatrix factorization_matrix(int n) {
  if (n < 1) throw std::invalid_argument("factorization_matrix: size must be >= 1");
  const IntSeries euler = euler_product(n);
  TriMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) m.at(i, j) = s_entry(i, j, euler);
  }
  return m;
}

TriMatrix invert_unit_lower(const TriMatrix& m) {
  if (!m.unit_diagonal()) {
    throw std::invalid_argument("invert_unit_lower: diagonal entries must be 1");
  }
  const int n = m.size();
  TriMatrix inv(n);
  for (int i = 1; i <= n; ++i) {
    inv.at(i, i) = 1;
    for (int j = i - 1; j >= 1; --j) {
      Int acc = 0;
      for (int k = j; k <= i - 1; ++k) acc += m.at(i, k) * inv.at(k, j);
      inv.at(i, j) = -acc;
    }
  }
  // exact product check m * inv == I
  const TriMatrix product = tri_mul(m, inv);
  if (product != TriMatrix::identity(n)) {
    throw std::logic_error("invert_unit_lower: product check failed");
  }
  return inv;
}

Int inverse_entry_divisor_sum(long long n, long long k, const PartitionTable& pt) {
  if (n < 1 || k < 0) {
    throw std::invalid_argument("inverse_entry_divisor_sum: need n >= 1, k >= 0");
  }
  Int acc = 0;
  for (long long d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    acc += mu * pt.p(d - k);
  }
  return acc;
}

Int inverse_entry_divisor_sum(long long n, long long k) {
  if (n < 1 || k < 0 || k > n) {
    throw std::invalid_argument("inverse_entry_divisor_sum: need 1 <= k <= n");
  }
  return inverse_entry_divisor_sum(n, k, PartitionTable(static_cast<int>(n)));
}

std::vector<Int> first_column_sequence(int count) {
  if (count < 1) throw std::invalid_argument("first_column_sequence: count must be >= 1");
  const PartitionTable pt(count);
  std::vector<Int> column;
  column.reserve(static_cast<size_t>(count));
  for (long long n = 1; n <= count; ++n) {
    column.push_back(inverse_entry_divisor_sum(n, 1, pt));
  }
  for (long long n = 1; n <= count; ++n) {
    Int sum = 0;
    for (long long d : divisors(n)) sum += column[static_cast<size_t>(d - 1)];
    if (sum != pt.p(n - 1)) {
      throw std::logic_error("first_column_sequence: divisor-sum inverse check failed");
    }
  }
  return column;
}

Int inverse_recurrence_residual(int n) {
  if (n < 1) throw std::invalid_argument("inverse_recurrence_residual: n must be >= 1");
  const TriMatrix a = factorization_matrix(n);
  const TriMatrix inv = invert_unit_lower(a);
  Int worst = 0;
  const auto track = [&](const Int& expected, const Int& actual) {
    Int diff = expected - actual;
    if (diff < 0) diff = -diff;
    if (diff > worst) worst = diff;
  };
  for (int row = 1; row <= n; ++row) {
    for (int j = 1; j <= row; ++j) {
      const Int expected = inv.at(row, j);
      const Int delta = row == j ? 1 : 0;

      // inverse-weighted form: sum over the trailing columns of the row
      Int sum1 = 0;
      for (int k = 1; k <= row - j; ++k) {
        sum1 += inv.get(row, row + 1 - k) * a.get(row + 1 - k, j);
      }
      track(expected, delta - sum1);

      // entry-weighted form: sum over the leading rows of the column
      Int sum2 = 0;
      for (int k = 1; k <= row - j; ++k) {
        sum2 += a.get(row, row - k) * inv.get(row - k, j);
      }
      track(expected, delta - sum2);

      // shifted-index form; the k = 1 term references index 0 and is absent
      Int sum3 = 0;
      for (int k = 2; k <= row; ++k) {
        sum3 += a.get(row, k - 1) * inv.get(k - 1, j);
      }
      track(expected, delta - sum3);
    }
  }
  return worst;
}

Int nested_sigma(int m, int i, int j, const TriMatrix& a) {
  if (m < 1 || j < 1 || j > i || i > a.size()) {
    throw std::invalid_argument("nested_sigma: bad indices");
  }
  // level l picks k_l in [j+2, hi]; the factor chain is
  // s(prev, k_l - 1) ... s(k_m - 1, j) with prev starting at i.
  std::function<Int(int, int, int)> descend = [&](int level, int prev, int hi) -> Int {
    Int acc = 0;
    for (int k = j + 2; k <= hi; ++k) {
      const Int factor = a.get(prev, k - 1);
      if (factor == 0) continue;
      if (level == m) {
        acc += factor * a.get(k - 1, j);
      } else {
        acc += factor * descend(level + 1, k - 1, k - 1);
      }
    }
    return acc;
  };
  return descend(1, i, i);
}

Int nested_sigma(int m, int i, int j) {
  return nested_sigma(m, i, j, factorization_matrix(i));
}

Int nested_formula_entry(int i, int j) {
  if (j < 1 || j > i) throw std::invalid_argument("nested_formula_entry: bad indices");
  if (i == j) return 1;  // the recurrence expansion is empty on the diagonal
  const TriMatrix a = factorization_matrix(i);
  Int acc = -a.get(i, j);
  int sign = 1;  // Sigma_1 enters positively
  for (int m = 1; m <= i - j; ++m) {
    acc += sign * nested_sigma(m, i, j, a);
    sign = -sign;
  }
  return acc;
}

TriMatrix binomial_power_inverse(int n) {
  if (n < 2) throw std::invalid_argument("binomial_power_inverse: n must be >= 2");
  const TriMatrix a = factorization_matrix(n);
  TriMatrix acc(n);
  TriMatrix power = TriMatrix::identity(n);  // a^{i-1} starting at i = 1
  for (int i = 1; i <= n - 1; ++i) {
    const Int weight = (i % 2 == 1 ? 1 : -1) * binomial(n - 1, i);
    for (int row = 1; row <= n; ++row) {
      for (int col = 1; col <= row; ++col) {
        acc.at(row, col) += weight * power.at(row, col);
      }
    }
    if (i < n - 1) power = tri_mul(power, a);
  }
  return acc;
}

TriMatrix block_extend_inverse(const TriMatrix& inv_n) {
  const int n = inv_n.size();
  TriMatrix out(n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) out.at(i, j) = inv_n.at(i, j);
  }
  out.at(n + 1, n + 1) = 1;
  const IntSeries euler = euler_product(n + 1);
  std::vector<Int> row_entries(static_cast<size_t>(n) + 1);
  for (int m = 1; m <= n + 1; ++m) {
    row_entries[static_cast<size_t>(m - 1)] = s_entry(n + 1, m, euler);
  }
  for (int j = n; j >= 1; --j) {
    Int acc = 0;
    for (int m = j; m <= n; ++m) {
      acc += row_entries[static_cast<size_t>(m - 1)] * out.at(m, j);
    }
    out.at(n + 1, j) = -acc;
  }
  return out;
}

std::vector<Int> inverse_bottom_row(int n) {
  if (n < 1) throw std::invalid_argument("inverse_bottom_row: n must be >= 1");
  const PartitionTable pt(n);
  std::vector<Int> row;
  row.reserve(static_cast<size_t>(n - 1));
  for (long long k = 1; k <= n - 1; ++k) {
    row.push_back(inverse_entry_divisor_sum(n, k, pt));
  }
  return row;
}

std::optional<Int> inverse_entry_special(long long n, long long k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("inverse_entry_special: need 1 <= k <= n");
  }
  const PartitionTable pt(static_cast<int>(n));

  // past the midpoint only d = n contributes to the divisor sum
  if (k > (n + 1) / 2) return Int(pt.p(n - k));

  if (is_prime(n)) {
    Int value = pt.p(n - k);
    if (k == 1) value -= 1;
    return value;
  }

  const FactorMap fm = factorize(n);
  if (fm.pairs.size() == 1 && fm.pairs[0].second == 2) {
    const long long p = fm.pairs[0].first;  // n = p^2
    if (k <= p) return Int(pt.p(n - k) - pt.p(p - k));
    return Int(pt.p(n - k));
  }

  if (fm.pairs.size() == 2 && fm.pairs[0] == std::pair<long long, int>{2, 1} &&
      fm.pairs[1].second == 1) {
    const long long p = fm.pairs[1].first;  // n = 2p, p odd prime
    if (k <= 2) {
      Int value = pt.p(n - k) - pt.p(p - k) - pt.p(2 - k);
      if (k == 1) value += 1;
      return value;
    }
    if (k <= p) return Int(pt.p(n - k) - pt.p(p - k));
    return Int(pt.p(n - k));
  }

  if (fm.pairs.size() == 2 && fm.pairs[0].second == 1 && fm.pairs[1].second == 1) {
    // n = q*r for distinct primes q < r; the four-divisor Moebius sum.
    // The same shape fails for general coprime factors (n = 12 = 4*3 would
    // give 52 where the true entry is 47), so the dispatch stops here.
    const long long q = fm.pairs[0].first;
    const long long r = fm.pairs[1].first;
    Int value = pt.p(n - k) - pt.p(q - k) - pt.p(r - k);
    if (k == 1) value += 1;
    return value;
  }

  return std::nullopt;
}

}  // namespace lambert
