#include "lambert/qseries.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lambert {

IntSeries::IntSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("IntSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, Int(0));
}

IntSeries::IntSeries(int order, std::vector<Int> coeffs) : order_(order) {
  if (order < 0) throw std::invalid_argument("IntSeries: negative order");
  if (coeffs.size() != static_cast<size_t>(order) + 1) {
    throw std::invalid_argument("IntSeries: coefficient count != order + 1");
  }
  coeffs_ = std::move(coeffs);
}

IntSeries IntSeries::one(int order) {
  IntSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

IntSeries IntSeries::monomial(int order, int exponent, const Int& coeff) {
  IntSeries s(order);
  if (exponent < 0 || exponent > order) {
    throw std::invalid_argument("IntSeries::monomial: exponent out of range");
  }
  s.coeffs_[static_cast<size_t>(exponent)] = coeff;
  return s;
}

const Int& IntSeries::coeff(int i) const {
  if (i < 0 || i > order_) {
    throw std::out_of_range("IntSeries::coeff: index out of range");
  }
  return coeffs_[static_cast<size_t>(i)];
}

void IntSeries::set_coeff(int i, const Int& value) {
  if (i < 0 || i > order_) {
    throw std::out_of_range("IntSeries::set_coeff: index out of range");
  }
  coeffs_[static_cast<size_t>(i)] = value;
}

void IntSeries::add_coeff(int i, const Int& value) {
  if (i < 0 || i > order_) {
    throw std::out_of_range("IntSeries::add_coeff: index out of range");
  }
  coeffs_[static_cast<size_t>(i)] += value;
}

bool IntSeries::is_zero() const {
  for (const Int& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void IntSeries::require_same_order(const IntSeries& other) const {
  if (order_ != other.order_) {
    throw std::invalid_argument("IntSeries: operand orders differ");
  }
}

IntSeries& IntSeries::operator+=(const IntSeries& other) {
  require_same_order(other);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& other) {
  require_same_order(other);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

std::string IntSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= order_; ++i) {
    const Int& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) {
      if (mag != 1) out << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) return "0";
  return out.str();
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series_mul: operand orders differ");
  }
  const int n = a.order();
  IntSeries out(n);
  for (int i = 0; i <= n; ++i) {
    const Int& ai = a.coeff(i);
    if (ai == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeff(j) == 0) continue;
      out.add_coeff(i + j, ai * b.coeff(j));
    }
  }
  return out;
}

IntSeries series_reciprocal(const IntSeries& a) {
  const Int& c0 = a.coeff(0);
  if (c0 != 1 && c0 != -1) {
    throw std::invalid_argument("series_reciprocal: constant term must be +-1");
  }
  const int n = a.order();
  IntSeries out(n);
  out.set_coeff(0, c0);  // 1/c0 == c0 for a unit
  for (int i = 1; i <= n; ++i) {
    Int acc = 0;
    for (int k = 1; k <= i; ++k) {
      if (a.coeff(k) == 0) continue;
      acc += a.coeff(k) * out.coeff(i - k);
    }
    out.set_coeff(i, -c0 * acc);
  }
  return out;
}

long long pentagonal_g(int j) {
  if (j < 0) throw std::invalid_argument("pentagonal_g: negative index");
  const long long half_up = (j + 1) / 2;            // ceil(j/2)
  const long long second = (3LL * j + 2) / 2;       // ceil((3j+1)/2)
  return half_up * second / 2;
}

IntSeries euler_product(int order) {
  IntSeries out(order);
  for (int j = 0;; ++j) {
    const long long g = pentagonal_g(j);
    if (g > order) break;
    const int sign = ((j + 1) / 2) % 2 == 0 ? 1 : -1;  // (-1)^ceil(j/2)
    out.add_coeff(static_cast<int>(g), sign);
  }
  return out;
}

IntSeries neg_q_pochhammer(int order) {
  IntSeries out = IntSeries::one(order);
  for (int n = 1; n <= order; ++n) {
    // multiply by (1 + q^n) in place
    for (int i = order; i >= n; --i) {
      out.add_coeff(i, out.coeff(i - n));
    }
  }
  return out;
}

PartitionTable::PartitionTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("PartitionTable: negative bound");
  values_.assign(static_cast<size_t>(max_n) + 1, Int(0));
  values_[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    Int acc = 0;
    for (int k = 1;; ++k) {
      const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 == 1 ? 1 : -1;
      Int term = values_[static_cast<size_t>(n - g1)];
      if (g2 <= n) term += values_[static_cast<size_t>(n - g2)];
      acc += sign * term;
    }
    values_[static_cast<size_t>(n)] = acc;
  }
}

const Int& PartitionTable::p(long long n) const {
  static const Int zero = 0;
  if (n < 0) return zero;
  if (n >= static_cast<long long>(values_.size())) {
    throw std::out_of_range("PartitionTable::p: index beyond table");
  }
  return values_[static_cast<size_t>(n)];
}

PartitionTable partition_table(int max_n) { return PartitionTable(max_n); }

IntSeries geometric_slice(int j, int order) {
  if (j < 1) throw std::invalid_argument("geometric_slice: j must be >= 1");
  IntSeries out(order);
  for (long long e = j; e <= order; e += j) {
    out.set_coeff(static_cast<int>(e), 1);
  }
  return out;
}

Int s_entry(int i, int j, const IntSeries& euler) {
  if (i < 1 || j < 1) throw std::invalid_argument("s_entry: indices must be >= 1");
  if (j > i) return 0;
  if (euler.order() < i) {
    throw std::invalid_argument("s_entry: euler series order too small");
  }
  // [q^i] of geometric_slice(j) * (q;q)_inf, folded through the sparse slice
  Int acc = 0;
  for (long long e = j; e <= i; e += j) {
    acc += euler.coeff(static_cast<int>(i - e));
  }
  return acc;
}

Int s_entry(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("s_entry: indices must be >= 1");
  if (j > i) return 0;
  return s_entry(i, j, euler_product(i));
}

namespace {

// Enumerates partitions of n into strictly increasing distinct parts and
// feeds each one to the visitor.
void enumerate_distinct_parts(int n,
                              const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts;
  std::function<void(int, int)> descend = [&](int remaining, int min_part) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      parts.push_back(part);
      descend(remaining - part, part + 1);
      parts.pop_back();
    }
  };
  descend(n, 1);
}

}  // namespace

std::vector<DistinctPartStats> distinct_partition_stats_all(int n) {
  if (n < 1) throw std::invalid_argument("distinct_partition_stats: n must be >= 1");
  std::vector<DistinctPartStats> stats(static_cast<size_t>(n) + 1);
  enumerate_distinct_parts(n, [&](const std::vector<int>& parts) {
    const bool odd = parts.size() % 2 == 1;
    for (int part : parts) {
      if (odd) {
        ++stats[static_cast<size_t>(part)].odd;
      } else {
        ++stats[static_cast<size_t>(part)].even;
      }
    }
  });
  return stats;
}

DistinctPartStats distinct_partition_stats(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("distinct_partition_stats: need 1 <= k <= n");
  }
  return distinct_partition_stats_all(n)[static_cast<size_t>(k)];
}

DistinctPartStats parts_count_stats(int n) {
  DistinctPartStats total;
  for (const DistinctPartStats& s : distinct_partition_stats_all(n)) {
    total.odd += s.odd;
    total.even += s.even;
  }
  return total;
}

std::vector<Int> lambert_coefficients(const std::vector<Int>& a,
                                      LambertSign sign) {
  const long long n = static_cast<long long>(a.size());
  std::vector<Int> b(a.size(), Int(0));
  for (long long d = 1; d <= n; ++d) {
    const Int& ad = a[static_cast<size_t>(d - 1)];
    if (ad == 0) continue;
    for (long long m = d; m <= n; m += d) {
      if (sign == LambertSign::minus) {
        b[static_cast<size_t>(m - 1)] += ad;
      } else {
        // q^d/(1+q^d) = sum_{j>=1} (-1)^{j-1} q^{jd}, j = m/d
        const long long j = m / d;
        if (j % 2 == 1) {
          b[static_cast<size_t>(m - 1)] += ad;
        } else {
          b[static_cast<size_t>(m - 1)] -= ad;
        }
      }
    }
  }
  return b;
}

}  // namespace lambert
