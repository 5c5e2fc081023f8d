#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lambert/integer.hpp"

namespace lambert {

// Prime factorization as (prime, exponent) pairs with primes strictly
// ascending; n = 1 is the empty product.
struct FactorMap {
  std::vector<std::pair<long long, int>> pairs;

  long long value() const;  // recompose prod p^e
  bool operator==(const FactorMap&) const = default;
};

FactorMap factorize(long long n);
bool is_prime(long long n);
std::vector<long long> divisors(long long n);

int moebius(long long n);
int abs_moebius(long long n);
int omega_distinct(long long n);
int big_omega(long long n);
int liouville(long long n);
Int euler_phi(long long n);
Int sigma_alpha(long long n, int alpha);
Int jordan_totient(long long n, int t);
bool is_positive_square(long long n);

// Exact element of the free abelian group on {log p : p prime}; stores a
// prime -> exponent map with no zero entries, so log-valued identities can be
// checked with integer equality instead of tolerances.
class FormalLog {
 public:
  FormalLog() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, Int>& terms() const { return terms_; }

  void add_term(long long prime, const Int& coeff);

  FormalLog& operator+=(const FormalLog& other);
  FormalLog& operator-=(const FormalLog& other);
  FormalLog& operator*=(const Int& scale);

  friend FormalLog operator+(FormalLog a, const FormalLog& b) { return a += b; }
  friend FormalLog operator-(FormalLog a, const FormalLog& b) { return a -= b; }
  friend FormalLog operator*(const Int& scale, FormalLog a) { return a *= scale; }
  friend FormalLog operator-(FormalLog a);

  bool operator==(const FormalLog&) const = default;

  std::string to_string() const;  // e.g. "2*log(2) + log(3)"

 private:
  std::map<long long, Int> terms_;
};

// log p for n = p^k (k >= 1), zero otherwise.
FormalLog von_mangoldt_formal(long long n);

// log n as the exponent vector of its factorization; the divisor sum of
// von_mangoldt_formal reproduces it exactly.
FormalLog log_formal(long long n);

}  // namespace lambert
