#include "lambert/arith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lambert {

namespace {

void require_positive(long long n, const char* who) {
  if (n < 1) {
    throw std::invalid_argument(std::string(who) + ": argument must be >= 1");
  }
}

}  // namespace

long long FactorMap::value() const {
  long long n = 1;
  for (const auto& [p, e] : pairs) {
    for (int i = 0; i < e; ++i) n *= p;
  }
  return n;
}

FactorMap factorize(long long n) {
  require_positive(n, "factorize");
  FactorMap fm;
  long long rest = n;
  for (long long p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    fm.pairs.emplace_back(p, e);
  }
  if (rest > 1) fm.pairs.emplace_back(rest, 1);
  return fm;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p <= n / p; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<long long> divisors(long long n) {
  require_positive(n, "divisors");
  std::vector<long long> small, large;
  for (long long d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int moebius(long long n) {
  require_positive(n, "moebius");
  const FactorMap fm = factorize(n);
  for (const auto& [p, e] : fm.pairs) {
    if (e >= 2) return 0;
  }
  return fm.pairs.size() % 2 == 0 ? 1 : -1;
}

int abs_moebius(long long n) {
  return moebius(n) == 0 ? 0 : 1;
}

int omega_distinct(long long n) {
  require_positive(n, "omega_distinct");
  return static_cast<int>(factorize(n).pairs.size());
}

int big_omega(long long n) {
  require_positive(n, "big_omega");
  int total = 0;
  for (const auto& [p, e] : factorize(n).pairs) total += e;
  return total;
}

int liouville(long long n) {
  return big_omega(n) % 2 == 0 ? 1 : -1;
}

Int euler_phi(long long n) {
  require_positive(n, "euler_phi");
  Int result = 1;
  for (const auto& [p, e] : factorize(n).pairs) {
    result *= int_pow(p, e - 1) * (Int(p) - 1);
  }
  return result;
}

Int sigma_alpha(long long n, int alpha) {
  require_positive(n, "sigma_alpha");
  if (alpha < 0) throw std::invalid_argument("sigma_alpha: alpha must be >= 0");
  Int total = 0;
  for (long long d : divisors(n)) total += int_pow(d, alpha);
  return total;
}

Int jordan_totient(long long n, int t) {
  require_positive(n, "jordan_totient");
  if (t < 0) throw std::invalid_argument("jordan_totient: t must be >= 0");
  // J_t(n) = prod p^{(e-1)t} (p^t - 1), exact for integer t >= 0
  Int result = 1;
  for (const auto& [p, e] : factorize(n).pairs) {
    result *= int_pow(p, (e - 1) * t) * (int_pow(p, t) - 1);
  }
  return result;
}

bool is_positive_square(long long n) {
  require_positive(n, "is_positive_square");
  return is_perfect_square(n);
}

void FormalLog::add_term(long long prime, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(prime);
  if (it == terms_.end()) {
    terms_.emplace(prime, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

FormalLog& FormalLog::operator+=(const FormalLog& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

FormalLog& FormalLog::operator-=(const FormalLog& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

FormalLog& FormalLog::operator*=(const Int& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scale;
  return *this;
}

FormalLog operator-(FormalLog a) {
  for (auto& [p, c] : a.terms_) c = -c;
  return a;
}

std::string FormalLog::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != 1) out << mag.str() << "*";
    out << "log(" << p << ")";
  }
  return out.str();
}

FormalLog von_mangoldt_formal(long long n) {
  require_positive(n, "von_mangoldt_formal");
  FormalLog result;
  const FactorMap fm = factorize(n);
  if (fm.pairs.size() == 1) result.add_term(fm.pairs.front().first, 1);
  return result;
}

FormalLog log_formal(long long n) {
  require_positive(n, "log_formal");
  FormalLog result;
  for (const auto& [p, e] : factorize(n).pairs) result.add_term(p, e);
  return result;
}

}  // namespace lambert
