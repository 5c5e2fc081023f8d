#include <doctest.h>

#include <stdexcept>

#include "lambert/arith.hpp"
#include "oracle_helpers.hpp"

using namespace lambert;

TEST_CASE("integer square root is exact around perfect squares") {
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(1) == 1);
  CHECK(isqrt_floor(2) == 1);
  CHECK(isqrt_floor(3) == 1);
  CHECK_THROWS_AS(isqrt_floor(-1), std::invalid_argument);
  for (long long x = 0; x <= 20000; ++x) {
    const long long r = isqrt_floor(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
  for (long long r : {1000LL, 123456LL, 3037000498LL}) {
    CHECK(isqrt_floor(r * r) == r);
    CHECK(isqrt_floor(r * r - 1) == r - 1);
    CHECK(isqrt_floor(r * r + 1) == r);
  }
  CHECK(is_perfect_square(49));
  CHECK_FALSE(is_perfect_square(50));
  CHECK_FALSE(is_perfect_square(-4));
}

TEST_CASE("binomial coefficients and integer powers") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(11, 5) == 462);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(-1, 0) == 0);  // negative upper index maps to zero
  CHECK(binomial(3, -1) == 0);
  // Pascal rule on a block
  for (long long n = 1; n <= 30; ++n) {
    for (long long k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
  CHECK(int_pow(2, 10) == 1024);
  CHECK(int_pow(10, 0) == 1);
  CHECK(int_pow(-3, 3) == -27);
  CHECK(int_pow(10, 25) == Int("10000000000000000000000000"));
  CHECK_THROWS_AS(int_pow(2, -1), std::invalid_argument);
}

TEST_CASE("factorize builds canonical factorizations") {
  CHECK(factorize(1).pairs.empty());
  CHECK(factorize(12).pairs == std::vector<std::pair<long long, int>>{{2, 2}, {3, 1}});
  CHECK(factorize(97).pairs == std::vector<std::pair<long long, int>>{{97, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize recomposes and lists genuine ascending primes") {
  for (long long n = 1; n <= 2000; ++n) {
    const FactorMap fm = factorize(n);
    CHECK(fm.value() == n);
    long long previous = 1;
    for (const auto& [p, e] : fm.pairs) {
      CHECK(p > previous);
      CHECK(e >= 1);
      CHECK(is_prime(p));
      previous = p;
    }
  }
}

TEST_CASE("divisors lists every divisor in ascending order") {
  CHECK(divisors(1) == std::vector<long long>{1});
  CHECK(divisors(6) == std::vector<long long>{1, 2, 3, 6});
  CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
  for (long long n = 1; n <= 300; ++n) {
    CHECK(divisors(n) == oracle::brute_divisors(n));
  }
}

TEST_CASE("moebius values") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), std::invalid_argument);
}

TEST_CASE("pointwise evaluations of the classical functions") {
  CHECK(euler_phi(1) == 1);
  CHECK(jordan_totient(1, 0) == 1);
  CHECK(jordan_totient(1, 5) == 1);
  CHECK(jordan_totient(4, 2) == 12);
  CHECK(liouville(12) == -1);  // big_omega(12) == 3
  CHECK(sigma_alpha(6, 0) == 4);
  CHECK(sigma_alpha(6, 1) == 12);
  CHECK(is_positive_square(9));
  CHECK_FALSE(is_positive_square(8));
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
  CHECK_THROWS_AS(jordan_totient(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(jordan_totient(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(liouville(0), std::invalid_argument);
  CHECK_THROWS_AS(sigma_alpha(0, 1), std::invalid_argument);
}

// each pairing below is a divisor-sum identity the Lambert expansions rest on
TEST_CASE("divisor sums reproduce the paired transforms up to 1000") {
  for (long long n = 1; n <= 1000; ++n) {
    Int mu_sum = 0, phi_sum = 0, lambda_sum = 0, abs_mu_sum = 0;
    Int jordan_sum[4] = {0, 0, 0, 0};
    for (long long d : divisors(n)) {
      mu_sum += moebius(d);
      phi_sum += euler_phi(d);
      lambda_sum += liouville(d);
      abs_mu_sum += abs_moebius(d);
      for (int t = 1; t <= 3; ++t) jordan_sum[t] += jordan_totient(d, t);
    }
    CHECK(mu_sum == (n == 1 ? 1 : 0));
    CHECK(phi_sum == n);
    CHECK(lambda_sum == (is_positive_square(n) ? 1 : 0));
    CHECK(abs_mu_sum == int_pow(2, omega_distinct(n)));
    for (int t = 1; t <= 3; ++t) CHECK(jordan_sum[t] == int_pow(n, t));
  }
}

TEST_CASE("formal logs: prime-power support and exact divisor sums") {
  CHECK(von_mangoldt_formal(1).is_zero());
  FormalLog expected_eight;
  expected_eight.add_term(2, 1);
  CHECK(von_mangoldt_formal(8) == expected_eight);
  CHECK(von_mangoldt_formal(12).is_zero());

  FormalLog expected_twelve;
  expected_twelve.add_term(2, 2);
  expected_twelve.add_term(3, 1);
  CHECK(log_formal(12) == expected_twelve);
  CHECK(log_formal(12).to_string() == "2*log(2) + log(3)");

  CHECK_THROWS_AS(von_mangoldt_formal(0), std::invalid_argument);
  CHECK_THROWS_AS(log_formal(0), std::invalid_argument);

  for (long long n = 1; n <= 1000; ++n) {
    FormalLog sum;
    for (long long d : divisors(n)) sum += von_mangoldt_formal(d);
    CHECK(sum == log_formal(n));
  }
}

TEST_CASE("formal log algebra stores no zero entries") {
  FormalLog a;
  a.add_term(2, 3);
  a.add_term(5, -1);
  FormalLog b;
  b.add_term(2, -3);
  b.add_term(7, 4);
  const FormalLog sum = a + b;
  CHECK(sum.terms().count(2) == 0);  // cancelled exactly
  CHECK(sum.terms().at(5) == -1);
  CHECK(sum.terms().at(7) == 4);
  CHECK((a - a).is_zero());
  FormalLog scaled = a;
  scaled *= Int(0);
  CHECK(scaled.is_zero());
  CHECK((-a + a).is_zero());
}
