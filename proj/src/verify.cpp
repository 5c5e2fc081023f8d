#include "lambert/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "lambert/factorization.hpp"
#include "lambert/matrices.hpp"
#include "lambert/qseries.hpp"

namespace lambert::verify {

namespace {

struct Check {
  std::string id;
  std::string range;
  std::function<std::string()> body;  // empty string = pass
};

std::string fmt_entry(const char* label, long long n, long long k, const Int& lhs,
                      const Int& rhs) {
  std::ostringstream out;
  out << label << " n=" << n << " k=" << k << ": " << lhs.str() << " != " << rhs.str();
  return out.str();
}

const std::vector<Int> kFirstColumnReference = {1, 0, 1,  2,  4,  5,
                                                10, 12, 20, 25, 41, 47};
const std::vector<Int> kAperiodicReference = {1,  1,  2,  3,  6,  7,
                                              14, 17, 27, 34, 55, 63};
const std::vector<long long> kListedPrimeRows = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

std::vector<Int> ones_sequence(int n) { return std::vector<Int>(static_cast<size_t>(n), Int(1)); }

std::vector<Int> identity_sequence(int n) {
  std::vector<Int> a(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) a[static_cast<size_t>(i - 1)] = i;
  return a;
}

std::vector<Int> moebius_sequence(int n) {
  std::vector<Int> a(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) a[static_cast<size_t>(i - 1)] = moebius(i);
  return a;
}

// ---------------------------------------------------------------------------
// matrices suite
// ---------------------------------------------------------------------------

std::vector<Check> matrices_checks(const Bounds& b) {
  std::vector<Check> checks;
  const int order = b.series_order;

  checks.push_back({"pentagonal-product-vs-dense-product",
                    "order<=" + std::to_string(order), [order]() -> std::string {
                      const IntSeries sparse = euler_product(order);
                      IntSeries dense = IntSeries::one(order);
                      for (int n = 1; n <= order; ++n) {
                        for (int i = order; i >= n; --i) {
                          dense.add_coeff(i, -dense.coeff(i - n));
                        }
                      }
                      for (int i = 0; i <= order; ++i) {
                        if (sparse.coeff(i) != dense.coeff(i)) {
                          return fmt_entry("coefficient", i, 0, sparse.coeff(i),
                                           dense.coeff(i));
                        }
                      }
                      return {};
                    }});

  checks.push_back({"partition-table-vs-product-reciprocal",
                    "order<=" + std::to_string(order), [order]() -> std::string {
                      const PartitionTable pt(order);
                      const IntSeries recip = series_reciprocal(euler_product(order));
                      for (int n = 0; n <= order; ++n) {
                        if (pt.p(n) != recip.coeff(n)) {
                          return fmt_entry("p", n, 0, pt.p(n), recip.coeff(n));
                        }
                      }
                      return {};
                    }});

  const int stat_bound = std::min(40, b.max_n);
  checks.push_back({"entry-generator-vs-part-statistics",
                    "1<=j<=i<=" + std::to_string(stat_bound),
                    [stat_bound]() -> std::string {
                      const IntSeries euler = euler_product(stat_bound);
                      for (int i = 1; i <= stat_bound; ++i) {
                        const auto stats = distinct_partition_stats_all(i);
                        for (int j = 1; j <= i; ++j) {
                          const Int expected = stats[static_cast<size_t>(j)].odd -
                                               stats[static_cast<size_t>(j)].even;
                          if (s_entry(i, j, euler) != expected) {
                            return fmt_entry("s", i, j, s_entry(i, j, euler), expected);
                          }
                        }
                      }
                      return {};
                    }});

  const int max_n = b.max_n;
  checks.push_back({"inverse-divisor-sum-vs-forward-substitution",
                    "1<=k<=n<=" + std::to_string(max_n), [max_n]() -> std::string {
                      const TriMatrix inv = invert_unit_lower(factorization_matrix(max_n));
                      const PartitionTable pt(max_n);
                      for (long long n = 1; n <= max_n; ++n) {
                        for (long long k = 1; k <= n; ++k) {
                          const Int ds = inverse_entry_divisor_sum(n, k, pt);
                          if (ds != inv.at(static_cast<int>(n), static_cast<int>(k))) {
                            return fmt_entry("entry", n, k, ds,
                                             inv.at(static_cast<int>(n), static_cast<int>(k)));
                          }
                        }
                      }
                      return {};
                    }});

  checks.push_back({"first-column-values-and-partition-inverse",
                    "n<=" + std::to_string(max_n), [max_n]() -> std::string {
                      const std::vector<Int> column = first_column_sequence(max_n);
                      const size_t probe =
                          std::min(kFirstColumnReference.size(), column.size());
                      for (size_t i = 0; i < probe; ++i) {
                        if (column[i] != kFirstColumnReference[i]) {
                          return fmt_entry("column", static_cast<long long>(i + 1), 1,
                                           column[i], kFirstColumnReference[i]);
                        }
                      }
                      return {};
                    }});

  checks.push_back({"inverse-column-divisor-sum-is-shifted-partition",
                    "1<=k<=n<=" + std::to_string(max_n), [max_n]() -> std::string {
                      const TriMatrix inv = invert_unit_lower(factorization_matrix(max_n));
                      const PartitionTable pt(max_n);
                      for (long long n = 1; n <= max_n; ++n) {
                        for (long long k = 1; k <= n; ++k) {
                          Int sum = 0;
                          for (long long d : divisors(n)) {
                            if (d >= k) sum += inv.at(static_cast<int>(d), static_cast<int>(k));
                          }
                          if (sum != pt.p(n - k)) {
                            return fmt_entry("divisor sum", n, k, sum, pt.p(n - k));
                          }
                        }
                      }
                      return {};
                    }});

  const int rec_bound = std::min(18, b.max_n);
  checks.push_back({"product-form-recurrence-residuals",
                    "n<=" + std::to_string(rec_bound), [rec_bound]() -> std::string {
                      const Int worst = inverse_recurrence_residual(rec_bound);
                      if (worst != 0) return "max residual " + worst.str();
                      return {};
                    }});

  checks.push_back({"nested-alternating-formula-vs-inverse", "1<=j<=i<=10",
                    []() -> std::string {
                      const TriMatrix inv = invert_unit_lower(factorization_matrix(10));
                      for (int i = 1; i <= 10; ++i) {
                        for (int j = 1; j <= i; ++j) {
                          const Int nested = nested_formula_entry(i, j);
                          if (nested != inv.at(i, j)) {
                            return fmt_entry("entry", i, j, nested, inv.at(i, j));
                          }
                        }
                      }
                      return {};
                    }});

  checks.push_back({"binomial-power-sum-vs-inverse", "2<=n<=12", []() -> std::string {
                      for (int n = 2; n <= 12; ++n) {
                        if (binomial_power_inverse(n) !=
                            invert_unit_lower(factorization_matrix(n))) {
                          return "mismatch at n=" + std::to_string(n);
                        }
                      }
                      return {};
                    }});

  const int block_bound = std::min(60, b.max_n);
  checks.push_back({"block-extension-vs-direct-inversion",
                    "n<=" + std::to_string(block_bound), [block_bound]() -> std::string {
                      TriMatrix inv = TriMatrix::identity(1);
                      for (int n = 2; n <= block_bound; ++n) {
                        inv = block_extend_inverse(inv);
                      }
                      if (inv != invert_unit_lower(factorization_matrix(block_bound))) {
                        return "iterated extension differs at n=" +
                               std::to_string(block_bound);
                      }
                      return {};
                    }});

  checks.push_back({"lambert-gf-of-inverse-columns", "k<=10, order<=60",
                    []() -> std::string {
                      const int order = 60;
                      const PartitionTable pt(order);
                      const IntSeries partition_gf =
                          series_reciprocal(euler_product(order));
                      for (int k = 1; k <= 10; ++k) {
                        std::vector<Int> column(static_cast<size_t>(order));
                        for (long long n = 1; n <= order; ++n) {
                          column[static_cast<size_t>(n - 1)] =
                              inverse_entry_divisor_sum(n, k, pt);
                        }
                        const std::vector<Int> bs =
                            lambert_coefficients(column, LambertSign::minus);
                        IntSeries lhs(order);
                        for (int n = 1; n <= order; ++n) {
                          lhs.set_coeff(n, bs[static_cast<size_t>(n - 1)]);
                        }
                        const IntSeries rhs = series_mul(
                            IntSeries::monomial(order, k), partition_gf);
                        if (!(lhs == rhs)) {
                          return "column k=" + std::to_string(k) + " differs";
                        }
                      }
                      return {};
                    }});

  checks.push_back({"special-closed-forms-vs-divisor-sum",
                    "applicable n<=" + std::to_string(max_n), [max_n]() -> std::string {
                      const PartitionTable pt(max_n);
                      for (long long n = 1; n <= max_n; ++n) {
                        for (long long k = 1; k <= n; ++k) {
                          const auto special = inverse_entry_special(n, k);
                          if (!special) continue;
                          const Int ds = inverse_entry_divisor_sum(n, k, pt);
                          if (*special != ds) return fmt_entry("special", n, k, *special, ds);
                        }
                      }
                      return {};
                    }});

  checks.push_back({"full-partition-rows-contain-listed-primes",
                    "rows {2,3,...,29}", [max_n]() -> std::string {
                      const PartitionTable pt(std::max(max_n, 29));
                      for (long long p : kListedPrimeRows) {
                        for (long long k = 2; k <= p; ++k) {
                          const Int entry = inverse_entry_divisor_sum(p, k, pt);
                          if (entry != pt.p(p - k)) {
                            return fmt_entry("row", p, k, entry, pt.p(p - k));
                          }
                        }
                      }
                      return {};
                    }});

  return checks;
}

// ---------------------------------------------------------------------------
// corrections suite
// ---------------------------------------------------------------------------

std::vector<Check> corrections_checks(const Bounds& b) {
  std::vector<Check> checks;
  const int max_m = b.max_m;
  const std::string m_range = "m<=" + std::to_string(max_m);

  struct ClosedForm {
    std::string id;
    std::function<LambertPair()> make_pair;
    std::function<Int(long long)> closed;
  };
  const std::vector<ClosedForm> forms = {
      {"correction-threeway-phi", pair_phi, correction_phi_closed},
      {"correction-threeway-mu", pair_mu, correction_mu_closed},
      {"correction-threeway-lambda", pair_lambda, correction_lambda_closed},
      {"correction-threeway-abs-mu", pair_abs_mu, correction_abs_mu_closed},
      {"correction-threeway-jordan-2", []() { return pair_jordan(2); },
       [](long long m) { return correction_jordan_closed(2, m); }},
      {"correction-threeway-jordan-3", []() { return pair_jordan(3); },
       [](long long m) { return correction_jordan_closed(3, m); }},
  };
  for (const ClosedForm& form : forms) {
    checks.push_back({form.id, m_range, [form, max_m]() -> std::string {
                        const LambertPair pair = form.make_pair();
                        for (long long m = 0; m <= max_m; ++m) {
                          const Int closed = form.closed(m);
                          const Int generic = correction_term(pair, m);
                          const Int sparse = correction_term_pentagonal(pair, m);
                          if (closed != generic || generic != sparse) {
                            return "m=" + std::to_string(m) + ": closed=" + closed.str() +
                                   " generic=" + generic.str() + " sparse=" + sparse.str();
                          }
                        }
                        return {};
                      }});
  }

  checks.push_back({"correction-threeway-von-mangoldt", m_range, [max_m]() -> std::string {
                      const LambertPairLog pair = pair_von_mangoldt();
                      for (long long m = 0; m <= max_m; ++m) {
                        const FormalLog closed = correction_von_mangoldt_closed(m);
                        const FormalLog generic = correction_term(pair, m);
                        const FormalLog sparse = correction_term_pentagonal(pair, m);
                        if (!(closed == generic) || !(generic == sparse)) {
                          return "m=" + std::to_string(m) + ": closed=" + closed.to_string() +
                                 " generic=" + generic.to_string();
                        }
                      }
                      return {};
                    }});

  const std::string n_range = "n<=" + std::to_string(max_m);
  checks.push_back({"double-convolution-recurrence", n_range, [max_m]() -> std::string {
                      const std::vector<LambertPair> pairs = {
                          pair_phi(),    pair_mu(),        pair_lambda(), pair_abs_mu(),
                          pair_jordan(2), pair_jordan(3), pair_sigma(1)};
                      for (const LambertPair& pair : pairs) {
                        for (int n = 1; n <= max_m; ++n) {
                          const Int residual = double_sum_recurrence_residual(pair, n);
                          if (residual != 0) {
                            return pair.name() + " n=" + std::to_string(n) +
                                   ": residual " + residual.str();
                          }
                        }
                      }
                      const LambertPairLog lambda_pair = pair_von_mangoldt();
                      for (int n = 1; n <= std::min(40, max_m); ++n) {
                        const FormalLog residual =
                            double_sum_recurrence_residual(lambda_pair, n);
                        if (!residual.is_zero()) {
                          return "von_mangoldt n=" + std::to_string(n) + ": residual " +
                                 residual.to_string();
                        }
                      }
                      return {};
                    }});

  checks.push_back({"corrected-pentagonal-coefficient-relation", n_range,
                    [max_m]() -> std::string {
                      const std::vector<LambertPair> pairs = {
                          pair_phi(),    pair_mu(),        pair_lambda(), pair_abs_mu(),
                          pair_jordan(2), pair_jordan(3), pair_sigma(1)};
                      for (const LambertPair& pair : pairs) {
                        for (int n = 1; n <= max_m; ++n) {
                          if (!pentagonal_shift_report(pair, n).corrected_holds) {
                            return pair.name() + " fails at n=" + std::to_string(n);
                          }
                        }
                      }
                      const LambertPairLog lambda_pair = pair_von_mangoldt();
                      for (int n = 1; n <= std::min(40, max_m); ++n) {
                        if (!pentagonal_shift_report(lambda_pair, n).corrected_holds) {
                          return "von_mangoldt fails at n=" + std::to_string(n);
                        }
                      }
                      return {};
                    }});

  checks.push_back({"alternating-pentagonal-inverse-sum", "n<=100", []() -> std::string {
                      for (long long n = 1; n <= 100; ++n) {
                        const Int sum = alternating_pentagonal_sum(n);
                        if (sum != 0) {
                          return "n=" + std::to_string(n) + ": sum " + sum.str();
                        }
                      }
                      return {};
                    }});

  checks.push_back({"aperiodic-partition-sequence", "reference 12, enumeration n<=30",
                    []() -> std::string {
                      for (size_t i = 0; i < kAperiodicReference.size(); ++i) {
                        const long long n = static_cast<long long>(i + 1);
                        const Int value = aperiodic_sequence(n);
                        if (value != kAperiodicReference[i]) {
                          return fmt_entry("reference", n, 0, value, kAperiodicReference[i]);
                        }
                      }
                      for (int n = 1; n <= 30; ++n) {
                        const Int value = aperiodic_sequence(n);
                        const Int counted = count_coprime_partitions(n);
                        if (value != counted) {
                          return fmt_entry("enumeration", n, 0, value, counted);
                        }
                      }
                      return {};
                    }});

  return checks;
}

// ---------------------------------------------------------------------------
// reconstructions suite
// ---------------------------------------------------------------------------

std::vector<Check> reconstructions_checks(const Bounds& b) {
  std::vector<Check> checks;
  const int max_n = std::min(b.max_n, 60);
  const std::string n_range = "n<=" + std::to_string(max_n);

  struct Reconstruction {
    std::string id;
    std::function<LambertPair()> make_pair;
  };
  const std::vector<Reconstruction> fns = {
      {"reconstruction-phi", pair_phi},
      {"reconstruction-mu", pair_mu},
      {"reconstruction-lambda", pair_lambda},
      {"reconstruction-abs-mu", pair_abs_mu},
      {"reconstruction-jordan-2", []() { return pair_jordan(2); }},
      {"reconstruction-jordan-3", []() { return pair_jordan(3); }},
  };
  for (const Reconstruction& fn : fns) {
    checks.push_back({fn.id, n_range, [fn, max_n]() -> std::string {
                        const LambertPair pair = fn.make_pair();
                        const std::vector<Int> recovered =
                            recover_coefficients(pair, max_n);
                        for (long long n = 1; n <= max_n; ++n) {
                          const Int direct = pair.a(n);
                          if (recovered[static_cast<size_t>(n - 1)] != direct) {
                            return fmt_entry("a", n, 0,
                                             recovered[static_cast<size_t>(n - 1)], direct);
                          }
                        }
                        return {};
                      }});
  }

  const int log_bound = std::min(40, max_n);
  checks.push_back({"reconstruction-von-mangoldt", "n<=" + std::to_string(log_bound),
                    [log_bound]() -> std::string {
                      const LambertPairLog pair = pair_von_mangoldt();
                      const std::vector<FormalLog> recovered =
                          recover_coefficients(pair, log_bound);
                      for (long long n = 1; n <= log_bound; ++n) {
                        const FormalLog direct = von_mangoldt_formal(n);
                        if (!(recovered[static_cast<size_t>(n - 1)] == direct)) {
                          return "n=" + std::to_string(n) + ": " +
                                 recovered[static_cast<size_t>(n - 1)].to_string() +
                                 " != " + direct.to_string();
                        }
                      }
                      return {};
                    }});

  checks.push_back({"sigma-partial-sum-convolution", "x<=100", []() -> std::string {
                      for (int x = 0; x <= 100; ++x) {
                        const SigmaPartialSums sums = sigma_partial_sum_check(x);
                        if (sums.convolution != sums.direct) {
                          return "x=" + std::to_string(x) + ": " +
                                 sums.convolution.str() + " != " + sums.direct.str();
                        }
                      }
                      return {};
                    }});

  checks.push_back({"multiplicative-relation-distinct-primes", "q<r<=29",
                    []() -> std::string {
                      const std::vector<LambertPair> pairs = {
                          pair_mu(),      pair_phi(),     pair_lambda(), pair_abs_mu(),
                          pair_jordan(2), pair_sigma(1)};
                      const std::vector<long long> primes = {2,  3,  5,  7,  11,
                                                             13, 17, 19, 23, 29};
                      for (const LambertPair& pair : pairs) {
                        for (size_t i = 0; i < primes.size(); ++i) {
                          for (size_t j = i + 1; j < primes.size(); ++j) {
                            const Int residual = multiplicative_relation_residual(
                                pair, primes[i], primes[j]);
                            if (residual != 0) {
                              return pair.name() + " q=" + std::to_string(primes[i]) +
                                     " r=" + std::to_string(primes[j]) + ": residual " +
                                     residual.str();
                            }
                          }
                        }
                      }
                      return {};
                    }});

  return checks;
}

// ---------------------------------------------------------------------------
// generalized suite
// ---------------------------------------------------------------------------

std::vector<Check> generalized_checks(const Bounds& b) {
  std::vector<Check> checks;
  const int order = b.factorization_order;
  const std::string order_range = "order<=" + std::to_string(order);

  checks.push_back({"part-count-factorization", order_range, [order]() -> std::string {
                      std::vector<DistinctPartStats> totals(static_cast<size_t>(order) + 1);
                      for (int n = 1; n <= order; ++n) totals[static_cast<size_t>(n)] =
                          parts_count_stats(n);
                      for (LambertSign sign : {LambertSign::minus, LambertSign::plus}) {
                        const std::vector<Int> bs =
                            lambert_coefficients(ones_sequence(order), sign);
                        IntSeries lhs(order);
                        for (int n = 1; n <= order; ++n) {
                          lhs.set_coeff(n, bs[static_cast<size_t>(n - 1)]);
                        }
                        IntSeries inner(order);
                        for (int n = 1; n <= order; ++n) {
                          const DistinctPartStats& st = totals[static_cast<size_t>(n)];
                          inner.set_coeff(n, sign == LambertSign::minus
                                                 ? Int(st.odd - st.even)
                                                 : Int(st.odd + st.even));
                        }
                        const IntSeries base = sign == LambertSign::minus
                                                   ? euler_product(order)
                                                   : neg_q_pochhammer(order);
                        const IntSeries rhs =
                            series_mul(series_reciprocal(base), inner);
                        if (!(lhs == rhs)) {
                          return std::string("sign ") +
                                 (sign == LambertSign::minus ? "-" : "+") + " differs";
                        }
                      }
                      return {};
                    }});

  checks.push_back(
      {"coefficient-factorization", order_range + ", a in {1, n, mu}",
       [order]() -> std::string {
         std::vector<std::vector<DistinctPartStats>> stats(static_cast<size_t>(order) + 1);
         for (int n = 1; n <= order; ++n) stats[static_cast<size_t>(n)] =
             distinct_partition_stats_all(n);
         const std::vector<std::pair<std::string, std::vector<Int>>> sequences = {
             {"1", ones_sequence(order)},
             {"n", identity_sequence(order)},
             {"mu", moebius_sequence(order)}};
         for (const auto& [label, a] : sequences) {
           for (LambertSign sign : {LambertSign::minus, LambertSign::plus}) {
             const std::vector<Int> bs = lambert_coefficients(a, sign);
             IntSeries lhs(order);
             for (int n = 1; n <= order; ++n) {
               lhs.set_coeff(n, bs[static_cast<size_t>(n - 1)]);
             }
             IntSeries inner(order);
             for (int n = 1; n <= order; ++n) {
               Int acc = 0;
               for (int k = 1; k <= n; ++k) {
                 const DistinctPartStats& st =
                     stats[static_cast<size_t>(n)][static_cast<size_t>(k)];
                 const Int weight = sign == LambertSign::minus ? Int(st.odd - st.even)
                                                               : Int(st.odd + st.even);
                 acc += weight * a[static_cast<size_t>(k - 1)];
               }
               inner.set_coeff(n, acc);
             }
             const IntSeries base = sign == LambertSign::minus ? euler_product(order)
                                                               : neg_q_pochhammer(order);
             const IntSeries rhs = series_mul(series_reciprocal(base), inner);
             if (!(lhs == rhs)) {
               return "a=" + label + std::string(" sign ") +
                      (sign == LambertSign::minus ? "-" : "+") + " differs";
             }
           }
         }
         return {};
       }});

  const int gen_order = b.generalized_order;
  const std::string gen_range = "order<=" + std::to_string(gen_order);

  checks.push_back({"q-squared-variant", gen_range + ", a in {1, n, mu}",
                    [gen_order]() -> std::string {
                      const std::vector<std::pair<std::string, std::vector<Int>>> sequences =
                          {{"1", ones_sequence(gen_order)},
                           {"n", identity_sequence(gen_order)},
                           {"mu", moebius_sequence(gen_order)}};
                      for (const auto& [label, a] : sequences) {
                        const IntSeries residual = q_squared_variant_residual(a, gen_order);
                        if (!residual.is_zero()) {
                          return "a=" + label + ": residual " + residual.to_string();
                        }
                      }
                      return {};
                    }});

  checks.push_back(
      {"generalized-mk-series", gen_range + ", (m,k) in {0,1,2}^2, a in {1, n, mu}",
       [gen_order]() -> std::string {
         const std::vector<std::pair<std::string, std::vector<Int>>> sequences = {
             {"1", ones_sequence(gen_order)},
             {"n", identity_sequence(gen_order)},
             {"mu", moebius_sequence(gen_order)}};
         for (int m = 0; m <= 2; ++m) {
           for (int k = 0; k <= 2; ++k) {
             for (const auto& [label, a] : sequences) {
               const IntSeries residual =
                   generalized_factorization_residual(m, k, a, gen_order);
               if (!residual.is_zero()) {
                 return "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) +
                        ") a=" + label + ": residual " + residual.to_string();
               }
             }
           }
         }
         return {};
       }});

  checks.push_back(
      {"generalized-mk-coefficient", "n<=" + std::to_string(gen_order) + ", m>=k",
       [gen_order]() -> std::string {
         const std::vector<std::pair<std::string, std::vector<Int>>> sequences = {
             {"1", ones_sequence(gen_order)},
             {"n", identity_sequence(gen_order)},
             {"mu", moebius_sequence(gen_order)}};
         for (int m = 0; m <= 2; ++m) {
           for (int k = 0; k <= m; ++k) {
             for (const auto& [label, a] : sequences) {
               for (long long n = 1; n <= gen_order; ++n) {
                 const Int residual = generalized_coefficient_residual(m, k, a, n);
                 if (residual != 0) {
                   return "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) +
                          ") a=" + label + " n=" + std::to_string(n) + ": residual " +
                          residual.str();
                 }
               }
             }
           }
         }
         return {};
       }});

  return checks;
}

std::vector<Check> suite_checks(const std::string& suite_id, const Bounds& b) {
  if (suite_id == "matrices") return matrices_checks(b);
  if (suite_id == "corrections") return corrections_checks(b);
  if (suite_id == "reconstructions") return reconstructions_checks(b);
  if (suite_id == "generalized") return generalized_checks(b);
  if (suite_id == "all") {
    std::vector<Check> all;
    for (const std::string& name : suite_names()) {
      std::vector<Check> part = suite_checks(name, b);
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + suite_id);
}

CheckResult run_check(const Check& check) {
  CheckResult result{check.id, check.range, true, ""};
  try {
    result.counterexample = check.body();
    result.pass = result.counterexample.empty();
  } catch (const std::exception& e) {
    result.pass = false;
    result.counterexample = std::string("exception: ") + e.what();
  }
  return result;
}

}  // namespace

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

Bounds quick_bounds() {
  Bounds b;
  b.max_n = 40;
  b.max_m = 40;
  b.series_order = 100;
  b.factorization_order = 30;
  b.generalized_order = 20;
  return b;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"matrices", "corrections",
                                                 "reconstructions", "generalized"};
  return names;
}

bool is_suite(const std::string& id) {
  if (id == "all") return true;
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), id) != names.end();
}

unsigned worker_count_from_env() {
  if (const char* env = std::getenv("LAMBERT_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

RunReport run_suite(const std::string& suite_id, const Bounds& bounds,
                    unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "verify";
  report.parameters = {
      {"suite", suite_id},
      {"max_n", std::to_string(bounds.max_n)},
      {"max_m", std::to_string(bounds.max_m)},
      {"series_order", std::to_string(bounds.series_order)},
      {"factorization_order", std::to_string(bounds.factorization_order)},
      {"generalized_order", std::to_string(bounds.generalized_order)},
  };

  const std::vector<Check> checks = suite_checks(suite_id, bounds);
  report.checks.resize(checks.size());
  if (workers <= 1) {
    for (size_t i = 0; i < checks.size(); ++i) report.checks[i] = run_check(checks[i]);
  } else {
    // batched fan-out; results land at their definition index so report
    // order never depends on scheduling
    for (size_t base = 0; base < checks.size(); base += workers) {
      const size_t end = std::min(checks.size(), base + workers);
      std::vector<std::future<CheckResult>> batch;
      batch.reserve(end - base);
      for (size_t i = base; i < end; ++i) {
        batch.push_back(std::async(std::launch::async,
                                   [&checks, i]() { return run_check(checks[i]); }));
      }
      for (size_t i = base; i < end; ++i) {
        report.checks[i] = batch[i - base].get();
      }
    }
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace lambert::verify
