#include <doctest.h>

#include <stdexcept>

#include "lambert/arith.hpp"
#include "lambert/qseries.hpp"
#include "oracle_helpers.hpp"
#include "reference_tables.hpp"

using namespace lambert;

namespace {

IntSeries from_vector(const std::vector<Int>& coeffs, int order) {
  IntSeries s(order);
  for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i) {
    s.set_coeff(i, coeffs[static_cast<size_t>(i)]);
  }
  return s;
}

}  // namespace

TEST_CASE("pentagonal numbers match the published dozen") {
  for (size_t j = 0; j < reference::pentagonal_12.size(); ++j) {
    CHECK(pentagonal_g(static_cast<int>(j)) == reference::pentagonal_12[j]);
  }
  CHECK_THROWS_AS(pentagonal_g(-1), std::invalid_argument);
}

TEST_CASE("sparse pentagonal product equals the dense finite product") {
  for (int order : {0, 1, 5, 12, 60, 200}) {
    const IntSeries sparse = euler_product(order);
    const std::vector<Int> dense = oracle::dense_euler_coeffs(order);
    for (int i = 0; i <= order; ++i) {
      CHECK(sparse.coeff(i) == dense[static_cast<size_t>(i)]);
    }
  }
  const IntSeries small = euler_product(5);
  CHECK(small.to_string() == "1 - q - q^2 + q^5");
  const IntSeries twelve = euler_product(12);
  CHECK(twelve.coeff(12) == -1);  // 12 is a pentagonal number with odd index
  CHECK(twelve.coeff(11) == 0);
  CHECK(twelve.coeff(7) == 1);
}

TEST_CASE("distinct-part product counts distinct partitions") {
  const IntSeries series = neg_q_pochhammer(6);
  const std::vector<Int> expected = {1, 1, 1, 2, 2, 3, 4};
  for (int i = 0; i <= 6; ++i) CHECK(series.coeff(i) == expected[static_cast<size_t>(i)]);
  CHECK(neg_q_pochhammer(0) == IntSeries::one(0));
  for (int n = 1; n <= 30; ++n) {
    CHECK(neg_q_pochhammer(30).coeff(n) == oracle::count_distinct_partitions(n));
  }
}

TEST_CASE("product of both pochhammer truncations lives on even exponents") {
  const int order = 40;
  const IntSeries product = series_mul(euler_product(order), neg_q_pochhammer(order));
  const IntSeries half = euler_product(order / 2);
  for (int i = 0; i <= order; ++i) {
    if (i % 2 == 1) {
      CHECK(product.coeff(i) == 0);
    } else {
      CHECK(product.coeff(i) == half.coeff(i / 2));
    }
  }
}

TEST_CASE("partition table: pentagonal recurrence, accessor, reciprocal route") {
  const PartitionTable pt = partition_table(200);
  for (size_t n = 0; n < reference::partition_small.size(); ++n) {
    CHECK(pt.p(static_cast<long long>(n)) == reference::partition_small[n]);
  }
  CHECK(pt.p(17) == 297);
  CHECK(pt.p(-3) == 0);
  CHECK_THROWS_AS(pt.p(201), std::out_of_range);
  const IntSeries recip = series_reciprocal(euler_product(200));
  for (int n = 0; n <= 200; ++n) CHECK(pt.p(n) == recip.coeff(n));
  for (int n = 1; n <= 200; ++n) CHECK(pt.p(n) >= pt.p(n - 1));
}

TEST_CASE("series arithmetic basics") {
  const IntSeries x = from_vector({3, -1, 0, 7}, 3);
  CHECK(series_mul(x, IntSeries::one(3)) == x);

  IntSeries one_minus_q(4);
  one_minus_q.set_coeff(0, 1);
  one_minus_q.set_coeff(1, -1);
  const IntSeries recip = series_reciprocal(one_minus_q);
  for (int i = 0; i <= 4; ++i) CHECK(recip.coeff(i) == 1);
  CHECK(series_mul(one_minus_q, recip) == IntSeries::one(4));

  IntSeries negative_unit(2);
  negative_unit.set_coeff(0, -1);
  negative_unit.set_coeff(1, 5);
  CHECK(series_mul(negative_unit, series_reciprocal(negative_unit)) == IntSeries::one(2));

  IntSeries non_unit(2);
  non_unit.set_coeff(0, 2);
  CHECK_THROWS_AS(series_reciprocal(non_unit), std::invalid_argument);
  CHECK_THROWS_AS(series_mul(IntSeries(2), IntSeries(3)), std::invalid_argument);
  CHECK_THROWS_AS(IntSeries(3).coeff(4), std::out_of_range);
}

TEST_CASE("geometric slices") {
  const IntSeries j1 = geometric_slice(1, 3);
  CHECK(j1.to_string() == "q + q^2 + q^3");
  const IntSeries j2 = geometric_slice(2, 5);
  CHECK(j2.to_string() == "q^2 + q^4");
  const IntSeries jn = geometric_slice(4, 4);
  CHECK(jn.to_string() == "q^4");
  CHECK_THROWS_AS(geometric_slice(0, 4), std::invalid_argument);
}

TEST_CASE("entry generator: values, triangle shape, full series route") {
  CHECK(s_entry(1, 1) == 1);
  CHECK(s_entry(2, 1) == 0);
  CHECK(s_entry(3, 1) == -1);
  CHECK(s_entry(2, 3) == 0);
  for (int i = 1; i <= 40; ++i) CHECK(s_entry(i, i) == 1);

  // cross-check against an explicit series product
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= i; ++j) {
      const IntSeries product = series_mul(geometric_slice(j, i), euler_product(i));
      CHECK(s_entry(i, j) == product.coeff(i));
    }
  }
}

TEST_CASE("entry generator equals the signed part statistics") {
  const IntSeries euler = euler_product(40);
  for (int i = 1; i <= 40; ++i) {
    const auto stats = distinct_partition_stats_all(i);
    for (int j = 1; j <= i; ++j) {
      const Int expected = stats[static_cast<size_t>(j)].odd -
                           stats[static_cast<size_t>(j)].even;
      CHECK(s_entry(i, j, euler) == expected);
    }
  }
}

TEST_CASE("distinct part statistics") {
  CHECK(distinct_partition_stats(3, 1) == DistinctPartStats{0, 1});
  CHECK(distinct_partition_stats(2, 1) == DistinctPartStats{0, 0});
  for (int n = 1; n <= 20; ++n) {
    CHECK(distinct_partition_stats(n, n) == DistinctPartStats{1, 0});
  }
  CHECK_THROWS_AS(distinct_partition_stats(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(distinct_partition_stats(3, 4), std::invalid_argument);
}

TEST_CASE("part-count statistics and their consistency with the per-k counts") {
  CHECK(parts_count_stats(1) == DistinctPartStats{1, 0});
  CHECK(parts_count_stats(3) == DistinctPartStats{1, 2});
  for (int n : {6, 11, 17}) {
    DistinctPartStats total;
    for (int k = 1; k <= n; ++k) {
      const DistinctPartStats per_k = distinct_partition_stats(n, k);
      total.odd += per_k.odd;
      total.even += per_k.even;
    }
    CHECK(parts_count_stats(n) == total);
  }
}

TEST_CASE("lambert coefficients: named transforms") {
  const int order = 30;
  std::vector<Int> mu_seq, id_seq, lambda_seq;
  for (long long n = 1; n <= order; ++n) {
    mu_seq.push_back(moebius(n));
    id_seq.push_back(n);
    lambda_seq.push_back(liouville(n));
  }
  const std::vector<Int> mu_b = lambert_coefficients(mu_seq, LambertSign::minus);
  for (int m = 1; m <= order; ++m) {
    CHECK(mu_b[static_cast<size_t>(m - 1)] == (m == 1 ? 1 : 0));
  }
  const std::vector<Int> sigma = lambert_coefficients(id_seq, LambertSign::minus);
  CHECK(sigma[5] == 12);  // sigma(6)
  const std::vector<Int> squares = lambert_coefficients(lambda_seq, LambertSign::minus);
  CHECK(squares[8] == 1);   // 9 is a square
  CHECK(squares[7] == 0);   // 8 is not
}

TEST_CASE("lambert coefficients agree with the direct series expansion, both signs") {
  const int order = 30;
  std::vector<Int> a;
  for (long long n = 1; n <= order; ++n) a.push_back(n * n - 3 * n + 1);
  for (LambertSign sign : {LambertSign::minus, LambertSign::plus}) {
    const std::vector<Int> b = lambert_coefficients(a, sign);
    const std::vector<Int> direct = oracle::lambert_series_direct(a, sign, order);
    for (int m = 1; m <= order; ++m) {
      CHECK(b[static_cast<size_t>(m - 1)] == direct[static_cast<size_t>(m)]);
    }
  }
}
