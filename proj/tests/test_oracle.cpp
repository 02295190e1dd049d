#include <doctest.h>

#include "etalab/eta.hpp"
#include "etalab/oracle.hpp"
#include "test_util.hpp"

using namespace etalab;
using etalab::test::as_longs;

TEST_CASE("partition_dp") {
  const auto t = oracle::partition_dp(30);
  CHECK(t.values[0] == 1);
  CHECK(t.values[4] == 5);
  CHECK(t.values[10] == 42);
  for (long n = 1; n < 30; ++n) {
    CHECK(t.values[n] > 0);
    CHECK(t.values[n] >= t.values[n - 1]);
  }
  const auto big = oracle::partition_dp(400);
  for (long n = 4; n < 400; n += 5) CHECK(mpz_divisible_ui_p(big.values[n].get_mpz_t(), 5) != 0);
  for (long n = 5; n < 400; n += 7) CHECK(mpz_divisible_ui_p(big.values[n].get_mpz_t(), 7) != 0);
  for (long n = 6; n < 400; n += 11) CHECK(mpz_divisible_ui_p(big.values[n].get_mpz_t(), 11) != 0);
  // p(100) is Hardy and Ramanujan's classical 190569292.
  CHECK(big.values[100] == 190569292);
}

TEST_CASE("direct_eta_product") {
  CHECK(as_longs(oracle::direct_eta_product({{1, 1}}, 13)) ==
        std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
  const auto f2 = oracle::direct_eta_product({{2, 1}}, 60);
  for (long e = 1; e < 60; e += 2) CHECK(f2.coeff(e) == 0);
  CHECK(oracle::direct_eta_product({{1, -1}}, 200) == LaurentSeries(0, oracle::partition_dp(200).values));
  CHECK(oracle::direct_eta_product({{1, 4}, {5, 4}}, 200).coeff(3) == expand_quotient({{1, 4}, {5, 4}}, 200).coeff(3));
}

TEST_CASE("cross_check passes on the pipeline") {
  const auto report = oracle::cross_check(200);
  CHECK(report.passed());
  CHECK(report.checks.size() == 18);
}

TEST_CASE("cross_check catches a corrupted pentagonal expansion") {
  // Shift every generalized pentagonal exponent past the first by one.
  const FExpander off_by_one = [](long m, long N) {
    auto good = expand_f(m, N);
    std::vector<Coefficient> c(N);
    c[0] = 1;
    for (long e = 1; e < N; ++e) {
      if (sgn(good.coeffs()[e]) != 0 && e + 1 < N) c[e + 1] = good.coeffs()[e];
    }
    return LaurentSeries(0, std::move(c));
  };
  const auto report = oracle::cross_check(100, off_by_one);
  CHECK_FALSE(report.passed());
  REQUIRE_FALSE(report.checks.front().passed);
  REQUIRE(report.checks.front().witness);
  CHECK(report.checks.front().witness->exponent == 1);
}
