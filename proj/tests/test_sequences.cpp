#include <doctest.h>

#include <thread>
#include <vector>

#include "etalab/sequences.hpp"

using namespace etalab;

TEST_CASE("seq_value: initial values and recurrence") {
  CHECK(seq_value(Family::A, 0) == 1);
  CHECK(seq_value(Family::A, 1) == 1);
  CHECK(seq_value(Family::B, 0) == 0);
  CHECK(seq_value(Family::B, 1) == 1);
  CHECK(seq_value(Family::C, 0) == 1);
  CHECK(seq_value(Family::C, 1) == -4);

  CHECK(seq_value(Family::C, 2) == 8);
  CHECK(seq_value(Family::C, 3) == 0);
  CHECK(seq_value(Family::C, 4) == -64);
  // -4*1 - 8*1 + 10 and -4*1 - 8*0 + 10.
  CHECK(seq_value(Family::A, 2) == -2);
  CHECK(seq_value(Family::B, 2) == 6);
  CHECK_THROWS_AS(seq_value(Family::A, -1), std::invalid_argument);
}

TEST_CASE("closed_form_C") {
  const std::vector<long> first{1, -4, 8, 0, -64, 256, -512, 0, 4096};
  for (long k = 0; k < static_cast<long>(first.size()); ++k) {
    CHECK(closed_form_C(k) == first[k]);
    CHECK(seq_value(Family::C, k) == first[k]);
  }
  for (long k = 0; k <= 16; ++k) {
    CHECK(closed_form_C(4 * k + 3) == 0);
    CHECK(seq_value(Family::C, 4 * k + 3) == 0);
  }
}

TEST_CASE("valuations and closed forms through k = 64") {
  CHECK(two_adic_valuation(seq_value(Family::A, 1)) == 0);
  CHECK(two_adic_valuation(seq_value(Family::B, 1)) == 0);
  CHECK(two_adic_valuation(seq_value(Family::A, 2)) == 1);
  CHECK(two_adic_valuation(seq_value(Family::B, 2)) == 1);

  const auto v = verify_valuations(64);
  CHECK(v.passed);
  CHECK_FALSE(v.first_failure_k);
  const auto c = verify_closed_forms(64);
  CHECK(c.passed);

  for (long k = 1; k <= 64; ++k) {
    for (Family f : {Family::A, Family::B}) {
      Coefficient odd = seq_value(f, k) >> (k - 1);
      CHECK(Coefficient(odd << (k - 1)) == seq_value(f, k));
      CHECK(mpz_odd_p(odd.get_mpz_t()) != 0);
    }
  }
}

TEST_CASE("a family with different initial values breaks the valuation pattern") {
  const SequenceFamily shifted{Family::A, 1, 3, true};
  // -4*3 - 8*1 + 10 = -10: v2 = 1 still, but k = 3 gives -4*(-10) - 8*3 + 20 = 36, v2 = 2.
  CHECK(seq_value_uncached(shifted, 2) == -10);
  CHECK(seq_value_uncached(shifted, 3) == 36);
}

TEST_CASE("memoized and uncached values agree") {
  for (Family f : {Family::A, Family::B, Family::C}) {
    for (long k = 0; k <= 70; ++k) CHECK(seq_value(f, k) == seq_value_uncached(SequenceFamily::of(f), k));
  }
}

TEST_CASE("concurrent seq_value calls see identical values") {
  std::vector<std::vector<Coefficient>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([t, &seen] {
      for (long k = 200; k >= 0; --k) seen[t].push_back(seq_value(t % 2 ? Family::A : Family::C, k));
    });
  }
  for (auto& th : threads) th.join();
  CHECK(seen[0] == seen[2]);
  CHECK(seen[1] == seen[3]);
  CHECK(seen[1].back() == 1);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(verify_valuations(1), std::invalid_argument);
  CHECK_THROWS_AS(verify_closed_forms(7), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_C(-1), std::invalid_argument);
}
