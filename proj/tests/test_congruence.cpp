#include <doctest.h>

#include <algorithm>

#include "etalab/congruence.hpp"
#include "etalab/eta.hpp"

using namespace etalab;

namespace {

LaurentSeries q_inv_f1f5(long N) { return shift(expand_quotient({{1, 4}, {5, 4}}, N), -1); }
LaurentSeries f2f10(long N) { return expand_quotient({{2, 4}, {10, 4}}, N); }
LaurentSeries mixed(long N) { return expand_quotient({{1, 1}, {2, 1}, {5, 3}, {10, 3}}, N); }

bool same(const LaurentSeries& a, const LaurentSeries& b) { return eq_on(a, b, 1).status == Agreement::Equal; }

}  // namespace

TEST_CASE("claim geometry") {
  const DissectionClaim m{GeneratingTarget::M, 3};
  CHECK(m.step() == 8);
  CHECK(m.residue() == 15);
  CHECK(m.family() == Family::A);
  const DissectionClaim t{GeneratingTarget::TSTAR, 3};
  CHECK(t.residue() == 14);
  CHECK(t.family() == Family::B);
  CHECK(DissectionClaim{GeneratingTarget::PSTAR, 1}.family() == Family::C);
}

TEST_CASE("rhs_series") {
  const long N = 200;
  // k = 1: P_1 = 1, P_0 = 1 (A) or 0 (B), tail 10.
  CHECK(same(rhs_series({GeneratingTarget::M, 1}, N), q_inv_f1f5(N) - 8 * f2f10(N) + 10 * mixed(N)));
  CHECK(same(rhs_series({GeneratingTarget::TSTAR, 1}, N), q_inv_f1f5(N) + 10 * mixed(N)));
  CHECK(same(rhs_series({GeneratingTarget::PSTAR, 2}, N), 8 * q_inv_f1f5(N) + 32 * f2f10(N)));
  const auto r = rhs_series({GeneratingTarget::PSTAR, 2}, N);
  CHECK(r.offset() == -1);
  CHECK(r.prec() == N - 1);
}

TEST_CASE("lhs_series starts at n = -1") {
  TargetCache cache;
  CHECK(lhs_series({GeneratingTarget::M, 1}, 100, cache).coeff(-1) == 1);
  CHECK(lhs_series({GeneratingTarget::PSTAR, 1}, 100, cache).coeff(-1) == -4);
  CHECK(lhs_series({GeneratingTarget::TSTAR, 1}, 100, cache).coeff(-1) == 1);
  CHECK(lhs_series({GeneratingTarget::M, 2}, 100) == lhs_series({GeneratingTarget::M, 2}, 100, cache));
}

TEST_CASE("verify_dissection") {
  TargetCache cache;
  for (auto t : {GeneratingTarget::M, GeneratingTarget::TSTAR, GeneratingTarget::PSTAR}) {
    for (long k = 1; k <= 5; ++k) {
      const auto r = verify_dissection({t, k}, 1000, cache);
      CHECK_MESSAGE(r.status == Status::Pass, r.claim);
      CHECK(r.points() > 0);
    }
  }
  const auto p3 = verify_dissection({GeneratingTarget::PSTAR, 3}, 1000, cache);
  CHECK(p3.status == Status::Pass);
  CHECK(p3.n_lo == -1);
}

TEST_CASE("the k = 2 labeling note") {
  TargetCache cache;
  for (auto t : {GeneratingTarget::M, GeneratingTarget::TSTAR}) {
    const auto r = verify_dissection({t, 2}, 500, cache);
    CHECK(r.status == Status::Pass);
    CHECK_FALSE(r.note.empty());
  }
  CHECK(verify_dissection({GeneratingTarget::PSTAR, 2}, 500, cache).note.empty());
}

TEST_CASE("perturbed coefficients fail") {
  TargetCache cache;
  for (auto t : {GeneratingTarget::M, GeneratingTarget::TSTAR, GeneratingTarget::PSTAR}) {
    for (long k = 1; k <= 4; ++k) {
      const DissectionClaim d{t, k};
      auto c = dissection_coefficients(d);
      c.previous += 1;
      const auto r = verify_dissection(d, 600, cache, c);
      CHECK_MESSAGE(r.status == Status::Fail, r.claim);
      REQUIRE(r.counterexample);
      CHECK(r.counterexample->expected);
    }
  }
}

TEST_CASE("induction steps") {
  for (auto t : {GeneratingTarget::M, GeneratingTarget::TSTAR, GeneratingTarget::PSTAR}) {
    for (long k = 1; k <= 6; ++k) {
      const auto r = verify_induction_step({t, k}, 800);
      CHECK_MESSAGE(r.status == Status::Pass, r.claim);
    }
  }
  // P* level 3: C_3 = 0 and C_2 = 8 leave -64 f2^4 f10^4.
  CHECK(same(rhs_series({GeneratingTarget::PSTAR, 3}, 300), -64 * f2f10(300)));
}

TEST_CASE("congruence examples") {
  TargetCache cache;
  const auto p0 = pstar_congruences(0);
  REQUIRE(p0.size() == 5);
  CHECK(p0[0].step_log2 == 0);
  CHECK(p0[0].required_valuation == 0u);
  CHECK(p0[1].step_log2 == 1);
  CHECK(p0[1].residue == 3);
  CHECK(p0[1].required_valuation == 2u);
  CHECK(p0.back().exact_zero());
  CHECK(p0.back().label == "P*(16n + 23) = 0");
  for (const auto& c : p0) CHECK_MESSAGE(verify_congruence(c, 2000, cache).status == Status::Pass, c.label);

  const auto m3 = mt_congruences(3);
  REQUIRE(m3.size() == 2);
  CHECK(m3[0].label == "M(8n + 15) = 0 mod 2^2");
  for (long k = 1; k <= 6; ++k) {
    for (const auto& c : mt_congruences(k)) CHECK_MESSAGE(verify_congruence(c, 1500, cache).status == Status::Pass, c.label);
  }
  CHECK_THROWS_AS(mt_congruences(0), std::invalid_argument);
}

TEST_CASE("a stronger congruence is refuted") {
  TargetCache cache;
  auto c = mt_congruences(2)[0];
  *c.required_valuation += 1;
  const auto r = verify_congruence(c, 1000, cache);
  CHECK(r.status == Status::Fail);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->valuation == *c.required_valuation - 1);
}

TEST_CASE("P* valuations are attained") {
  TargetCache cache;
  const auto p = gen_target(GeneratingTarget::PSTAR, 4000);
  for (long k = 0; k <= 1; ++k) {
    for (const auto& c : pstar_congruences(k)) {
      if (c.exact_zero()) continue;
      Valuation lowest = kInfiniteValuation;
      const long step = 1L << c.step_log2;
      for (long n = -1; step * n + c.residue < 4000; ++n) {
        if (step * n + c.residue < 0) continue;
        lowest = std::min(lowest, two_adic_valuation(p.coeff(step * n + c.residue)));
      }
      CHECK_MESSAGE(lowest == *c.required_valuation, c.label);
    }
  }
}

TEST_CASE("vanishing family") {
  TargetCache cache;
  const auto r = verify_zero_family_structurally(0, 2000, cache);
  CHECK(r.status == Status::Pass);
  CHECK(gen_target(GeneratingTarget::PSTAR, 8).coeff(7) == 0);
  const auto tampered = verify_zero_family_structurally(0, 2000, cache, 0);
  CHECK(tampered.status == Status::Fail);
}

TEST_CASE("insufficient precision") {
  TargetCache cache;
  CHECK(verify_dissection({GeneratingTarget::M, 9}, 200, cache).status == Status::InsufficientPrecision);
  const auto far = pstar_congruences(2).back();
  CHECK_FALSE(reachable(far, 100));
  CHECK(verify_congruence(far, 100, cache).status == Status::InsufficientPrecision);
  CHECK(verify_congruence(mt_congruences(1)[0], 100, cache, 1000).status == Status::InsufficientPrecision);
}
