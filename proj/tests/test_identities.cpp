#include <doctest.h>

#include <json.hpp>

#include "etalab/eta.hpp"
#include "etalab/identities.hpp"
#include "etalab/report_json.hpp"

using namespace etalab;

TEST_CASE("identity ids round-trip") {
  for (auto id : kAllIdentities) {
    REQUIRE(parse_identity_id(to_string(id)));
    CHECK(*parse_identity_id(to_string(id)) == id);
    CHECK(std::string(statement(id)).size() > 0);
  }
  CHECK_FALSE(parse_identity_id("EQ99"));
  CHECK_FALSE(parse_identity_id(""));
}

TEST_CASE("EQ27 difference is the constant 5") {
  const auto [lhs, rhs] = identity_sides(IdentityId::EQ27, 300);
  CHECK(rhs == LaurentSeries::monomial(5, 0, rhs.offset(), rhs.prec()));
  CHECK(lhs.coeff(0) == 5);
  for (long e = lhs.offset(); e < lhs.prec(); ++e) {
    if (e != 0) CHECK(lhs.coeff(e) == 0);
  }
  CHECK(lhs.prec() >= 150);
}

TEST_CASE("individual identities pass") {
  for (auto id : {IdentityId::EQ21, IdentityId::EQ23, IdentityId::NEGQ, IdentityId::EQ29}) {
    const auto r = verify_identity(id, 300);
    CHECK_MESSAGE(r.status == Status::Pass, to_string(id));
    CHECK_FALSE(r.witness);
  }
}

TEST_CASE("verify_all_identities") {
  const auto reports = verify_all_identities(300);
  REQUIRE(reports.size() == kAllIdentities.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].id == kAllIdentities[i]);
    CHECK(reports[i].order == 300);
    CHECK_MESSAGE(reports[i].status == Status::Pass, to_string(reports[i].id));
  }
}

TEST_CASE("larger order agrees on the overlap") {
  for (auto id : kAllIdentities) {
    const auto small = identity_sides(id, 300);
    const auto large = identity_sides(id, 600);
    CHECK_MESSAGE(eq_on(small.first, large.first, 1).status == Agreement::Equal, to_string(id));
    CHECK_MESSAGE(eq_on(small.second, large.second, 1).status == Agreement::Equal, to_string(id));
  }
}

TEST_CASE("flipping a right-hand term is caught") {
  for (auto id : kAllIdentities) {
    const auto terms = identity_terms(id, 300);
    REQUIRE(!terms.rhs_terms.empty());
    const auto r = verify_identity(id, 300, terms.rhs_terms.size() - 1);
    CHECK_MESSAGE(r.status == Status::Fail, to_string(id));
    CHECK_MESSAGE(r.witness.has_value(), to_string(id));
  }
  // The 5q term of EQ21 first shows at q^1.
  const auto terms = identity_terms(IdentityId::EQ21, 300);
  for (std::size_t i = 0; i < terms.rhs_terms.size(); ++i) {
    CHECK(verify_identity(IdentityId::EQ21, 300, i).status == Status::Fail);
  }
}

TEST_CASE("the k(q) identities") {
  for (auto id : {IdentityId::EQ24, IdentityId::EQ25, IdentityId::EQ26, IdentityId::EQ28}) {
    const auto r = verify_identity(id, 400);
    CHECK_MESSAGE(r.status == Status::Pass, to_string(id));
    CHECK(identity_terms(id, 400).lhs.prec() > 200);
  }
}

TEST_CASE("report JSON shape") {
  const auto good = to_json(verify_identity(IdentityId::EQ21, 100));
  CHECK(good["id"] == "EQ21");
  CHECK(good["order"] == 100);
  CHECK(good["status"] == "pass");
  CHECK(good["witness"].is_null());

  const auto bad = to_json(verify_identity(IdentityId::EQ21, 100, 0));
  CHECK(bad["status"] == "fail");
  CHECK(bad["witness"]["exponent"].is_number());
  CHECK(bad["witness"]["lhs"].is_string());
}

TEST_CASE("small order") {
  CHECK_THROWS_AS(identity_terms(IdentityId::EQ21, 15), std::invalid_argument);
  for (const auto& r : verify_all_identities(16)) CHECK(r.status != Status::Fail);
}
