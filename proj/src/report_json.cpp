#include "etalab/report_json.hpp"

namespace etalab {

using nlohmann::json;

namespace {

json witness_json(const std::optional<Mismatch>& w) {
  if (!w) return nullptr;
  return {{"exponent", w->exponent}, {"lhs", w->lhs.get_str()}, {"rhs", w->rhs.get_str()}};
}

}  // namespace

json to_json(const IdentityReport& r) {
  return {{"id", to_string(r.id)}, {"order", r.order}, {"status", to_string(r.status)}, {"witness", witness_json(r.witness)}};
}

json to_json(const VerificationReport& r) {
  json j{{"claim", r.claim},
         {"order", r.order},
         {"status", to_string(r.status)},
         {"n_range", r.points() > 0 ? json::array({r.n_lo, r.n_hi}) : json(nullptr)},
         {"points", r.points()}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"n", c.n},
                           {"value", c.value.get_str()},
                           {"expected", c.expected ? json(c.expected->get_str()) : json(nullptr)},
                           {"v2", valuation_string(c.valuation)}};
  } else {
    j["counterexample"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const SequenceCheck& r) {
  json j{{"claim", r.description}, {"status", r.passed ? "pass" : "fail"}};
  j["first_failure_k"] = r.first_failure_k ? json(*r.first_failure_k) : json(nullptr);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json to_json(const oracle::CrossCheckReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", witness_json(c.witness)}});
  }
  return {{"order", r.order}, {"status", r.passed() ? "pass" : "fail"}, {"checks", std::move(checks)}};
}

}  // namespace etalab
