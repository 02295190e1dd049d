#include "etalab/sequences.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace etalab {

const char* to_string(Family f) {
  switch (f) {
    case Family::A:
      return "A";
    case Family::B:
      return "B";
    case Family::C:
      return "C";
  }
  return "?";
}

SequenceFamily SequenceFamily::of(Family tag) {
  switch (tag) {
    case Family::A:
      return {tag, 1, 1, true};
    case Family::B:
      return {tag, 0, 1, true};
    case Family::C:
      return {tag, 1, -4, false};
  }
  throw std::invalid_argument("unknown sequence family");
}

namespace {

// Extends `values` in place until it holds P_0..P_k.
void extend(const SequenceFamily& f, std::vector<Coefficient>& values, long k) {
  if (values.empty()) {
    values.push_back(f.initial0);
    values.push_back(f.initial1);
  }
  while (static_cast<long>(values.size()) <= k) {
    const long n = static_cast<long>(values.size());
    Coefficient next = -4 * values[n - 1] - 8 * values[n - 2];
    if (f.inhomogeneous) {
      Coefficient pow2;
      mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n - 1);
      next += 5 * pow2;
    }
    values.push_back(std::move(next));
  }
}

struct Memo {
  std::mutex mu;
  std::array<std::vector<Coefficient>, 3> values;
};

Memo& memo() {
  static Memo m;
  return m;
}

}  // namespace

Coefficient seq_value(Family f, long k) {
  if (k < 0) throw std::invalid_argument("seq_value: index must be >= 0");
  auto& m = memo();
  std::lock_guard lock(m.mu);
  auto& values = m.values[static_cast<std::size_t>(f)];
  extend(SequenceFamily::of(f), values, k);
  return values[k];
}

Coefficient seq_value_uncached(const SequenceFamily& f, long k) {
  if (k < 0) throw std::invalid_argument("seq_value: index must be >= 0");
  std::vector<Coefficient> values;
  extend(f, values, k);
  return values[k];
}

Coefficient closed_form_C(long k) {
  if (k < 0) throw std::invalid_argument("closed_form_C: index must be >= 0");
  static constexpr std::array<long, 4> kBase{1, -4, 8, 0};
  Coefficient p;
  mpz_ui_pow_ui(p.get_mpz_t(), 64, k / 4);
  if ((k / 4) % 2 == 1) p = -p;
  return kBase[k % 4] * p;
}

SequenceCheck verify_valuations(long kmax) {
  if (kmax < 2) throw std::invalid_argument("verify_valuations: kmax must be >= 2");
  SequenceCheck r{"v2(A_k) = v2(B_k) = k - 1 for 1 <= k <= " + std::to_string(kmax), true, std::nullopt, ""};
  for (long k = 1; k <= kmax; ++k) {
    for (Family f : {Family::A, Family::B}) {
      const auto value = seq_value(f, k);
      const auto v = two_adic_valuation(value);
      if (v != static_cast<Valuation>(k - 1)) {
        r.passed = false;
        r.first_failure_k = k;
        r.detail = std::string(to_string(f)) + "_" + std::to_string(k) + " = " + value.get_str() +
                   " has v2 = " + valuation_string(v);
        return r;
      }
    }
  }
  return r;
}

SequenceCheck verify_closed_forms(long kmax) {
  if (kmax < 8) throw std::invalid_argument("verify_closed_forms: kmax must be >= 8");
  SequenceCheck r{"C_k matches its closed form and C_{k+4} + 64 C_k = 0 up to k = " + std::to_string(kmax), true,
                  std::nullopt, ""};
  for (long k = 0; k <= kmax; ++k) {
    const auto rec = seq_value(Family::C, k);
    const auto closed = closed_form_C(k);
    if (rec != closed) {
      r.passed = false;
      r.first_failure_k = k;
      r.detail = "recurrence " + rec.get_str() + " vs closed form " + closed.get_str();
      return r;
    }
    if (k + 4 <= kmax) {
      const Coefficient tele = seq_value(Family::C, k + 4) + 64 * rec;
      if (sgn(tele) != 0) {
        r.passed = false;
        r.first_failure_k = k;
        r.detail = "C_{k+4} + 64 C_k = " + tele.get_str();
        return r;
      }
    }
  }
  return r;
}

}  // namespace etalab
