#include "etalab/congruence.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace etalab {

namespace {

constexpr long kMaxStepLog2 = 62;

Coefficient pow2(long e) {
  Coefficient p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return p;
}

void require_dissection_target(GeneratingTarget t) {
  if (t == GeneratingTarget::EULER_P) throw std::invalid_argument("dissection target must be M, T* or P*");
}

std::string progression(GeneratingTarget t, long step, long residue) {
  std::ostringstream os;
  os << to_string(t) << '(';
  if (step != 1) os << step;
  os << 'n';
  if (residue != 0) os << (residue < 0 ? " - " : " + ") << std::abs(residue);
  os << ')';
  return os.str();
}

Status status_of(Agreement a) {
  switch (a) {
    case Agreement::Equal:
      return Status::Pass;
    case Agreement::Mismatch:
      return Status::Fail;
    case Agreement::InsufficientPrecision:
      return Status::InsufficientPrecision;
  }
  return Status::InsufficientPrecision;
}

void record(VerificationReport& r, const Comparison& cmp) {
  r.status = status_of(cmp.status);
  r.n_lo = cmp.lo;
  r.n_hi = cmp.hi - 1;
  if (cmp.witness) {
    r.counterexample =
        Counterexample{cmp.witness->exponent, cmp.witness->lhs, cmp.witness->rhs, two_adic_valuation(cmp.witness->lhs)};
  }
}

// Pass only if every part passes; any failure wins over missing precision.
Status combine(std::initializer_list<Status> parts) {
  Status out = Status::Pass;
  for (auto s : parts) {
    if (s == Status::Fail) return Status::Fail;
    if (s == Status::InsufficientPrecision) out = s;
  }
  return out;
}

}  // namespace

long DissectionClaim::step() const {
  if (k < 1 || k > kMaxStepLog2 - 1) throw std::invalid_argument("dissection level out of range");
  return 1L << k;
}

long DissectionClaim::residue() const {
  require_dissection_target(target);
  const long r = 2 * step() - 1;
  return target == GeneratingTarget::TSTAR ? r - 1 : r;
}

Family DissectionClaim::family() const {
  switch (target) {
    case GeneratingTarget::M:
      return Family::A;
    case GeneratingTarget::TSTAR:
      return Family::B;
    case GeneratingTarget::PSTAR:
      return Family::C;
    case GeneratingTarget::EULER_P:
      break;
  }
  throw std::invalid_argument("dissection target must be M, T* or P*");
}

std::string DissectionClaim::describe() const {
  return "sum " + progression(target, step(), residue()) + " q^n, k=" + std::to_string(k);
}

DissectionCoefficients dissection_coefficients(const DissectionClaim& d) {
  const auto f = d.family();
  return {seq_value(f, d.k), seq_value(f, d.k - 1), f == Family::C ? Coefficient(0) : Coefficient(5 * pow2(d.k))};
}

LaurentSeries rhs_series(const DissectionClaim& d, long N) { return rhs_series(dissection_coefficients(d), N); }

LaurentSeries rhs_series(const DissectionCoefficients& c, long N) {
  const auto lead = shift(expand_quotient({{1, 4}, {5, 4}}, N), -1);
  const auto middle = expand_quotient({{2, 4}, {10, 4}}, N);
  auto out = c.lead * lead + Coefficient(-8 * c.previous) * middle;
  if (sgn(c.tail) != 0) out = out + c.tail * expand_quotient({{1, 1}, {2, 1}, {5, 3}, {10, 3}}, N);
  return out;
}

LaurentSeries lhs_series(const DissectionClaim& d, long N) {
  return extract(gen_target(d.target, N), d.step(), d.residue());
}

LaurentSeries lhs_series(const DissectionClaim& d, long N, TargetCache& cache) {
  return extract(*cache.get(d.target, N), d.step(), d.residue());
}

VerificationReport verify_dissection(const DissectionClaim& d, long N, TargetCache& cache,
                                     const DissectionCoefficients& coefficients) {
  VerificationReport r;
  r.claim = d.describe();
  r.order = N;
  std::optional<LaurentSeries> lhs;
  try {
    lhs = lhs_series(d, N, cache);
  } catch (const SeriesError&) {
    r.note = "no coefficient of the progression lies below the order";
    return r;
  }
  // The right side only needs to reach the top of the extracted window.
  const auto rhs = rhs_series(coefficients, std::max(2L, lhs->prec() + 1));
  const long min_overlap = std::max(1L, N >> (d.k + 1));
  record(r, eq_on(*lhs, rhs, min_overlap));
  return r;
}

VerificationReport verify_dissection(const DissectionClaim& d, long N, TargetCache& cache) {
  auto r = verify_dissection(d, N, cache, dissection_coefficients(d));
  if (d.k == 2 && d.target != GeneratingTarget::PSTAR) {
    // The swapped labeling exchanges A_2 and B_2; only the lead changes.
    auto swapped = dissection_coefficients(d);
    swapped.lead = seq_value(d.target == GeneratingTarget::M ? Family::B : Family::A, 2);
    const auto alt = verify_dissection(d, N, cache, swapped);
    const auto a2 = seq_value(Family::A, 2).get_str();
    const auto b2 = seq_value(Family::B, 2).get_str();
    std::ostringstream note;
    note << "A/B labeling: recurrence values (A_2=" << a2 << ", B_2=" << b2 << ") "
         << (r.status == Status::Pass ? "consistent" : "inconsistent") << "; swapped values (A_2=" << b2
         << ", B_2=" << a2 << ") " << (alt.status == Status::Pass ? "consistent" : "inconsistent");
    r.note = note.str();
  }
  return r;
}

VerificationReport verify_induction_step(const DissectionClaim& d, long N) {
  VerificationReport r;
  const DissectionClaim next{d.target, d.k + 1};
  r.claim = "even part of (" + d.describe() + ")/q^2 = level " + std::to_string(next.k);
  r.order = N;
  try {
    const auto stepped = extract(shift(rhs_series(d, N), -2), 2, 0);
    record(r, eq_on(stepped, rhs_series(next, N), std::max(1L, N / 4)));
  } catch (const SeriesError&) {
    r.status = Status::InsufficientPrecision;
  }
  return r;
}

std::vector<CongruenceClaim> mt_congruences(long k) {
  if (k < 1 || k >= kMaxStepLog2) throw std::invalid_argument("level must satisfy 1 <= k < 62");
  std::vector<CongruenceClaim> out;
  const long step = 1L << k;
  const auto mod = " = 0 mod 2^" + std::to_string(k - 1);
  out.push_back({GeneratingTarget::M, k, 2 * step - 1, static_cast<Valuation>(k - 1),
                 progression(GeneratingTarget::M, step, 2 * step - 1) + mod});
  out.push_back({GeneratingTarget::TSTAR, k, 2 * step - 2, static_cast<Valuation>(k - 1),
                 progression(GeneratingTarget::TSTAR, step, 2 * step - 2) + mod});
  return out;
}

std::vector<CongruenceClaim> pstar_congruences(long k) {
  if (k < 0 || 4 * k + 4 >= kMaxStepLog2) throw std::invalid_argument("level must satisfy 0 <= k <= 14");
  std::vector<CongruenceClaim> out;
  const auto P = GeneratingTarget::PSTAR;
  for (long r = 0; r < 4; ++r) {
    static constexpr long kExtra[4] = {0, 2, 3, 6};
    const long s = 4 * k + r;
    const long step = 1L << s;
    const long val = 6 * k + kExtra[r];
    out.push_back({P, s, 2 * step - 1, static_cast<Valuation>(val),
                   progression(P, step, 2 * step - 1) + " = 0 mod 2^" + std::to_string(val)});
  }
  const long s = 4 * k + 4;
  const long residue = 3 * (1L << (4 * k + 3)) - 1;
  out.push_back({P, s, residue, std::nullopt, progression(P, 1L << s, residue) + " = 0"});
  return out;
}

bool reachable(const CongruenceClaim& c, long N) {
  if (c.step_log2 >= kMaxStepLog2) return false;
  const long step = 1L << c.step_log2;
  const long first = std::max(-1L, ceil_div(-c.residue, step));
  return step * first + c.residue < N;
}

VerificationReport verify_congruence(const CongruenceClaim& c, long N, TargetCache& cache, long min_points) {
  VerificationReport r;
  r.claim = c.label;
  r.order = N;
  if (!reachable(c, N)) {
    r.note = "no coefficient of the progression lies below the order";
    return r;
  }
  const auto series = cache.get(c.target, N);
  const long step = 1L << c.step_log2;
  const long first = std::max(-1L, ceil_div(-c.residue, step));
  r.n_lo = first;
  r.status = Status::Pass;
  for (long n = first;; ++n) {
    const long idx = step * n + c.residue;
    if (idx >= N) break;
    r.n_hi = n;
    const auto& value = series->coeffs()[idx];
    const auto v = two_adic_valuation(value);
    const bool ok = c.exact_zero() ? sgn(value) == 0 : v >= *c.required_valuation;
    if (!ok && !r.counterexample) {
      r.status = Status::Fail;
      r.counterexample = Counterexample{n, value, std::nullopt, v};
    }
  }
  if (r.status == Status::Pass && r.points() < min_points) {
    r.status = Status::InsufficientPrecision;
    r.note = "only " + std::to_string(r.points()) + " values below the order";
  }
  return r;
}

VerificationReport verify_zero_family_structurally(long k, long N, TargetCache& cache, long parity_residue) {
  const auto family = pstar_congruences(k);
  const auto& zero_claim = family.back();
  const DissectionClaim level{GeneratingTarget::PSTAR, 4 * k + 3};

  VerificationReport r;
  r.claim = zero_claim.label + " (series route)";
  r.order = N;

  const long order = std::max(16L, (N >> level.k) + 2);

  // Level 4k+3 right side is (-64)^{k+1} f2^4 f10^4 with no q^{-1} term.
  const auto rhs = rhs_series(level, order);
  Coefficient scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 64, static_cast<unsigned long>(k + 1));
  if (k % 2 == 0) scale = -scale;
  const auto f2f10 = expand_quotient({{2, 4}, {10, 4}}, order);
  const auto expected = restrict_window(scale * f2f10, rhs.offset(), rhs.prec());
  const auto form = eq_on(rhs, expected, 1);

  // Exponents of the chosen parity in f2^4 f10^4 must all vanish.
  const auto parity = extract(f2f10, 2, parity_residue);
  Status parity_status = Status::Pass;
  for (long n = parity.offset(); n < parity.prec(); ++n) {
    const auto& c = parity.coeffs()[n - parity.offset()];
    if (sgn(c) != 0) {
      parity_status = Status::Fail;
      r.counterexample = Counterexample{n, c, Coefficient(0), two_adic_valuation(c)};
      break;
    }
  }

  const auto tie = verify_dissection(level, N, cache);
  const auto direct = verify_congruence(zero_claim, N, cache);
  r.n_lo = direct.n_lo;
  r.n_hi = direct.n_hi;

  const auto structural = combine({status_of(form.status), parity_status, tie.status});
  r.status = combine({structural, direct.status});
  if (!r.counterexample && form.witness) {
    r.counterexample = Counterexample{form.witness->exponent, form.witness->lhs, form.witness->rhs,
                                      two_adic_valuation(form.witness->lhs)};
  }
  if (!r.counterexample && direct.counterexample) r.counterexample = direct.counterexample;

  std::ostringstream note;
  note << "right-side form " << to_string(status_of(form.status)) << ", parity " << to_string(parity_status)
       << ", level-" << level.k << " dissection " << to_string(tie.status) << ", direct count "
       << to_string(direct.status) << "; routes " << (structural == direct.status ? "agree" : "disagree");
  r.note = note.str();
  return r;
}

}  // namespace etalab
