#include "etalab/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "etalab/eta.hpp"

namespace etalab {

namespace {

struct CatalogEntry {
  IdentityId id;
  const char* name;
  const char* statement;
};

constexpr std::array<CatalogEntry, kAllIdentities.size()> kCatalog{{
    {IdentityId::EQ21, "EQ21", "f2^5/f10 = f1^5/f5 + 5q f1^2 f2 f10^3/f5^2"},
    {IdentityId::EQ22, "EQ22", "f1/f5 = f2 f8 f20^3/(f4 f10^3 f40) - q f4^2 f40/(f8 f10^2)"},
    {IdentityId::EQ23, "EQ23",
     "f1 f5^3 = f2^3 f10 - q f2 f8^2 f20^6/(f4^2 f10 f40^2) + 2q^2 f4 f20^3 - q^3 f4^4 f10 f40^2/(f2 f8^2)"},
    {IdentityId::EQ24, "EQ24", "f2 f5^5/(q f1 f10^5) = 1/k - k"},
    {IdentityId::EQ25, "EQ25", "f2^4 f5^2/(q f1^2 f10^4) = 1/k + 1 - k"},
    {IdentityId::EQ26, "EQ26", "f1^3 f5/(q f2 f10^3) = 1/k - 4 - k"},
    {IdentityId::EQ27, "EQ27", "f2^4 f5^2/(q f1^2 f10^4) - f1^3 f5/(q f2 f10^3) = 5"},
    {IdentityId::EQ28, "EQ28", "f2 f5^5/(q f1 f10^5) = f2^4 f5^2/(q f1^2 f10^4) - 1"},
    {IdentityId::EQ29, "EQ29",
     "f1 f5^3 = f2^3 f10 - q (f10^5/f2) (f2 f8 f20^3/(f4 f10^3 f40) - q f4^2 f40/(f8 f10^2))^2"},
    {IdentityId::NEGQ, "NEGQ", "prod (1 - (-q)^n) = f2^3/(f1 f4)"},
    {IdentityId::L22, "L22", "sum P*(2n+3) q^n = -4 f1^4 f5^4/q - 8 f2^4 f10^4"},
    {IdentityId::EQ210, "EQ210", "sum M(2n+3) q^n = f1^4 f5^4/q - 8 f2^4 f10^4 + 10 f1 f2 f5^3 f10^3"},
    {IdentityId::EQ211, "EQ211", "sum T*(2n+2) q^n = f1^4 f5^4/q + 10 f1 f2 f5^3 f10^3"},
    {IdentityId::EQ212_ODDFREE, "EQ212_ODDFREE",
     "even part of f1^4 f5^4/q^3 + 5 (f2 f10^3/q^2)(four-term f1 f5^3 expansion) = f1^4 f5^4/q - 8 f2^4 f10^4 + "
     "10 f1 f2 f5^3 f10^3"},
    {IdentityId::EQ213_ODDFREE, "EQ213_ODDFREE",
     "even part of f2^4 f10^4/q^2 - 5 (f10^8/q)(two-term f1/f5 expansion)^2 = f1^4 f5^4/q + 10 f1 f2 f5^3 f10^3"},
}};

const CatalogEntry& entry(IdentityId id) {
  const auto& e = kCatalog[static_cast<std::size_t>(id)];
  if (e.id != id) throw std::logic_error("identity catalog out of order");
  return e;
}

// Eta quotient on [0, N) times q^d.
LaurentSeries eta(const EtaQuotient& e, long N, long d = 0) { return shift(expand_quotient(e, N), d); }

// c on the window [lo, hi).
LaurentSeries constant_on(long c, long lo, long hi) { return LaurentSeries::monomial(c, 0, lo, hi); }

LaurentSeries sum(const std::vector<LaurentSeries>& terms) {
  LaurentSeries acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) acc = acc + terms[i];
  return acc;
}

// f2 f8 f20^3/(f4 f10^3 f40) - q f4^2 f40/(f8 f10^2), the 2-dissection of f1/f5.
LaurentSeries f1_over_f5_dissected(long N) {
  return eta({{2, 1}, {8, 1}, {20, 3}, {4, -1}, {10, -3}, {40, -1}}, N) -
         eta({{4, 2}, {40, 1}, {8, -1}, {10, -2}}, N, 1);
}

// The four right-hand terms of the f1 f5^3 dissection.
std::vector<LaurentSeries> f1f5cubed_terms(long N) {
  return {
      eta({{2, 3}, {10, 1}}, N),
      -eta({{2, 1}, {8, 2}, {20, 6}, {4, -2}, {10, -1}, {40, -2}}, N, 1),
      Coefficient(2) * eta({{4, 1}, {20, 3}}, N, 2),
      -eta({{4, 4}, {10, 1}, {40, 2}, {2, -1}, {8, -2}}, N, 3),
  };
}

LaurentSeries pstar_q_inverse(long N) { return eta({{1, 4}, {5, 4}}, N, -1); }
LaurentSeries f2f10_fourth(long N) { return eta({{2, 4}, {10, 4}}, N); }
LaurentSeries mixed_term(long N) { return eta({{1, 1}, {2, 1}, {5, 3}, {10, 3}}, N); }

std::vector<LaurentSeries> m_dissection_rhs(long N) {
  return {pstar_q_inverse(N), Coefficient(-8) * f2f10_fourth(N), Coefficient(10) * mixed_term(N)};
}

std::vector<LaurentSeries> tstar_dissection_rhs(long N) {
  return {pstar_q_inverse(N), Coefficient(10) * mixed_term(N)};
}

// Cross-multiplied form of  E/q = 1/k + c - k  with E an eta quotient:
//   k * E  =  q * D * (1 + c k - k^2),  where D clears E's denominator.
// Here `numer` = k-side factor E * D and `denom` = D.
IdentityTerms k_identity(const EtaQuotient& numer, const EtaQuotient& denom, long c, long N) {
  const auto k = expand_k(N).series;
  const auto qd = eta(denom, N, 1);
  std::vector<LaurentSeries> rhs{qd};
  if (c != 0) rhs.push_back(Coefficient(c) * (qd * k));
  rhs.push_back(-(qd * (k * k)));
  return {k * eta(numer, N), std::move(rhs)};
}

}  // namespace

const char* to_string(IdentityId id) { return entry(id).name; }

const char* statement(IdentityId id) { return entry(id).statement; }

std::optional<IdentityId> parse_identity_id(std::string_view text) {
  for (const auto& e : kCatalog) {
    if (text == e.name) return e.id;
  }
  return std::nullopt;
}

IdentityTerms identity_terms(IdentityId id, long N) {
  if (N < 16) throw std::invalid_argument("identity order must be >= 16");
  switch (id) {
    case IdentityId::EQ21:
      return {eta({{2, 5}, {10, -1}}, N),
              {eta({{1, 5}, {5, -1}}, N), Coefficient(5) * eta({{1, 2}, {2, 1}, {10, 3}, {5, -2}}, N, 1)}};
    case IdentityId::EQ22:
      return {eta({{1, 1}, {5, -1}}, N),
              {eta({{2, 1}, {8, 1}, {20, 3}, {4, -1}, {10, -3}, {40, -1}}, N),
               -eta({{4, 2}, {40, 1}, {8, -1}, {10, -2}}, N, 1)}};
    case IdentityId::EQ23:
      return {eta({{1, 1}, {5, 3}}, N), f1f5cubed_terms(N)};
    case IdentityId::EQ24:
      // f2 f5^5/(q f1 f10^5) = 1/k - k, times q k f1 f10^5.
      return k_identity({{2, 1}, {5, 5}}, {{1, 1}, {10, 5}}, 0, N);
    case IdentityId::EQ25:
      return k_identity({{2, 4}, {5, 2}}, {{1, 2}, {10, 4}}, 1, N);
    case IdentityId::EQ26:
      return k_identity({{1, 3}, {5, 1}}, {{2, 1}, {10, 3}}, -4, N);
    case IdentityId::EQ27: {
      auto lhs = eta({{2, 4}, {5, 2}, {1, -2}, {10, -4}}, N, -1) - eta({{1, 3}, {5, 1}, {2, -1}, {10, -3}}, N, -1);
      auto five = constant_on(5, lhs.offset(), lhs.prec());
      return {std::move(lhs), {std::move(five)}};
    }
    case IdentityId::EQ28: {
      auto lhs = eta({{2, 1}, {5, 5}, {1, -1}, {10, -5}}, N, -1);
      auto minus_one = constant_on(-1, lhs.offset(), lhs.prec());
      return {std::move(lhs), {eta({{2, 4}, {5, 2}, {1, -2}, {10, -4}}, N, -1), std::move(minus_one)}};
    }
    case IdentityId::EQ29: {
      const auto x = f1_over_f5_dissected(N);
      return {eta({{1, 1}, {5, 3}}, N), {eta({{2, 3}, {10, 1}}, N), -(eta({{10, 5}, {2, -1}}, N, 1) * (x * x))}};
    }
    case IdentityId::NEGQ:
      return {negate_variable(expand_f(1, N)), {eta({{2, 3}, {1, -1}, {4, -1}}, N)}};
    case IdentityId::L22:
      return {extract(shift(gen_target(GeneratingTarget::PSTAR, N), -3), 2, 0),
              {Coefficient(-4) * pstar_q_inverse(N), Coefficient(-8) * f2f10_fourth(N)}};
    case IdentityId::EQ210:
      return {extract(shift(gen_target(GeneratingTarget::M, N), -3), 2, 0), m_dissection_rhs(N)};
    case IdentityId::EQ211:
      return {extract(shift(gen_target(GeneratingTarget::TSTAR, N), -2), 2, 0), tstar_dissection_rhs(N)};
    case IdentityId::EQ212_ODDFREE: {
      const auto expansion =
          eta({{1, 4}, {5, 4}}, N, -3) + Coefficient(5) * shift(eta({{2, 1}, {10, 3}}, N) * sum(f1f5cubed_terms(N)), -2);
      return {extract(expansion, 2, 0), m_dissection_rhs(N)};
    }
    case IdentityId::EQ213_ODDFREE: {
      const auto x = f1_over_f5_dissected(N);
      const auto expansion =
          eta({{2, 4}, {10, 4}}, N, -2) - Coefficient(5) * shift(eta({{10, 8}}, N) * (x * x), -1);
      return {extract(expansion, 2, 0), tstar_dissection_rhs(N)};
    }
  }
  throw std::invalid_argument("unknown identity");
}

std::pair<LaurentSeries, LaurentSeries> identity_sides(IdentityId id, long N, std::optional<std::size_t> flipped_term) {
  auto terms = identity_terms(id, N);
  if (flipped_term) {
    if (*flipped_term >= terms.rhs_terms.size()) throw std::out_of_range("flipped term index out of range");
    auto& t = terms.rhs_terms[*flipped_term];
    t = -t;
  }
  auto rhs = sum(terms.rhs_terms);
  auto& lhs = terms.lhs;
  const long lo = std::min(lhs.offset(), rhs.offset());
  const long hi = std::min(lhs.prec(), rhs.prec());
  if (hi <= lo) return {std::move(lhs), std::move(rhs)};
  return {restrict_window(lhs, lo, hi), restrict_window(rhs, lo, hi)};
}

IdentityReport verify_identity(IdentityId id, long N, std::optional<std::size_t> flipped_term) {
  IdentityReport report{id, N, Status::InsufficientPrecision, std::nullopt};
  try {
    const auto [lhs, rhs] = identity_sides(id, N, flipped_term);
    const auto cmp = eq_on(lhs, rhs, N / 2);
    switch (cmp.status) {
      case Agreement::Equal:
        report.status = Status::Pass;
        break;
      case Agreement::Mismatch:
        report.status = Status::Fail;
        report.witness = cmp.witness;
        break;
      case Agreement::InsufficientPrecision:
        break;
    }
  } catch (const SeriesError&) {
    report.status = Status::InsufficientPrecision;
  }
  return report;
}

std::vector<IdentityReport> verify_all_identities(long N) {
  std::vector<IdentityReport> out;
  out.reserve(kAllIdentities.size());
  for (auto id : kAllIdentities) out.push_back(verify_identity(id, N));
  return out;
}

}  // namespace etalab
