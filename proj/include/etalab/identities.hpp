#pragma once

// Catalog of the eta-quotient identities behind the 2-dissections of M, T*
// and P*, each checked as an exact equality of truncated series.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "etalab/series.hpp"
#include "etalab/status.hpp"

namespace etalab {

enum class IdentityId {
  EQ21,
  EQ22,
  EQ23,
  EQ24,
  EQ25,
  EQ26,
  EQ27,
  EQ28,
  EQ29,
  NEGQ,
  L22,
  EQ210,
  EQ211,
  EQ212_ODDFREE,
  EQ213_ODDFREE,
};

inline constexpr std::array kAllIdentities{
    IdentityId::EQ21,  IdentityId::EQ22,  IdentityId::EQ23,          IdentityId::EQ24,         IdentityId::EQ25,
    IdentityId::EQ26,  IdentityId::EQ27,  IdentityId::EQ28,          IdentityId::EQ29,         IdentityId::NEGQ,
    IdentityId::L22,   IdentityId::EQ210, IdentityId::EQ211,         IdentityId::EQ212_ODDFREE, IdentityId::EQ213_ODDFREE,
};

const char* to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view text);

/// One-line statement of the identity in f_m notation.
const char* statement(IdentityId id);

/// Left side and the individual right-hand terms, each on its own window.
struct IdentityTerms {
  LaurentSeries lhs;
  std::vector<LaurentSeries> rhs_terms;
};

IdentityTerms identity_terms(IdentityId id, long N);

/// Both sides restricted to their common window. `flipped_term` negates one
/// right-hand term (a negative control).
std::pair<LaurentSeries, LaurentSeries> identity_sides(IdentityId id, long N,
                                                       std::optional<std::size_t> flipped_term = std::nullopt);

struct IdentityReport {
  IdentityId id;
  long order;
  Status status;
  std::optional<Mismatch> witness;
};

/// Passes iff the sides agree on a common window of at least N/2 exponents.
IdentityReport verify_identity(IdentityId id, long N, std::optional<std::size_t> flipped_term = std::nullopt);

std::vector<IdentityReport> verify_all_identities(long N);

}  // namespace etalab
