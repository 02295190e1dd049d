#pragma once

// JSON encodings of verification reports. Big integers are decimal strings.

#include <json.hpp>

#include "etalab/congruence.hpp"
#include "etalab/identities.hpp"
#include "etalab/oracle.hpp"
#include "etalab/sequences.hpp"

namespace etalab {

/// {id, order, status, witness: {exponent, lhs, rhs} | null}
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const SequenceCheck& r);
nlohmann::json to_json(const oracle::CrossCheckReport& r);

}  // namespace etalab
