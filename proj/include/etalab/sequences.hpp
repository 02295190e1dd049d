#pragma once

// The coefficient sequences of the 2-power dissections of M, T* and P*:
//
//   P_k = -4 P_{k-1} - 8 P_{k-2} + 5 * 2^{k-1}   (A: P_0 = P_1 = 1; B: P_0 = 0, P_1 = 1)
//   C_k = -4 C_{k-1} - 8 C_{k-2}                 (C_0 = 1, C_1 = -4)

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "etalab/series.hpp"

namespace etalab {

enum class Family { A, B, C };

const char* to_string(Family f);

struct SequenceFamily {
  Family tag;
  Coefficient initial0;
  Coefficient initial1;
  bool inhomogeneous;

  static SequenceFamily of(Family tag);
};

/// Memoized P_k. Safe to call from several threads.
Coefficient seq_value(Family f, long k);

/// Same recurrence evaluated from scratch, bypassing the memo table.
Coefficient seq_value_uncached(const SequenceFamily& f, long k);

/// (-64)^{floor(k/4)} * {1, -4, 8, 0}[k mod 4].
Coefficient closed_form_C(long k);

struct SequenceCheck {
  std::string description;
  bool passed;
  std::optional<long> first_failure_k;
  std::string detail;
};

/// v2(P_k) == k - 1 exactly for 1 <= k <= kmax and P in {A, B}.
SequenceCheck verify_valuations(long kmax);

/// C_k == closed_form_C(k) for 0 <= k <= kmax, and C_{k+4} + 64 C_k == 0
/// for 0 <= k <= kmax - 4.
SequenceCheck verify_closed_forms(long kmax);

}  // namespace etalab
