#pragma once

// 2-power dissections of M, T*, P* and the congruence families they imply.
//
// For k >= 1 the progression 2^k n + r_k (r_k = 2^{k+1} - 1 for M and P*,
// 2^{k+1} - 2 for T*), n >= -1, has generating function
//
//   P_k f1^4 f5^4 / q  -  8 P_{k-1} f2^4 f10^4  +  t_k f1 f2 f5^3 f10^3
//
// with P = A, B, C respectively and t_k = 5 * 2^k for M and T*, 0 for P*.

#include <optional>
#include <string>
#include <vector>

#include "etalab/eta.hpp"
#include "etalab/sequences.hpp"
#include "etalab/series.hpp"
#include "etalab/status.hpp"

namespace etalab {

struct DissectionClaim {
  GeneratingTarget target;  // M, TSTAR or PSTAR
  long k;                   // >= 1

  long step() const;
  long residue() const;
  Family family() const;
  std::string describe() const;
};

struct DissectionCoefficients {
  Coefficient lead;      // P_k
  Coefficient previous;  // P_{k-1}
  Coefficient tail;      // 5 * 2^k, or 0 for P*
};

DissectionCoefficients dissection_coefficients(const DissectionClaim& d);

/// Right side above on [-1, N-1).
LaurentSeries rhs_series(const DissectionClaim& d, long N);
LaurentSeries rhs_series(const DissectionCoefficients& c, long N);

/// sum_{n>=-1} target(2^k n + r_k) q^n read off gen_target(target, N).
LaurentSeries lhs_series(const DissectionClaim& d, long N);
LaurentSeries lhs_series(const DissectionClaim& d, long N, TargetCache& cache);

struct Counterexample {
  long n;
  Coefficient value;
  std::optional<Coefficient> expected;
  Valuation valuation;
};

struct VerificationReport {
  std::string claim;
  long order = 0;
  long n_lo = 0;  // inclusive range of n actually checked
  long n_hi = -1;
  long points() const { return n_hi >= n_lo ? n_hi - n_lo + 1 : 0; }
  Status status = Status::InsufficientPrecision;
  std::optional<Counterexample> counterexample;
  std::string note;
};

/// Compares lhs_series and rhs_series with min_overlap N / 2^{k+1}. At k = 2
/// for M and T* the note records which A_2/B_2 labeling the series supports.
VerificationReport verify_dissection(const DissectionClaim& d, long N, TargetCache& cache);
/// Same comparison against caller-supplied coefficients.
VerificationReport verify_dissection(const DissectionClaim& d, long N, TargetCache& cache,
                                     const DissectionCoefficients& coefficients);

/// Even part of rhs_series(k) / q^2 equals rhs_series(k + 1).
VerificationReport verify_induction_step(const DissectionClaim& d, long N);

struct CongruenceClaim {
  GeneratingTarget target;
  long step_log2;
  long residue;
  std::optional<Valuation> required_valuation;  // nullopt: coefficient must be exactly 0
  std::string label;

  bool exact_zero() const { return !required_valuation; }
};

/// M(2^k n + 2^{k+1} - 1) and T*(2^k n + 2^{k+1} - 2) divisible by 2^{k-1}, k >= 1.
std::vector<CongruenceClaim> mt_congruences(long k);

/// The five P* families at level k >= 0: step exponents 4k..4k+4 with
/// valuations 6k, 6k+2, 6k+3, 6k+6 and an identically vanishing progression.
std::vector<CongruenceClaim> pstar_congruences(long k);

/// True if some n >= -1 gives an index in [0, N).
bool reachable(const CongruenceClaim& c, long N);

/// Checks every n >= -1 whose index lies in [0, N). Fewer than `min_points`
/// checked values is reported as insufficient precision.
VerificationReport verify_congruence(const CongruenceClaim& c, long N, TargetCache& cache, long min_points = 1);

/// The vanishing P* family at level k via the series route: the level-(4k+3)
/// right side is (-64)^{k+1} f2^4 f10^4, whose coefficients at exponents
/// of parity `parity_residue` (1 in the true statement) vanish. Cross-checked
/// against verify_congruence on the same family.
VerificationReport verify_zero_family_structurally(long k, long N, TargetCache& cache, long parity_residue = 1);

}  // namespace etalab
