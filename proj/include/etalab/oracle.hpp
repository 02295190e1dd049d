#pragma once

// Brute-force recomputation paths. Nothing in here calls expand_f or inverts
// f_1; the functions below only multiply sparse binomials and geometric
// series, or count partitions directly.

#include <optional>
#include <string>
#include <vector>

#include "etalab/eta.hpp"
#include "etalab/series.hpp"

namespace etalab::oracle {

struct PartitionTable {
  std::vector<Coefficient> values;  // values[n] = p(n)
};

/// p(n) for 0 <= n < N by accumulating parts 1, 2, ..., N-1.
PartitionTable partition_dp(long N);

/// prod (1 - q^{mn})^{e_m} on [0, N), one binomial or geometric factor at a time.
LaurentSeries direct_eta_product(const EtaQuotient& e, long N);

/// k(q) on [1, N) from the same factor-by-factor products.
LaurentSeries direct_k_product(long N);

struct CheckResult {
  std::string name;
  bool passed;
  std::optional<Mismatch> witness;
};

struct CrossCheckReport {
  long order;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Compares the pentagonal pipeline (`f` defaults to expand_f) against the
/// direct products and the partition table. Also checks the mod 5, 7, 11
/// partition congruences on the table itself.
CrossCheckReport cross_check(long N);
CrossCheckReport cross_check(long N, const FExpander& f);

}  // namespace etalab::oracle
