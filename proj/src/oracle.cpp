#include "etalab/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace etalab::oracle {

namespace {

// In-place multiplication by (1 - q^d), truncated at c.size().
void times_binomial(std::vector<Coefficient>& c, long d) {
  for (long n = static_cast<long>(c.size()) - 1; n >= d; --n) c[n] -= c[n - d];
}

// Multiplication by the truncated geometric series sum_{j>=0} q^{dj}, formed
// as an explicit convolution into a fresh buffer.
void times_geometric(std::vector<Coefficient>& c, long d) {
  const long len = static_cast<long>(c.size());
  std::vector<Coefficient> out(len);
  for (long i = 0; i < len; ++i) {
    if (sgn(c[i]) == 0) continue;
    for (long n = i; n < len; n += d) out[n] += c[i];
  }
  c.swap(out);
}

CheckResult compare(std::string name, const LaurentSeries& a, const LaurentSeries& b) {
  auto cmp = eq_on(a, b, 1);
  return {std::move(name), cmp.status == Agreement::Equal, cmp.witness};
}

}  // namespace

PartitionTable partition_dp(long N) {
  if (N < 1) throw std::invalid_argument("partition_dp: order must be >= 1");
  std::vector<Coefficient> dp(N);
  dp[0] = 1;
  for (long part = 1; part < N; ++part) {
    for (long n = part; n < N; ++n) dp[n] += dp[n - part];
  }
  return {std::move(dp)};
}

LaurentSeries direct_eta_product(const EtaQuotient& e, long N) {
  if (N < 1) throw std::invalid_argument("direct_eta_product: order must be >= 1");
  std::vector<Coefficient> c(N);
  c[0] = 1;
  for (const auto& [m, exp] : e.factors()) {
    for (long n = 1; m * n < N; ++n) {
      const long d = m * n;
      if (exp > 0) {
        for (long i = 0; i < exp; ++i) times_binomial(c, d);
      } else {
        for (long i = 0; i < -exp; ++i) times_geometric(c, d);
      }
    }
  }
  return LaurentSeries(0, std::move(c));
}

LaurentSeries direct_k_product(long N) {
  if (N < 2) throw std::invalid_argument("direct_k_product: order must be >= 2");
  std::vector<Coefficient> c(N - 1);
  c[0] = 1;
  for (long n = 1;; ++n) {
    const long base = 10 * n;
    if (base - 9 >= N - 1) break;
    for (long r : {9L, 8L, 2L, 1L}) {
      if (base - r < N - 1) times_binomial(c, base - r);
    }
    for (long r : {7L, 6L, 4L, 3L}) {
      if (base - r < N - 1) times_geometric(c, base - r);
    }
  }
  return LaurentSeries(1, std::move(c));
}

bool CrossCheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CrossCheckReport cross_check(long N) { return cross_check(N, expand_f); }

CrossCheckReport cross_check(long N, const FExpander& f) {
  if (N < 16) throw std::invalid_argument("cross_check: order must be >= 16");
  CrossCheckReport report{N, {}};
  auto& out = report.checks;

  for (long m : {1L, 2L, 4L, 5L, 8L, 10L, 20L, 40L}) {
    out.push_back(compare("f" + std::to_string(m), f(m, N), direct_eta_product({{m, 1}}, N)));
  }
  for (auto t : {GeneratingTarget::M, GeneratingTarget::TSTAR, GeneratingTarget::PSTAR, GeneratingTarget::EULER_P}) {
    const auto def = definition(t);
    out.push_back(compare(std::string("target ") + to_string(t), expand_quotient(def, N, f),
                          direct_eta_product(def, N)));
  }

  const auto table = partition_dp(N);
  const LaurentSeries partitions(0, table.values);
  out.push_back(compare("1/f1 vs partition table", invert(f(1, N), N), partitions));
  out.push_back(compare("direct 1/f1 vs partition table", direct_eta_product({{1, -1}}, N), partitions));
  out.push_back(compare("k(q)", expand_k(N).series, direct_k_product(N)));

  struct Ramanujan {
    long modulus;
    long residue;
  };
  for (auto [mod, res] : {Ramanujan{5, 4}, Ramanujan{7, 5}, Ramanujan{11, 6}}) {
    CheckResult r{"p(" + std::to_string(mod) + "n+" + std::to_string(res) + ") = 0 mod " + std::to_string(mod), true,
                  std::nullopt};
    for (long n = res; n < N; n += mod) {
      if (mpz_divisible_ui_p(table.values[n].get_mpz_t(), mod) == 0) {
        r.passed = false;
        r.witness = Mismatch{n, table.values[n], Coefficient(table.values[n] % mod)};
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return report;
}

}  // namespace etalab::oracle
