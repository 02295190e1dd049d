#pragma once

// Eta quotients prod f_m^{e_m}, f_m = prod_{n>=1} (1 - q^{mn}), normalized
// without the q^{m/24} prefactor so each product has constant term 1.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "etalab/series.hpp"

namespace etalab {

class EtaParseError : public std::invalid_argument {
 public:
  EtaParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EtaQuotient {
 public:
  using Factors = std::map<long, long>;

  EtaQuotient() = default;
  /// Pairs are (period, exponent). Periods must be distinct and >= 1,
  /// exponents nonzero.
  EtaQuotient(std::initializer_list<std::pair<const long, long>> factors);
  explicit EtaQuotient(Factors factors);

  /// Parses `f1^-1*f2^5*f5^5*f10^-1`. A bare `fm` means exponent 1 and `1`
  /// is the empty product.
  static EtaQuotient parse(std::string_view text);

  const Factors& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  /// Product of quotients; exponents add and cancelled factors disappear.
  EtaQuotient operator*(const EtaQuotient& other) const;
  EtaQuotient inverse() const;

  std::string to_string() const;

  bool operator==(const EtaQuotient&) const = default;

 private:
  Factors factors_;
};

enum class GeneratingTarget { M, TSTAR, PSTAR, EULER_P };

const char* to_string(GeneratingTarget t);
EtaQuotient definition(GeneratingTarget t);

/// f_m on [0, N) from the pentagonal number theorem with q -> q^m.
LaurentSeries expand_f(long m, long N);

using FExpander = std::function<LaurentSeries(long m, long N)>;

/// prod f_m^{e_m} on [0, N). Positive and negative parts are formed
/// separately by repeated squaring; the negative part is inverted once.
LaurentSeries expand_quotient(const EtaQuotient& e, long N);
LaurentSeries expand_quotient(const EtaQuotient& e, long N, const FExpander& f);

/// Generating function of M(n), T*(n), P*(n) or p(n) on [0, N).
LaurentSeries gen_target(GeneratingTarget t, long N);

/// Ramanujan's function
///   k(q) = q prod (1-q^{10n-9})(1-q^{10n-8})(1-q^{10n-2})(1-q^{10n-1})
///              / ((1-q^{10n-7})(1-q^{10n-6})(1-q^{10n-4})(1-q^{10n-3})).
struct KSeries {
  LaurentSeries series;  // window [1, N), leading term q
};

KSeries expand_k(long N);

/// Memoizes gen_target by (target, order). Entries are immutable once built.
class TargetCache {
 public:
  std::shared_ptr<const LaurentSeries> get(GeneratingTarget t, long N);

 private:
  std::mutex mu_;
  std::map<std::pair<GeneratingTarget, long>, std::shared_ptr<const LaurentSeries>> entries_;
};

}  // namespace etalab
