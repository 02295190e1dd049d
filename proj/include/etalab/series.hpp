#pragma once

// Truncated Laurent series with arbitrary-precision integer coefficients.
//
// A LaurentSeries is a window [offset, prec) of exact coefficients. Every
// exponent below the offset is zero; nothing is claimed at or above prec.
// Operations propagate the window so that every coefficient they report is
// exact given the inputs' windows.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace etalab {

using Coefficient = mpz_class;

enum class SeriesErrc {
  EmptyWindow,
  NonUnitLeadingCoefficient,
  AllZeroWindow,
  InsufficientPrecision,
};

const char* to_string(SeriesErrc code);

class SeriesError : public std::runtime_error {
 public:
  SeriesError(SeriesErrc code, const std::string& what);
  SeriesErrc code() const noexcept { return code_; }

 private:
  SeriesErrc code_;
};

class LaurentSeries {
 public:
  /// Takes ownership of `coeffs`, where coeffs[i] is the coefficient of
  /// q^(offset + i). Throws EmptyWindow when `coeffs` is empty.
  LaurentSeries(long offset, std::vector<Coefficient> coeffs);

  static LaurentSeries zero(long offset, long prec);
  /// c * q^exponent on the window [offset, prec); exponent may lie outside it.
  static LaurentSeries monomial(const Coefficient& c, long exponent, long offset, long prec);
  static LaurentSeries constant(const Coefficient& c, long prec) { return monomial(c, 0, 0, prec); }

  long offset() const noexcept { return offset_; }
  long prec() const noexcept { return offset_ + static_cast<long>(coeffs_.size()); }
  long length() const noexcept { return static_cast<long>(coeffs_.size()); }
  std::span<const Coefficient> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of q^exponent. Exponents below the window are zero; at or
  /// above prec the value is unknown and std::out_of_range is thrown.
  Coefficient coeff(long exponent) const;
  bool is_zero() const;

  /// Lowest exponent carrying a nonzero coefficient, if any.
  std::optional<long> valuation() const;

  bool operator==(const LaurentSeries&) const = default;

 private:
  long offset_;
  std::vector<Coefficient> coeffs_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const Coefficient& c, const LaurentSeries& a);

/// Multiplication by q^d.
LaurentSeries shift(const LaurentSeries& a, long d);

/// Multiplicative inverse, up to `n_terms` coefficients past its leading
/// exponent. The lowest nonzero coefficient of `a` must be +1 or -1.
LaurentSeries invert(const LaurentSeries& a, long n_terms);

/// Coefficients a(m*n + r) as a series in n.
LaurentSeries extract(const LaurentSeries& a, long m, long r);

/// Series with the substitution q -> q^m (m >= 1).
LaurentSeries dilate(const LaurentSeries& a, long m);

/// Substitution q -> -q.
LaurentSeries negate_variable(const LaurentSeries& a);

/// The window [lo, hi) of `a`; must not extend above a.prec().
LaurentSeries restrict_window(const LaurentSeries& a, long lo, long hi);

/// Integer power by repeated squaring.
LaurentSeries pow(const LaurentSeries& a, unsigned e);

struct Mismatch {
  long exponent;
  Coefficient lhs;
  Coefficient rhs;
};

enum class Agreement { Equal, Mismatch, InsufficientPrecision };

struct Comparison {
  Agreement status;
  long lo;  // common window actually compared, [lo, hi)
  long hi;
  std::optional<Mismatch> witness;

  explicit operator bool() const { return status == Agreement::Equal; }
};

/// Compares a and b on their common window. When that window is shorter
/// than `min_overlap` the result is InsufficientPrecision, never Equal.
Comparison eq_on(const LaurentSeries& a, const LaurentSeries& b, long min_overlap = 200);

using Valuation = std::uint64_t;
inline constexpr Valuation kInfiniteValuation = std::numeric_limits<Valuation>::max();

/// Largest e with 2^e | x; kInfiniteValuation for x = 0.
Valuation two_adic_valuation(const Coefficient& x);

std::string valuation_string(Valuation v);

/// Dump format: `offset=<int> prec=<int>` then one decimal coefficient per line.
void write_dump(std::ostream& os, const LaurentSeries& a);
LaurentSeries read_dump(std::istream& is);

/// Human-readable rendering, e.g. "1 - q + 2*q^3 + O(q^5)".
std::string to_string(const LaurentSeries& a);

// Integer division rounding toward -infinity / +infinity (b > 0).
constexpr long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
constexpr long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace etalab
