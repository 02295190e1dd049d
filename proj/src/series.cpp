#include "etalab/series.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace etalab {

const char* to_string(SeriesErrc code) {
  switch (code) {
    case SeriesErrc::EmptyWindow:
      return "empty-window";
    case SeriesErrc::NonUnitLeadingCoefficient:
      return "non-unit-leading-coefficient";
    case SeriesErrc::AllZeroWindow:
      return "all-zero-window";
    case SeriesErrc::InsufficientPrecision:
      return "insufficient-precision";
  }
  return "unknown";
}

SeriesError::SeriesError(SeriesErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

[[noreturn]] void empty_window(const char* op, long lo, long hi) {
  std::ostringstream msg;
  msg << op << " produces window [" << lo << ", " << hi << ")";
  throw SeriesError(SeriesErrc::EmptyWindow, msg.str());
}

// Indices of nonzero entries below `limit`.
std::vector<long> support(std::span<const Coefficient> c, long limit) {
  std::vector<long> idx;
  const long n = std::min<long>(limit, static_cast<long>(c.size()));
  for (long i = 0; i < n; ++i) {
    if (sgn(c[i]) != 0) idx.push_back(i);
  }
  return idx;
}

}  // namespace

LaurentSeries::LaurentSeries(long offset, std::vector<Coefficient> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) empty_window("construction", offset, offset);
}

LaurentSeries LaurentSeries::zero(long offset, long prec) {
  if (prec <= offset) empty_window("zero", offset, prec);
  return LaurentSeries(offset, std::vector<Coefficient>(prec - offset));
}

LaurentSeries LaurentSeries::monomial(const Coefficient& c, long exponent, long offset, long prec) {
  auto s = zero(offset, prec);
  if (exponent >= offset && exponent < prec) s.coeffs_[exponent - offset] = c;
  return s;
}

Coefficient LaurentSeries::coeff(long exponent) const {
  if (exponent < offset_) return 0;
  if (exponent >= prec()) {
    std::ostringstream msg;
    msg << "exponent " << exponent << " is at or above prec " << prec();
    throw std::out_of_range(msg.str());
  }
  return coeffs_[exponent - offset_];
}

bool LaurentSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return sgn(c) == 0; });
}

std::optional<long> LaurentSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return offset_ + static_cast<long>(i);
  }
  return std::nullopt;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const long lo = std::min(a.offset(), b.offset());
  const long hi = std::min(a.prec(), b.prec());
  if (hi <= lo) empty_window("add", lo, hi);
  std::vector<Coefficient> out(hi - lo);
  for (long e = std::max(lo, a.offset()); e < hi; ++e) out[e - lo] = a.coeffs()[e - a.offset()];
  for (long e = std::max(lo, b.offset()); e < hi; ++e) out[e - lo] += b.coeffs()[e - b.offset()];
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries operator-(const LaurentSeries& a) {
  std::vector<Coefficient> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = -c;
  return LaurentSeries(a.offset(), std::move(out));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const Coefficient& c, const LaurentSeries& a) {
  std::vector<Coefficient> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x *= c;
  return LaurentSeries(a.offset(), std::move(out));
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const long lo = a.offset() + b.offset();
  const long hi = std::min(a.prec() + b.offset(), b.prec() + a.offset());
  if (hi <= lo) empty_window("mul", lo, hi);
  const long len = hi - lo;

  // Schoolbook convolution driven by the sparser operand's support; eta
  // products are often lacunary, so zero rows are skipped entirely.
  auto sa = support(a.coeffs(), len);
  auto sb = support(b.coeffs(), len);
  const bool swap = sa.size() > sb.size();
  const auto& outer = swap ? sb : sa;
  const auto& inner = swap ? sa : sb;
  const auto oc = swap ? b.coeffs() : a.coeffs();
  const auto ic = swap ? a.coeffs() : b.coeffs();

  std::vector<Coefficient> out(len);
  for (long i : outer) {
    const mpz_srcptr x = oc[i].get_mpz_t();
    for (long j : inner) {
      if (i + j >= len) break;
      mpz_addmul(out[i + j].get_mpz_t(), x, ic[j].get_mpz_t());
    }
  }
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries shift(const LaurentSeries& a, long d) {
  return LaurentSeries(a.offset() + d, std::vector<Coefficient>(a.coeffs().begin(), a.coeffs().end()));
}

LaurentSeries invert(const LaurentSeries& a, long n_terms) {
  const auto v = a.valuation();
  if (!v) throw SeriesError(SeriesErrc::AllZeroWindow, "invert of a series with no nonzero coefficient");
  const Coefficient& lead = a.coeffs()[*v - a.offset()];
  if (abs(lead) != 1) {
    throw SeriesError(SeriesErrc::NonUnitLeadingCoefficient, "leading coefficient " + lead.get_str());
  }
  const long len = std::min(n_terms, a.prec() - *v);
  if (len <= 0) empty_window("invert", -*v, -*v + len);

  // u = a / q^v, a unit power series; b = 1/u by b_n = -b_0 * sum u_j b_{n-j}.
  const auto u = a.coeffs().subspan(*v - a.offset());
  auto su = support(u, len);
  std::vector<Coefficient> b(len);
  b[0] = lead;
  Coefficient acc;
  for (long n = 1; n < len; ++n) {
    acc = 0;
    for (long j : su) {
      if (j == 0) continue;
      if (j > n) break;
      mpz_addmul(acc.get_mpz_t(), u[j].get_mpz_t(), b[n - j].get_mpz_t());
    }
    b[n] = sgn(lead) > 0 ? Coefficient(-acc) : acc;
  }
  return LaurentSeries(-*v, std::move(b));
}

LaurentSeries extract(const LaurentSeries& a, long m, long r) {
  if (m < 1) throw std::invalid_argument("extract: step must be positive");
  const long lo = ceil_div(a.offset() - r, m);
  const long hi = floor_div(a.prec() - 1 - r, m) + 1;
  if (hi <= lo) empty_window("extract", lo, hi);
  std::vector<Coefficient> out;
  out.reserve(hi - lo);
  for (long n = lo; n < hi; ++n) out.push_back(a.coeffs()[m * n + r - a.offset()]);
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries dilate(const LaurentSeries& a, long m) {
  if (m < 1) throw std::invalid_argument("dilate: factor must be positive");
  // Exponents of a(q^m) that are not multiples of m are known zeros, so the
  // window extends to m*prec.
  const long lo = m * a.offset();
  const long hi = m * a.prec();
  std::vector<Coefficient> out(hi - lo);
  for (long i = 0; i < a.length(); ++i) out[m * i] = a.coeffs()[i];
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries negate_variable(const LaurentSeries& a) {
  std::vector<Coefficient> out(a.coeffs().begin(), a.coeffs().end());
  for (long i = 0; i < a.length(); ++i) {
    if ((a.offset() + i) % 2 != 0) out[i] = -out[i];
  }
  return LaurentSeries(a.offset(), std::move(out));
}

LaurentSeries restrict_window(const LaurentSeries& a, long lo, long hi) {
  if (hi <= lo) empty_window("restrict", lo, hi);
  if (hi > a.prec()) throw std::out_of_range("restrict_window: upper bound exceeds precision");
  std::vector<Coefficient> out(hi - lo);
  for (long e = std::max(lo, a.offset()); e < hi; ++e) out[e - lo] = a.coeffs()[e - a.offset()];
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries pow(const LaurentSeries& a, unsigned e) {
  LaurentSeries result = LaurentSeries::constant(1, a.prec() - a.offset());
  if (e == 0) return result;
  LaurentSeries base = a;
  bool first = true;
  while (true) {
    if (e & 1u) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1u;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

Comparison eq_on(const LaurentSeries& a, const LaurentSeries& b, long min_overlap) {
  const long lo = std::max(a.offset(), b.offset());
  const long hi = std::min(a.prec(), b.prec());
  if (hi <= lo || hi - lo < min_overlap) {
    return {Agreement::InsufficientPrecision, lo, std::max(lo, hi), std::nullopt};
  }
  for (long e = lo; e < hi; ++e) {
    const auto& x = a.coeffs()[e - a.offset()];
    const auto& y = b.coeffs()[e - b.offset()];
    if (x != y) return {Agreement::Mismatch, lo, hi, Mismatch{e, x, y}};
  }
  return {Agreement::Equal, lo, hi, std::nullopt};
}

Valuation two_adic_valuation(const Coefficient& x) {
  if (sgn(x) == 0) return kInfiniteValuation;
  return mpz_scan1(x.get_mpz_t(), 0);
}

std::string valuation_string(Valuation v) {
  return v == kInfiniteValuation ? std::string("inf") : std::to_string(v);
}

void write_dump(std::ostream& os, const LaurentSeries& a) {
  os << "offset=" << a.offset() << " prec=" << a.prec() << '\n';
  for (const auto& c : a.coeffs()) os << c.get_str() << '\n';
}

LaurentSeries read_dump(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("dump: missing header");
  long offset = 0;
  long prec = 0;
  if (std::sscanf(header.c_str(), "offset=%ld prec=%ld", &offset, &prec) != 2) {
    throw std::invalid_argument("dump: malformed header '" + header + "'");
  }
  std::vector<Coefficient> coeffs;
  std::string line;
  while (static_cast<long>(coeffs.size()) < prec - offset && std::getline(is, line)) {
    coeffs.emplace_back(line, 10);
  }
  if (static_cast<long>(coeffs.size()) != prec - offset) {
    throw std::invalid_argument("dump: coefficient count does not match header");
  }
  return LaurentSeries(offset, std::move(coeffs));
}

std::string to_string(const LaurentSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < a.length(); ++i) {
    const auto& c = a.coeffs()[i];
    if (sgn(c) == 0) continue;
    const long e = a.offset() + i;
    Coefficient mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  if (first) os << '0';
  os << " + O(q^" << a.prec() << ')';
  return os.str();
}

}  // namespace etalab
