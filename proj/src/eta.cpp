#include "etalab/eta.hpp"

#include <cctype>
#include <sstream>

namespace etalab {

EtaParseError::EtaParseError(std::size_t position, const std::string& what)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

void validate(const EtaQuotient::Factors& factors) {
  for (const auto& [m, e] : factors) {
    if (m < 1) throw std::invalid_argument("eta quotient: period must be >= 1, got " + std::to_string(m));
    if (e == 0) throw std::invalid_argument("eta quotient: zero exponent for f" + std::to_string(m));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  EtaQuotient run() {
    skip_space();
    if (at_end()) fail("empty expression");
    EtaQuotient::Factors factors;
    if (peek() == '1') {
      ++pos_;
      skip_space();
      if (!at_end()) fail("unexpected character after empty product");
      return EtaQuotient{};
    }
    while (true) {
      const std::size_t start = pos_;
      if (peek() != 'f') fail("expected 'f'");
      ++pos_;
      const long period = number("period");
      if (period < 1) fail("period must be >= 1", start + 1);
      long exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        const std::size_t exp_pos = pos_;
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          negative = peek() == '-';
          ++pos_;
        }
        exponent = number("exponent");
        if (negative) exponent = -exponent;
        if (exponent == 0) fail("zero exponent", exp_pos);
      }
      if (!factors.emplace(period, exponent).second) fail("duplicate period f" + std::to_string(period), start);
      skip_space();
      if (at_end()) break;
      if (peek() != '*') fail("expected '*'");
      ++pos_;
      skip_space();
      if (at_end()) fail("dangling '*'");
    }
    return EtaQuotient(std::move(factors));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  long number(const char* what) {
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw EtaParseError(at, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EtaQuotient::EtaQuotient(std::initializer_list<std::pair<const long, long>> factors) {
  for (const auto& f : factors) {
    if (!factors_.insert(f).second) {
      throw std::invalid_argument("eta quotient: duplicate period " + std::to_string(f.first));
    }
  }
  validate(factors_);
}

EtaQuotient::EtaQuotient(Factors factors) : factors_(std::move(factors)) { validate(factors_); }

EtaQuotient EtaQuotient::parse(std::string_view text) { return Parser(text).run(); }

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const {
  Factors out = factors_;
  for (const auto& [m, e] : other.factors_) {
    if ((out[m] += e) == 0) out.erase(m);
  }
  return EtaQuotient(std::move(out));
}

EtaQuotient EtaQuotient::inverse() const {
  Factors out;
  for (const auto& [m, e] : factors_) out.emplace(m, -e);
  return EtaQuotient(std::move(out));
}

std::string EtaQuotient::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, e] : factors_) {
    if (!first) os << '*';
    first = false;
    os << 'f' << m;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

const char* to_string(GeneratingTarget t) {
  switch (t) {
    case GeneratingTarget::M:
      return "M";
    case GeneratingTarget::TSTAR:
      return "T*";
    case GeneratingTarget::PSTAR:
      return "P*";
    case GeneratingTarget::EULER_P:
      return "p";
  }
  return "?";
}

EtaQuotient definition(GeneratingTarget t) {
  switch (t) {
    case GeneratingTarget::M:
      return {{2, 5}, {5, 5}, {1, -1}, {10, -1}};
    case GeneratingTarget::TSTAR:
      return {{1, 5}, {10, 5}, {2, -1}, {5, -1}};
    case GeneratingTarget::PSTAR:
      return {{1, 4}, {5, 4}};
    case GeneratingTarget::EULER_P:
      return {{1, -1}};
  }
  throw std::invalid_argument("unknown generating target");
}

LaurentSeries expand_f(long m, long N) {
  if (m < 1) throw std::invalid_argument("expand_f: period must be >= 1");
  if (N < 1) throw std::invalid_argument("expand_f: order must be >= 1");
  // Euler: f_1 = sum_{j in Z} (-1)^j q^{j(3j-1)/2}; walk j = 0, 1, -1, 2, -2, ...
  std::vector<Coefficient> c(N);
  c[0] = 1;
  for (long j = 1;; ++j) {
    const long lo = m * (j * (3 * j - 1) / 2);
    const long hi = m * (j * (3 * j + 1) / 2);
    if (lo >= N) break;
    const int sign = (j % 2 == 0) ? 1 : -1;
    c[lo] = sign;
    if (hi < N) c[hi] = sign;
  }
  return LaurentSeries(0, std::move(c));
}

LaurentSeries expand_quotient(const EtaQuotient& e, long N) { return expand_quotient(e, N, expand_f); }

LaurentSeries expand_quotient(const EtaQuotient& e, long N, const FExpander& f) {
  if (N < 1) throw std::invalid_argument("expand_quotient: order must be >= 1");
  std::optional<LaurentSeries> num;
  std::optional<LaurentSeries> den;
  for (const auto& [m, exp] : e.factors()) {
    auto term = pow(f(m, N), static_cast<unsigned>(exp > 0 ? exp : -exp));
    auto& slot = exp > 0 ? num : den;
    slot = slot ? *slot * term : std::move(term);
  }
  LaurentSeries result = num ? std::move(*num) : LaurentSeries::constant(1, N);
  if (den) result = result * invert(*den, N);
  return result;
}

LaurentSeries gen_target(GeneratingTarget t, long N) { return expand_quotient(definition(t), N); }

KSeries expand_k(long N) {
  if (N < 2) throw std::invalid_argument("expand_k: order must be >= 2");
  // Unit part on [0, N-1); the leading q moves it to [1, N).
  const long len = N - 1;
  std::vector<Coefficient> c(len);
  c[0] = 1;
  for (long e = 1; e < len; ++e) {
    switch (e % 10) {
      case 1:
      case 2:
      case 8:
      case 9:
        for (long n = len - 1; n >= e; --n) c[n] -= c[n - e];
        break;
      case 3:
      case 4:
      case 6:
      case 7:
        for (long n = e; n < len; ++n) c[n] += c[n - e];
        break;
      default:
        break;
    }
  }
  return KSeries{LaurentSeries(1, std::move(c))};
}

std::shared_ptr<const LaurentSeries> TargetCache::get(GeneratingTarget t, long N) {
  std::lock_guard lock(mu_);
  auto& slot = entries_[{t, N}];
  if (!slot) slot = std::make_shared<const LaurentSeries>(gen_target(t, N));
  return slot;
}

}  // namespace etalab
