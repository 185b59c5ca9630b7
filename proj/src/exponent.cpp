#include "hypstokes/exponent.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "hypstokes/error.hpp"

namespace hypstokes {

namespace {

Rational floor_rational(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return Rational(f);
}

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? BigInt(-v) : v;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

long long to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    fail(ErrorCode::InvalidArgument, "integer out of range");
  return v.convert_to<long long>();
}

Exponent::Exponent(long long num, long long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  value_ = Rational(BigInt(num), BigInt(den));
}

Exponent Exponent::parse(std::string_view text, bool exact_decimals) {
  std::string_view s = trim(text);
  if (s.empty()) fail(ErrorCode::Parse, "empty exponent");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num, den;
    if (!parse_integer(trim(s.substr(0, slash)), num) ||
        !parse_integer(trim(s.substr(slash + 1)), den))
      fail(ErrorCode::Parse, "malformed rational '" + std::string(s) + "'");
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
    return Exponent(Rational(num, den));
  }
  BigInt whole;
  if (parse_integer(s, whole)) return Exponent(Rational(whole));

  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value))
    fail(ErrorCode::Parse, "malformed exponent '" + std::string(s) + "'");
  if (!exact_decimals) return from_double(value);

  // Exact decimal: digits with at most one '.', no exponent part.
  auto dot = s.find('.');
  if (dot == std::string_view::npos || s.find_first_of("eE") != std::string_view::npos)
    fail(ErrorCode::InexactInput,
         "cannot read '" + std::string(s) + "' as an exact rational");
  std::string digits(s.substr(0, dot));
  std::string frac(s.substr(dot + 1));
  BigInt num;
  if (!parse_integer(digits.empty() || digits == "-" || digits == "+" ? digits + "0" : digits, num))
    fail(ErrorCode::Parse, "malformed decimal '" + std::string(s) + "'");
  BigInt f;
  if (!frac.empty() && !parse_integer(frac, f))
    fail(ErrorCode::Parse, "malformed decimal '" + std::string(s) + "'");
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
  bool neg = s.front() == '-';
  BigInt mag = (neg ? BigInt(-num) : num) * scale + f;
  return Exponent(Rational(neg ? BigInt(-mag) : mag, scale));
}

const Rational& Exponent::exact() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q;
  fail(ErrorCode::InexactInput, "exponent " + to_string() + " is not exact");
}

double Exponent::approx() const {
  if (auto* q = std::get_if<Rational>(&value_)) return q->convert_to<double>();
  return std::get<double>(value_);
}

Exponent Exponent::reduced() const {
  if (auto* q = std::get_if<Rational>(&value_)) return Exponent(*q - floor_rational(*q));
  double x = std::get<double>(value_);
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;
  return from_double(r);
}

bool Exponent::is_integer(double int_tol) const {
  if (auto* q = std::get_if<Rational>(&value_))
    return boost::multiprecision::denominator(*q) == 1;
  double x = std::get<double>(value_);
  return std::abs(x - std::round(x)) <= int_tol;
}

Exponent Exponent::operator-() const {
  if (auto* q = std::get_if<Rational>(&value_)) return Exponent(Rational(-*q));
  return from_double(-std::get<double>(value_));
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.is_exact() && b.is_exact()) return Exponent(Rational(a.exact() + b.exact()));
  return Exponent::from_double(a.approx() + b.approx());
}

Exponent operator-(const Exponent& a, const Exponent& b) { return a + (-b); }

bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }

bool operator<(const Exponent& a, const Exponent& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.approx() < b.approx();
}

std::string Exponent::to_string() const {
  if (auto* q = std::get_if<Rational>(&value_)) {
    if (boost::multiprecision::denominator(*q) == 1)
      return boost::multiprecision::numerator(*q).str();
    return q->str();
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, ptr);
}

Complex unit_from_turns(const Rational& turns) {
  // Reduce to r in [0,1), then fold into the first octant [0, 1/8].
  Rational r = turns - floor_rational(turns);
  const Rational eighth(1, 8), quarter(1, 4), half(1, 2);

  bool neg_sin = false;
  if (r > half) {  // e^{2 pi i r} = conj(e^{2 pi i (1-r)})
    r = 1 - r;
    neg_sin = true;
  }
  bool neg_cos = false;
  if (r > quarter) {  // cos(pi - t) = -cos t, sin(pi - t) = sin t
    r = half - r;
    neg_cos = true;
  }
  bool swap = false;
  if (r > eighth) {  // cos(pi/2 - t) = sin t
    r = quarter - r;
    swap = true;
  }

  double c = 0, s = 0;
  if (r == 0) {
    c = 1.0;
    s = 0.0;
  } else if (r == eighth) {
    c = s = std::numbers::sqrt2 / 2;
  } else if (r == Rational(1, 12)) {
    c = std::numbers::sqrt3 / 2;
    s = 0.5;
  } else {
    long double t = 2.0L * std::numbers::pi_v<long double> * r.convert_to<long double>();
    c = static_cast<double>(std::cos(t));
    s = static_cast<double>(std::sin(t));
  }
  if (swap) std::swap(c, s);
  if (neg_cos) c = -c;
  if (neg_sin) s = -s;
  return {c, s};
}

Complex eigenvalue_of(const Exponent& x, int sign) {
  if (sign != 1 && sign != -1) fail(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  if (x.is_exact()) return unit_from_turns(sign > 0 ? x.exact() : Rational(-x.exact()));
  double r = x.reduced().approx();
  long double t = 2.0L * std::numbers::pi_v<long double> * r * sign;
  return {static_cast<double>(std::cos(t)), static_cast<double>(std::sin(t))};
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::AmbiguousClustering: return "AmbiguousClustering";
    case ErrorCode::InexactInput: return "InexactInput";
    case ErrorCode::PoleAtCenter: return "PoleAtCenter";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::HypothesesViolated: return "HypothesesViolated";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroLeadingEntry: return "ZeroLeadingEntry";
    case ErrorCode::InvalidQuiver: return "InvalidQuiver";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::PoleOfGamma: return "PoleOfGamma";
    case ErrorCode::SnapFailure: return "SnapFailure";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace hypstokes
