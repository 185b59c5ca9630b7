#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <string_view>
#include <variant>

namespace hypstokes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// A hypergeometric exponent. Only its class modulo Z matters to the module, but
// the representative is kept so that sums like 1 - sum(alpha) + sum(beta) stay
// meaningful. Exact values are rationals in lowest terms with den > 0.
class Exponent {
 public:
  Exponent() : value_(Rational(0)) {}
  Exponent(const Rational& q) : value_(q) {}  // NOLINT(implicit)
  Exponent(long long num, long long den);

  static Exponent from_double(double x) { return Exponent(FloatTag{}, x); }

  // "1/3", "-2", "0.25". Decimal strings become exact rationals when
  // exact_decimals is set, otherwise floats.
  static Exponent parse(std::string_view text, bool exact_decimals);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  double approx() const;

  // Representative in [0,1).
  Exponent reduced() const;

  // Integrality; exact values are tested exactly, floats within int_tol.
  bool is_integer(double int_tol) const;

  Exponent to_float() const { return from_double(approx()); }

  Exponent operator-() const;
  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  Exponent& operator+=(const Exponent& o) { return *this = *this + o; }
  Exponent& operator-=(const Exponent& o) { return *this = *this - o; }

  // Structural equality: both exact and equal, or both float and equal.
  friend bool operator==(const Exponent& a, const Exponent& b);

  // Orders by value; exact/exact comparisons are exact.
  friend bool operator<(const Exponent& a, const Exponent& b);

  std::string to_string() const;

 private:
  struct FloatTag {};
  Exponent(FloatTag, double x) : value_(x) {}

  std::variant<Rational, double> value_;
};

// e^{sign * 2 pi i x} in double precision. Exact exponents are reduced first
// and evaluated through octant symmetry so that e.g. 1/2, 1/4, 1/6 land on
// exactly representable values.
Complex eigenvalue_of(const Exponent& x, int sign);

// cos/sin(2 pi q) for a rational number of turns, rounded from long double.
Complex unit_from_turns(const Rational& turns);

long long to_ll(const BigInt& v);

}  // namespace hypstokes
