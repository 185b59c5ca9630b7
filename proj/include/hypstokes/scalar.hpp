#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>

#include "hypstokes/cyclotomic.hpp"
#include "hypstokes/error.hpp"
#include "hypstokes/exponent.hpp"

namespace hypstokes {

using RealHP = boost::multiprecision::cpp_bin_float_50;
using ComplexHP = boost::multiprecision::cpp_complex_50;

// Three arithmetic back ends share every algorithm: double complex, 50-digit
// complex, and exact cyclotomic numbers.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "double";
  static Complex approx(const Complex& x) { return x; }
  static Complex unit(const Exponent& x, int sign) { return eigenvalue_of(x, sign); }
  static Complex from_complex(const Complex& c) { return c; }
};

template <>
struct ScalarTraits<ComplexHP> {
  static constexpr bool exact = false;
  static constexpr const char* name = "high";
  static Complex approx(const ComplexHP& x) {
    return {x.real().convert_to<double>(), x.imag().convert_to<double>()};
  }
  static ComplexHP unit(const Exponent& x, int sign);
  static ComplexHP from_complex(const Complex& c) { return ComplexHP(c.real(), c.imag()); }
};

template <>
struct ScalarTraits<Cyclotomic> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static Complex approx(const Cyclotomic& x) { return x.approx(); }
  static Cyclotomic unit(const Exponent& x, int sign) {
    const Rational& q = x.exact();
    return Cyclotomic::root_of_unity(sign > 0 ? q : Rational(-q));
  }
  static Cyclotomic from_complex(const Complex&) {
    fail(ErrorCode::InexactInput, "floating value in exact arithmetic");
  }
};

template <class T>
Complex approx(const T& x) {
  return ScalarTraits<T>::approx(x);
}

template <class T>
double magnitude(const T& x) {
  return std::abs(approx(x));
}

template <class T>
bool is_exactly_zero(const T& x) {
  if constexpr (std::is_same_v<T, Cyclotomic>)
    return x.is_zero();
  else
    return x == T(0);
}

// Zero test used for pivots and ranks: exact for exact types, |x| <= tol otherwise.
template <class T>
bool negligible(const T& x, double tol) {
  if constexpr (ScalarTraits<T>::exact)
    return is_exactly_zero(x);
  else
    return magnitude(x) <= tol;
}

// Pivot preference, larger is better: magnitude for floats, small coefficients
// for exact values (limits growth).
template <class T>
double pivot_score(const T& x) {
  if constexpr (ScalarTraits<T>::exact)
    return -static_cast<double>(x.bit_size());
  else
    return magnitude(x);
}

// e^{sign 2 pi i x} in the arithmetic T.
template <class T>
T unit(const Exponent& x, int sign) {
  return ScalarTraits<T>::unit(x, sign);
}

template <class T>
T scalar(long long v) {
  if constexpr (std::is_same_v<T, Cyclotomic>)
    return Cyclotomic(Rational(v));
  else
    return T(static_cast<double>(v));
}

}  // namespace hypstokes
