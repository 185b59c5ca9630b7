#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hypstokes/exponent.hpp"

namespace hypstokes {

// Q(zeta_N), stored through the power basis 1, zeta, ..., zeta^{phi(N)-1}
// modulo the N-th cyclotomic polynomial. Instances are interned per order.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  // Phi_N, ascending coefficients, monic.
  const std::vector<BigInt>& modulus() const { return modulus_; }
  // zeta^k as a complex double, k in [0, N).
  const std::vector<std::complex<long double>>& powers() const { return powers_; }

  explicit CyclotomicField(int order);

 private:
  int order_;
  std::vector<BigInt> modulus_;
  std::vector<std::complex<long double>> powers_;
};

// Cyclotomic polynomial Phi_n with integer coefficients, ascending.
std::vector<BigInt> cyclotomic_polynomial(int n);

// Exact element of a cyclotomic field. A default or rational-constructed value
// carries no field and is promoted on contact with a field element; elements
// of different orders are lifted into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_{Rational(0)} {}
  Cyclotomic(int v) : coeffs_{Rational(v)} {}  // NOLINT(implicit)
  Cyclotomic(const Rational& v) : coeffs_{v} {}  // NOLINT(implicit)

  // e^{2 pi i turns}; lives in Q(zeta_N) with N = lcm(den(turns), min_order).
  static Cyclotomic root_of_unity(const Rational& turns, int min_order = 1);

  int order() const { return field_ ? field_->order() : 1; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;
  // Coefficients in the power basis of Q(zeta_order()).
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Complex approx() const;
  std::string to_string() const;
  // Total bits of all numerators and denominators.
  std::size_t bit_size() const;

  Cyclotomic lifted(int order) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);
  void normalize();

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

}  // namespace hypstokes
