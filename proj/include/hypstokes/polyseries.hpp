#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "hypstokes/scalar.hpp"

namespace hypstokes::poly {

// Polynomial with ascending coefficients; exact trailing zeros trimmed.
template <class T>
class Polynomial {
 public:
  Polynomial() : coeffs_{T(0)} {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial_shift(const T& root) {  // X - root
    return Polynomial(std::vector<T>{-root, T(1)});
  }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  int degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && is_exactly_zero(coeffs_[0]); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  // Coefficient of X^{deg-k}: the A_k of X^n + A_1 X^{n-1} + ... + A_n.
  T monic_coeff(int k) const {
    const int d = degree();
    return (k < 0 || k > d) ? T(0) : coeffs_[d - k];
  }

  T operator()(const T& x) const {
    T acc = coeffs_.back();
    for (int i = static_cast<int>(coeffs_.size()) - 2; i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * scalar<T>(static_cast<long long>(i));
    return Polynomial(std::move(d));
  }

  // p(X + c): coefficients of p expanded around c (Horner shift).
  Polynomial shifted(const T& c) const {
    std::vector<T> a = coeffs_;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n - 1; ++i)
      for (int j = n - 2; j >= i; --j) a[j] = a[j] + c * a[j + 1];
    return Polynomial(std::move(a));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = r[i] + a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] = r[i] + b.coeffs_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b * Polynomial::constant(T(-1));
  }

 private:
  void trim() {
    while (coeffs_.size() > 1 && is_exactly_zero(coeffs_.back())) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(T(0));
  }

  std::vector<T> coeffs_;
};

// prod (X - r) by incremental multiplication, in the given root order.
template <class T>
Polynomial<T> poly_from_roots(std::span<const T> roots) {
  std::vector<T> c{T(1)};
  for (const T& r : roots) {
    std::vector<T> next(c.size() + 1, T(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = next[i + 1] + c[i];
      next[i] = next[i] - r * c[i];
    }
    c = std::move(next);
  }
  return Polynomial<T>(std::move(c));
}

template <class T>
Polynomial<T> poly_from_roots(const std::vector<T>& roots) {
  return poly_from_roots(std::span<const T>(roots));
}

// prod (X - e^{sign 2 pi i x}). Exponents are taken in ascending order of their
// reduced representative so that the result does not depend on input order.
template <class T>
Polynomial<T> char_poly(std::span<const Exponent> exponents, int sign) {
  std::vector<Exponent> sorted;
  sorted.reserve(exponents.size());
  for (const auto& e : exponents) sorted.push_back(e.reduced());
  std::stable_sort(sorted.begin(), sorted.end());
  std::vector<T> roots;
  roots.reserve(sorted.size());
  for (const auto& e : sorted) roots.push_back(unit<T>(e, sign));
  return poly_from_roots(std::span<const T>(roots));
}

template <class T>
Polynomial<T> char_poly(const std::vector<Exponent>& exponents, int sign) {
  return char_poly<T>(std::span<const Exponent>(exponents), sign);
}

// Jet of order < k at a center: coeffs[i] is the coefficient of (X - center)^i.
template <class T>
struct TruncatedSeries {
  T center;
  std::vector<T> coeffs;

  int order() const { return static_cast<int>(coeffs.size()); }
};

template <class T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (a.order() != b.order()) fail(ErrorCode::InvalidArgument, "jet orders differ");
  const int k = a.order();
  std::vector<T> c(k, T(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; i + j < k; ++j) c[i + j] = c[i + j] + a.coeffs[i] * b.coeffs[j];
  return {a.center, std::move(c)};
}

// Power-series long division; den.coeffs[0] must be nonzero.
template <class T>
TruncatedSeries<T> series_div(const TruncatedSeries<T>& num, const TruncatedSeries<T>& den) {
  if (num.order() != den.order()) fail(ErrorCode::InvalidArgument, "jet orders differ");
  const int k = num.order();
  std::vector<T> q(k, T(0));
  const T inv0 = T(1) / den.coeffs[0];
  for (int i = 0; i < k; ++i) {
    T acc = num.coeffs[i];
    for (int j = 1; j <= i; ++j) acc = acc - den.coeffs[j] * q[i - j];
    q[i] = acc * inv0;
  }
  return {num.center, std::move(q)};
}

template <class T>
TruncatedSeries<T> jet_of_polynomial(const Polynomial<T>& p, const T& center, int k) {
  Polynomial<T> s = p.shifted(center);
  std::vector<T> c(k, T(0));
  for (int i = 0; i < k; ++i) c[i] = s.coeff(i);
  return {center, std::move(c)};
}

// Order-k jet of num/den at center.
template <class T>
TruncatedSeries<T> jet_of_rational(const Polynomial<T>& num, const Polynomial<T>& den, const T& center,
                                   int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "jet order must be at least 1");
  const T d0 = den(center);
  double scale = 0;
  for (const auto& c : den.coeffs()) scale = std::max(scale, magnitude(c));
  if (negligible(d0, 1e-12 * (1 + scale)))
    fail(ErrorCode::PoleAtCenter, "denominator vanishes at the expansion point");
  return series_div(jet_of_polynomial(num, center, k), jet_of_polynomial(den, center, k));
}

// Column ( f^{(k-1)}/(k-1)!, ..., f', f ) evaluated at the center.
template <class T>
struct TaylorVector {
  std::vector<T> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

template <class T>
TaylorVector<T> taylor_vector(const TruncatedSeries<T>& jet) {
  return {std::vector<T>(jet.coeffs.rbegin(), jet.coeffs.rend())};
}

template <class T>
TaylorVector<T> taylor_vector(const Polynomial<T>& num, const Polynomial<T>& den, const T& center, int k) {
  return taylor_vector(jet_of_rational(num, den, center, k));
}

// Taylor vector of order k without its bottom entry f(center).
template <class T>
TaylorVector<T> truncated_taylor_vector(const Polynomial<T>& num, const Polynomial<T>& den, const T& center,
                                        int k) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "truncated Taylor vector needs order >= 2");
  TaylorVector<T> v = taylor_vector(num, den, center, k);
  v.entries.pop_back();
  return v;
}

// Upper-triangular Toeplitz matrix sum_j f^{(j)}/j! N^j, stored by its jet.
template <class T>
struct TaylorMatrix {
  TruncatedSeries<T> generator;

  int size() const { return generator.order(); }

  // Entry (r, c) of the k x k matrix.
  T at(int r, int c) const { return c < r ? T(0) : generator.coeffs[c - r]; }
};

template <class T>
TaylorMatrix<T> taylor_matrix(const Polynomial<T>& num, const Polynomial<T>& den, const T& center, int k) {
  return {jet_of_rational(num, den, center, k)};
}

template <class T>
TaylorVector<T> taylor_matrix_mul(const TaylorMatrix<T>& m, const TaylorVector<T>& v) {
  const int k = m.size();
  if (v.size() != k) fail(ErrorCode::InvalidArgument, "Taylor matrix/vector sizes differ");
  std::vector<T> out(k, T(0));
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) out[r] = out[r] + m.at(r, c) * v.entries[c];
  return {std::move(out)};
}

template <class T>
TaylorMatrix<T> taylor_matrix_mul(const TaylorMatrix<T>& a, const TaylorMatrix<T>& b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "Taylor matrix sizes differ");
  if (!(a.generator.center == b.generator.center))
    fail(ErrorCode::InvalidArgument, "Taylor matrices expanded at different points");
  return {series_mul(a.generator, b.generator)};
}

// Durand-Kerner refinement of all roots of a monic polynomial; meant for
// well-separated roots at desk-scale degree.
inline std::vector<Complex> polynomial_roots(const Polynomial<Complex>& p, int max_iter = 500) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<Complex> c = p.coeffs();
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;
  Polynomial<Complex> monic(c);
  std::vector<Complex> z(n);
  const Complex seed(0.4, 0.9);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  for (int it = 0; it < max_iter; ++it) {
    double delta = 0;
    for (int i = 0; i < n; ++i) {
      Complex den(1);
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      Complex step = monic(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-15) break;
  }
  // Newton polish.
  Polynomial<Complex> d = monic.derivative();
  for (auto& x : z)
    for (int it = 0; it < 3; ++it) {
      Complex dv = d(x);
      if (std::abs(dv) > 0) x -= monic(x) / dv;
    }
  return z;
}

}  // namespace hypstokes::poly
