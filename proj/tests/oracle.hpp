#pragma once
// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; only its value types are shared.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "hypstokes/engine.hpp"

namespace oracle {

using hypstokes::Complex;
using hypstokes::Matrix;
constexpr double pi = std::numbers::pi;

inline Complex cis(double turns) { return std::polar(1.0, 2 * pi * turns); }

// Cofactor expansion along the first row.
template <class T>
T det_laplace(const Matrix<T>& m) {
  const int n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc(0);
  for (int c = 0; c < n; ++c) {
    Matrix<T> minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const T term = m(0, c) * det_laplace(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// det(X - M) from sums of principal minors, ascending coefficients.
template <class T>
std::vector<T> charpoly_minors(const Matrix<T>& m) {
  const int n = m.rows();
  std::vector<T> e(n + 1, T(0));  // e[k] = sum of k x k principal minors
  e[0] = T(1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    Matrix<T> sub(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
    e[k] = e[k] + det_laplace(sub);
  }
  std::vector<T> c(n + 1, T(0));
  for (int k = 0; k <= n; ++k) c[n - k] = (k % 2 == 0) ? e[k] : T(0) - e[k];
  return c;
}

// Taylor coefficients f^{(j)}(c)/j!, j < k, by the trapezoidal rule on a circle.
inline std::vector<Complex> cauchy_taylor(const std::function<Complex(Complex)>& f, Complex c, int k,
                                          double r = 0.05, int samples = 512) {
  std::vector<Complex> out(k);
  for (int j = 0; j < k; ++j) {
    Complex acc = 0;
    for (int s = 0; s < samples; ++s) {
      const Complex w = r * cis(static_cast<double>(s) / samples);
      acc += f(c + w) / std::pow(w, j);
    }
    out[j] = acc / static_cast<double>(samples);
  }
  return out;
}

inline Complex poly_eval(const std::vector<Complex>& roots, Complex x) {
  Complex v = 1;
  for (auto r : roots) v *= x - r;
  return v;
}

// Monic polynomial from roots, ascending coefficients.
inline std::vector<Complex> expand(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (auto r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

inline double value(const hypstokes::Exponent& e) { return e.approx(); }

// Companion-form Stokes pair written out directly from the closed formulas:
// x_j = A_{n+1-j} - B_{n+1-j} - (A_1 - B_1) B_{n-j}, y = ((-1)^n e^{2 pi i sum beta}, 0, ...),
// S+ = [[I, x], [0, 1]], S- = [[Co(chi_B), 0], [y, e^{2 pi i lambda}]].
struct Pair {
  Matrix<Complex> s_plus, s_minus;
};

inline Pair companion_pair(const hypstokes::HyperParams& p) {
  const int n = p.n();
  std::vector<Complex> ra, rb;
  double sb = 0, sa = 0;
  for (const auto& a : p.alpha) {
    ra.push_back(cis(-value(a)));
    sa += value(a);
  }
  for (const auto& b : p.beta) {
    rb.push_back(cis(-value(b)));
    sb += value(b);
  }
  const auto ca = expand(ra), cb = expand(rb);
  // A_k: coefficient of X^{n-k}; B_k likewise for degree n-1.
  auto A = [&](int k) { return ca[n - k]; };
  auto B = [&](int k) { return (k <= n - 1) ? cb[n - 1 - k] : Complex(0); };
  Pair out{Matrix<Complex>::identity(n), Matrix<Complex>(n, n)};
  for (int j = 1; j <= n - 1; ++j) out.s_plus(j - 1, n - 1) = A(n + 1 - j) - B(n + 1 - j) - (A(1) - B(1)) * B(n - j);
  const int m = n - 1;
  for (int i = 1; i < m; ++i) out.s_minus(i, i - 1) = 1;
  for (int i = 0; i < m; ++i) out.s_minus(i, m - 1) = -cb[i];
  out.s_minus(n - 1, 0) = ((n % 2 == 0) ? 1.0 : -1.0) * cis(sb);
  const double lam = 1 - sa + sb;
  out.s_minus(n - 1, n - 1) = cis(lam);
  return out;
}

// Normal-form vector z by contour integrals, clusters taken from beta mod Z by
// plain rounding (exact rational input assumed).
inline std::vector<Complex> jordan_z(const hypstokes::HyperParams& p) {
  struct C {
    double red;
    int kappa;
  };
  std::vector<C> cl;
  for (const auto& b : p.beta) {
    double r = value(b) - std::floor(value(b));
    if (r > 1 - 1e-12) r = 0;
    bool found = false;
    for (auto& c : cl)
      if (std::abs(c.red - r) < 1e-9) {
        ++c.kappa;
        found = true;
      }
    if (!found) cl.push_back({r, 1});
  }
  std::sort(cl.begin(), cl.end(), [](const C& a, const C& b) { return a.red < b.red; });
  std::vector<Complex> ra;
  double sa = 0, sb = 0;
  for (const auto& a : p.alpha) {
    ra.push_back(cis(-value(a)));
    sa += value(a);
  }
  for (const auto& b : p.beta) sb += value(b);
  const Complex scale = cis(-(1 - sa + sb));
  std::vector<Complex> z;
  for (std::size_t j = 0; j < cl.size(); ++j) {
    const Complex lj = cis(-cl[j].red);
    auto f = [&](Complex x) {
      Complex d = x;
      for (std::size_t i = 0; i < cl.size(); ++i)
        if (i != j) d *= std::pow(x - cis(-cl[i].red), cl[i].kappa);
      return poly_eval(ra, x) / d;
    };
    double sep = 1;
    for (std::size_t i = 0; i < cl.size(); ++i)
      if (i != j) sep = std::min(sep, std::abs(lj - cis(-cl[i].red)));
    const auto t = cauchy_taylor(f, lj, cl[j].kappa, 0.25 * sep);
    for (int k = cl[j].kappa - 1; k >= 0; --k) z.push_back(scale * t[k]);
  }
  return z;
}

inline double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
