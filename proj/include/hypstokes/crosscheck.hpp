#pragma once

#include <boost/math/constants/constants.hpp>

#include <numbers>
#include <string>
#include <vector>

#include "hypstokes/stokes.hpp"

namespace hypstokes {

// Gamma function: Stirling series after shifting to Re z >= 12 (double) or
// Re z >= 40 (50 digits). Reflection for Re z < 1/2. PoleOfGamma near 0, -1, -2, ...
Complex complex_gamma(const Complex& z);
ComplexHP complex_gamma(const ComplexHP& z);

// Exponent value as a scalar of the floating back ends.
template <class T>
T exponent_value(const Exponent& x) {
  if constexpr (std::is_same_v<T, ComplexHP>) {
    if (x.is_exact()) {
      const Rational& q = x.exact();
      return ComplexHP(RealHP(boost::multiprecision::numerator(q)) / RealHP(boost::multiprecision::denominator(q)));
    }
  }
  return T(x.approx());
}

Exponent half_of(const Exponent& x);

template <class T>
T two_pi_i() {
  if constexpr (std::is_same_v<T, ComplexHP>)
    return ComplexHP(RealHP(0), 2 * boost::math::constants::pi<RealHP>());
  else
    return T(0.0, 2 * std::numbers::pi);
}

template <class T>
struct DMStokes {
  std::vector<T> v, w;  // indexed like beta
  Exponent lambda_dm;
};

// Gamma-function Stokes data of the diagonalizable case:
//   v_j = 2 pi i prod_{l != j} G(1 - (b_j - b_l)) / prod_l G(a_l - b_j)
//   w_j = 2 pi i e^{pi i (lambda_dm - b_j)} prod_{l != j} G(b_j - b_l) / prod_l G(1 - (a_l - b_j))
// with lambda_dm = -lambda + 2 - n.
template <class T>
DMStokes<T> dm_stokes(const HyperParams& p, const Tolerances& tol = {}) {
  require_generic(p, tol.int_tol);
  if (!diagonalizable(cluster_beta(p.beta, tol.cluster_tol)))
    fail(ErrorCode::NotDiagonalizable, "two beta exponents differ by an integer");
  const int n = p.n();
  DMStokes<T> dm;
  dm.lambda_dm = -p.lambda_exp() + Exponent(Rational(2 - n));
  const T tpi = two_pi_i<T>();
  const T one(1);
  for (int j = 0; j < n - 1; ++j) {
    const T bj = exponent_value<T>(p.beta[j]);
    T num_v = tpi, num_w = tpi * unit<T>(half_of(dm.lambda_dm - p.beta[j]), +1);
    for (int l = 0; l < n - 1; ++l) {
      if (l == j) continue;
      const T bl = exponent_value<T>(p.beta[l]);
      num_v = num_v * complex_gamma(one - (bj - bl));
      num_w = num_w * complex_gamma(bj - bl);
    }
    T den_v = one, den_w = one;
    for (int l = 0; l < n; ++l) {
      const T al = exponent_value<T>(p.alpha[l]);
      den_v = den_v * complex_gamma(al - bj);
      den_w = den_w * complex_gamma(one - (al - bj));
    }
    dm.v.push_back(num_v / den_v);
    dm.w.push_back(num_w / den_w);
  }
  return dm;
}

// max_j |-v_j w_j - z_j| with z the normal-form vector of stokes_jordan (which
// already carries the factor e^{-2 pi i lambda}); matched through the clusters.
template <class T>
double dm_identity_residual(const HyperParams& p, const Tolerances& tol = {}) {
  const DMStokes<T> dm = dm_stokes<T>(p, tol);
  const NormalFormPair<T> nf = stokes_jordan<T>(p, tol);
  double r = 0;
  for (int k = 0; k < nf.clusters.size(); ++k) {
    const int j = nf.clusters.clusters[k].members.front();
    const T lhs = T(0) - dm.v[j] * dm.w[j];
    r = std::max(r, magnitude(lhs - nf.z[k]));
  }
  return r;
}

// Every reduced u/w present forces all u'/w with gcd(u', w) = 1, with equal
// multiplicities. Exact exponents only.
bool cyclotomic_property(const std::vector<Exponent>& exps);

// Multiset closed under x -> -x mod Z with matching multiplicities; for lists
// without repeats this is: every gamma_j has some gamma_i with gamma_i + gamma_j in Z.
bool conjugate_property(const std::vector<Exponent>& exps, double int_tol = Tolerances{}.int_tol);

struct SnapResult {
  enum class Kind { Integer, Real, Unchanged };
  StokesPair<Complex> pair;
  Kind kind = Kind::Unchanged;
  std::string flag;        // reason when unchanged
  double residual = 0;     // largest distance moved by snapping
};

const char* to_string(SnapResult::Kind k);

// Rounds entries to integers when alpha and beta are both cyclotomic, drops
// imaginary parts when both have the conjugate property. A property that holds
// with an entry farther than snap_tol from the target raises SnapFailure.
SnapResult snap_integral(const StokesPair<Complex>& sp, const HyperParams& p, double snap_tol);

template <class T>
SnapResult snap_integral(const StokesPair<T>& sp, const HyperParams& p, double snap_tol) {
  if constexpr (std::is_same_v<T, Complex>) {
    return snap_integral(sp, p, snap_tol);
  } else {
    return snap_integral(StokesPair<Complex>{sp.s_plus.approx(), sp.s_minus.approx(), sp.r0, sp.rrho, sp.route}, p,
                         snap_tol);
  }
}

}  // namespace hypstokes
