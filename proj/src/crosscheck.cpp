#include "hypstokes/crosscheck.hpp"

#include <boost/math/special_functions/bernoulli.hpp>

#include <map>
#include <numeric>

namespace hypstokes {

namespace {

void check_pole(double re, double im) {
  if (re <= 0.5 && std::abs(im) < 1e-12 && std::abs(re - std::round(re)) < 1e-12 && std::round(re) <= 0)
    fail(ErrorCode::PoleOfGamma, "Gamma has a pole at " + std::to_string(std::round(re)));
}

}  // namespace

Complex complex_gamma(const Complex& z) {
  check_pole(z.real(), z.imag());
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
  // Same scheme as the high-precision version: shift to Re >= 12, Stirling series.
  Complex w = z, prod = 1.0;
  while (w.real() < 12) {
    prod *= w;
    w += 1.0;
  }
  const Complex w2 = w * w;
  Complex series = 0.0, wp = w;
  for (int k = 1; k <= 10; ++k) {
    series += boost::math::bernoulli_b2n<double>(k) / (2.0 * k * (2 * k - 1)) / wp;
    wp *= w2;
  }
  const Complex lg = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2 * pi) + series;
  return std::exp(lg) / prod;
}

ComplexHP complex_gamma(const ComplexHP& z) {
  check_pole(z.real().convert_to<double>(), z.imag().convert_to<double>());
  const RealHP pi = boost::math::constants::pi<RealHP>();
  const ComplexHP one(1);
  if (z.real() < RealHP(0.5)) return ComplexHP(pi) / (sin(ComplexHP(pi) * z) * complex_gamma(one - z));
  // Shift to Re >= 40, then the Stirling series for log Gamma.
  ComplexHP w = z, prod = one;
  while (w.real() < RealHP(40)) {
    prod *= w;
    w += one;
  }
  const ComplexHP w2 = w * w;
  ComplexHP series(0), wp = w;
  for (int k = 1; k <= 40; ++k) {
    const RealHP b = boost::math::bernoulli_b2n<RealHP>(k);
    series += ComplexHP(b / RealHP(2 * k * (2 * k - 1))) / wp;
    wp *= w2;
  }
  const ComplexHP lg = (w - ComplexHP(RealHP(0.5))) * log(w) - w + ComplexHP(log(2 * pi) / 2) + series;
  return exp(lg) / prod;
}

Exponent half_of(const Exponent& x) {
  if (x.is_exact()) return Exponent(Rational(x.exact() / 2));
  return Exponent::from_double(x.approx() / 2);
}

bool cyclotomic_property(const std::vector<Exponent>& exps) {
  std::map<Rational, int> mult;
  for (const auto& e : exps) ++mult[e.reduced().exact()];
  for (const auto& [q, m] : mult) {
    const long long w = to_ll(boost::multiprecision::denominator(q));
    for (long long u = 0; u < w; ++u) {
      if (std::gcd(u, w) != 1) continue;
      auto it = mult.find(Rational(BigInt(u), BigInt(w)));
      if (it == mult.end() || it->second != m) return false;
    }
  }
  return true;
}

bool conjugate_property(const std::vector<Exponent>& exps, double int_tol) {
  // Greedy matching: pairs are determined by value mod Z, so greedy is exact.
  std::vector<bool> used(exps.size(), false);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    if ((exps[j] + exps[j]).is_integer(int_tol)) continue;
    bool found = false;
    for (std::size_t i = j + 1; i < exps.size() && !found; ++i)
      if (!used[i] && (exps[j] + exps[i]).is_integer(int_tol)) {
        used[i] = true;
        found = true;
      }
    if (!found) return false;
  }
  return true;
}

const char* to_string(SnapResult::Kind k) {
  switch (k) {
    case SnapResult::Kind::Integer: return "integer";
    case SnapResult::Kind::Real: return "real";
    case SnapResult::Kind::Unchanged: return "unchanged";
  }
  return "unchanged";
}

SnapResult snap_integral(const StokesPair<Complex>& sp, const HyperParams& p, double snap_tol) {
  SnapResult r;
  r.pair = sp;
  const bool exact = p.exact();
  const bool cyc = exact && cyclotomic_property(p.alpha) && cyclotomic_property(p.beta);
  const bool conj = conjugate_property(p.alpha) && conjugate_property(p.beta);
  if (!cyc && !conj) {
    r.flag = exact ? "not cyclotomic, not conjugate" : "inexact exponents, not conjugate";
    return r;
  }
  r.kind = cyc ? SnapResult::Kind::Integer : SnapResult::Kind::Real;
  auto snap = [&](Matrix<Complex>& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        Complex& x = m(i, j);
        const Complex target = cyc ? Complex(std::round(x.real()), 0.0) : Complex(x.real(), 0.0);
        r.residual = std::max(r.residual, std::abs(x - target));
        x = target;
      }
  };
  snap(r.pair.s_plus);
  snap(r.pair.s_minus);
  if (r.residual > snap_tol)
    fail(ErrorCode::SnapFailure, std::string(cyc ? "integer" : "real") + " snapping moved an entry by " +
                                     std::to_string(r.residual));
  if (!cyc) r.flag = "not cyclotomic";
  return r;
}

}  // namespace hypstokes
