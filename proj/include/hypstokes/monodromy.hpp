#pragma once

#include <string>
#include <vector>

#include "hypstokes/matrices.hpp"

namespace hypstokes {

// phi with phi A phi^-1 and phi B phi^-1 both companion matrices. v spans the
// vectors whose first n-1 iterates under A stay in ker(A - B); the new basis is
// v, Av, ..., A^{n-1}v.
template <class T>
Matrix<T> levelt_basis(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.square() || a.rows() != b.rows() || !b.square())
    fail(ErrorCode::InvalidArgument, "levelt_basis needs two square matrices of equal size");
  const int n = a.rows();
  const Matrix<T> d = a - b;
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  const double tol = 1e-10 * scale;
  const int rk = rank(d, tol);
  if (rk != 1) fail(ErrorCode::HypothesesViolated, "A - B has rank " + std::to_string(rk) + ", expected 1");
  Matrix<T> stacked(n * std::max(n - 1, 1), n);
  Matrix<T> ai = Matrix<T>::identity(n);
  for (int i = 0; i < std::max(n - 1, 1); ++i) {
    stacked.set_block(i * n, 0, d * ai);
    ai = a * ai;
  }
  if (n == 1) stacked = Matrix<T>(1, 1);  // no condition: every v works
  const Matrix<T> u = nullspace(stacked, tol);
  if (u.cols() != 1)
    fail(ErrorCode::HypothesesViolated, "common cyclic subspace has dimension " + std::to_string(u.cols()) + ", expected 1");
  Matrix<T> k(n, n);
  std::vector<T> v = u.column_vector(0);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) k(r, i) = v[r];
    v = a * v;
  }
  return inverse(k);
}

template <class T>
struct MonodromyTriple {
  Matrix<T> T0, Trho, Tinf;
};

// T0 = Co(e^{2 pi i gamma}), Tinf^-1 = Co(e^{2 pi i eta}), Trho = Co(eta) Co(gamma)^-1.
template <class T>
MonodromyTriple<T> rs_monodromy(const RSParams& rs) {
  if (rs.gamma.size() != rs.eta.size() || rs.gamma.empty())
    fail(ErrorCode::InvalidArgument, "gamma and eta must have equal positive length");
  for (const auto& g : rs.gamma)
    for (const auto& e : rs.eta)
      if ((g - e).is_integer(Tolerances{}.int_tol))
        fail(ErrorCode::NotGeneric, "resonant exponents " + g.to_string() + ", " + e.to_string());
  const Matrix<T> cg = companion(poly::char_poly<T>(rs.gamma, +1));
  const Matrix<T> ce = companion(poly::char_poly<T>(rs.eta, +1));
  const Matrix<T> cgi = inverse(cg);
  return {cg, ce * cgi, inverse(ce)};
}

// Phi_0 <-> Psi <-> Phi_rho with u_c : Psi -> Phi_c and v_c : Phi_c -> Psi.
template <class T>
struct Quiver {
  Matrix<T> u0, v0, urho, vrho;
  std::string basis;  // how the bases were chosen

  int dim_v0() const { return u0.rows(); }
  int dim_w() const { return u0.cols(); }
  int dim_vrho() const { return urho.rows(); }

  void check_shapes() const {
    const int w = dim_w();
    if (v0.rows() != w || v0.cols() != dim_v0() || urho.cols() != w || vrho.rows() != w ||
        vrho.cols() != dim_vrho())
      fail(ErrorCode::InvalidQuiver, "quiver maps have inconsistent dimensions");
  }
};

struct QuiverCheck {
  std::string name;
  bool passed;
};

struct ValidationReport {
  std::vector<QuiverCheck> checks;
  bool valid() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

template <class T>
ValidationReport quiver_validate(const Quiver<T>& q) {
  q.check_shapes();
  ValidationReport r;
  const int w = q.dim_w();
  const double eps = std::is_same_v<T, ComplexHP> ? 1e-35 : 1e-10;
  auto invertible = [&](const Matrix<T>& m) {
    if (m.rows() == 0) return true;
    return rank(m, eps * std::max(1.0, m.max_abs())) == m.rows();
  };
  auto full_rank = [&](const Matrix<T>& m, int want) {
    if (want == 0) return true;
    return rank(m, eps * std::max(1.0, m.max_abs())) == want;
  };
  r.checks.push_back({"T0_invertible", invertible(Matrix<T>::identity(w) - q.v0 * q.u0)});
  r.checks.push_back({"Trho_invertible", invertible(Matrix<T>::identity(w) - q.vrho * q.urho)});
  r.checks.push_back({"v0_injective", full_rank(q.v0, q.dim_v0())});
  r.checks.push_back({"vrho_injective", full_rank(q.vrho, q.dim_vrho())});
  r.checks.push_back({"u0_surjective", full_rank(q.u0, q.dim_v0())});
  r.checks.push_back({"urho_surjective", full_rank(q.urho, q.dim_vrho())});
  return r;
}

// Quiver with companion-type bases, using chi_C = char_poly(gamma, +) and
// chi_E = char_poly(eta, +) on the regular-singular side.
template <class T>
Quiver<T> quiver_companion(const HyperParams& p, const Tolerances& tol = {}) {
  const RSParams rs = to_rs_params(p, tol.int_tol);
  const int n = p.n();
  const auto c = poly::char_poly<T>(rs.gamma, +1);
  const auto e = poly::char_poly<T>(rs.eta, +1);
  Quiver<T> q{Matrix<T>(n - 1, n), Matrix<T>(n, n - 1), Matrix<T>(1, n), Matrix<T>(n, 1), "companion"};
  T partial(0);
  for (int i = 0; i < n - 1; ++i) {
    q.u0(i, i) = T(1);
    partial = partial + c.monic_coeff(n - i);
    q.u0(i, n - 1) = partial;
    q.v0(i, i) = T(1);
    q.v0(i + 1, i) = T(-1);
  }
  q.urho(0, 0) = -(T(1) / c.monic_coeff(n));
  for (int i = 0; i < n; ++i) q.vrho(i, 0) = e.monic_coeff(n - i) - c.monic_coeff(n - i);
  return q;
}

// e = (1,0,...,0 | ... | 1,0,...,0) with the given block sizes.
template <class T>
std::vector<T> block_lead_row(const std::vector<int>& sizes) {
  std::vector<T> e;
  for (int k : sizes) {
    e.push_back(T(1));
    for (int i = 1; i < k; ++i) e.push_back(T(0));
  }
  return e;
}

// Quiver in Jordan bases over the clusters of gamma (eigenvalue 1 last).
template <class T>
Quiver<T> quiver_jordan(const HyperParams& p, const Tolerances& tol = {}) {
  const RSParams rs = to_rs_params(p, tol.int_tol);
  const int n = p.n();
  const EigenvalueClusters cl = rs_clusters(p.beta, tol.cluster_tol);
  const auto blocks = cl.blocks<T>();
  const auto chi_c = poly::char_poly<T>(rs.gamma, +1);
  const auto chi_e = poly::char_poly<T>(rs.eta, +1);
  const Matrix<T> j = jordan_of_clusters(blocks);
  const Commutant<T> a = commutant_A(chi_c, blocks);
  const Matrix<T> one_minus_j = Matrix<T>::identity(n) - j;

  Quiver<T> q;
  q.basis = "jordan";
  q.u0 = one_minus_j.block(0, 0, n - 1, n);
  q.v0 = Matrix<T>(n, n - 1);
  for (int i = 0; i < n - 1; ++i) q.v0(i, i) = T(1);
  q.urho = Matrix<T>::row(block_lead_row<T>(cl.block_sizes())) * a.Ainv * inverse(j);
  std::vector<T> frv;
  const auto one = poly::Polynomial<T>::constant(T(1));
  for (const auto& b : blocks) {
    auto tv = poly::taylor_vector(chi_e, one, b.lambda, b.kappa);
    frv.insert(frv.end(), tv.entries.begin(), tv.entries.end());
  }
  q.vrho = Matrix<T>::column(frv);
  return q;
}

namespace detail {

// Column basis of im(m) (pivot columns) and coordinates u with m = basis * u.
template <class T>
std::pair<Matrix<T>, Matrix<T>> image_factorization(const Matrix<T>& m) {
  const double tol = rank_tolerance(m);
  const auto ech = row_reduce(m, tol);
  const int r = static_cast<int>(ech.pivot_cols.size());
  Matrix<T> basis(m.rows(), r);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < m.rows(); ++i) basis(i, k) = m(i, ech.pivot_cols[k]);
  // Coordinates: the nonzero rows of the reduced echelon form.
  return {basis, ech.reduced.block(0, 0, r, m.cols())};
}

}  // namespace detail

// Middle-extension quiver of a monodromy pair: Phi_c = im(1 - T_c), u_c = 1 - T_c
// onto its image, v_c the inclusion.
template <class T>
Quiver<T> quiver_from_monodromy(const Matrix<T>& t0, const Matrix<T>& trho) {
  const int n = t0.rows();
  auto [b0, c0] = detail::image_factorization(Matrix<T>::identity(n) - t0);
  auto [br, cr] = detail::image_factorization(Matrix<T>::identity(n) - trho);
  return {c0, b0, cr, br, "monodromy"};
}

}  // namespace hypstokes
