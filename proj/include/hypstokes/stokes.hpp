#pragma once

#include <string>
#include <vector>

#include "hypstokes/monodromy.hpp"

namespace hypstokes {

inline constexpr const char* kOrientation = "alpha_dir = i*rho, beta_dir = 1/rho";

// (S+, S-) on V0 + Vrho with block sizes (r0, rrho); S+ upper and S- lower
// block triangular.
template <class T>
struct StokesPair {
  Matrix<T> s_plus, s_minus;
  int r0 = 0, rrho = 1;
  std::string route;

  int n() const { return s_plus.rows(); }

  void check_shape() const {
    const int n = r0 + rrho;
    if (s_plus.rows() != n || s_plus.cols() != n || s_minus.rows() != n || s_minus.cols() != n)
      fail(ErrorCode::ShapeMismatch, "Stokes matrices do not match the block sizes");
    for (int i = r0; i < n; ++i)
      for (int j = 0; j < r0; ++j)
        if (!is_exactly_zero(s_plus(i, j))) fail(ErrorCode::ShapeMismatch, "S+ must be upper block triangular");
    for (int i = 0; i < r0; ++i)
      for (int j = r0; j < n; ++j)
        if (!is_exactly_zero(s_minus(i, j))) fail(ErrorCode::ShapeMismatch, "S- must be lower block triangular");
  }
};

// Normal form ([[I, z], [0, 1]], M * [[I, 0], [e, 1]]) with M = blockdiag(J, e^{2 pi i lambda}).
template <class T>
struct NormalFormPair {
  std::vector<T> z;
  EigenvalueClusters clusters;
  Exponent lambda_exp;
  Matrix<T> m_inf_minus;

  StokesPair<T> reconstruct() const {
    const int n = static_cast<int>(z.size()) + 1;
    StokesPair<T> sp{Matrix<T>::identity(n), Matrix<T>::identity(n), n - 1, 1, "normal"};
    for (int i = 0; i < n - 1; ++i) sp.s_plus(i, n - 1) = z[i];
    Matrix<T> lower = Matrix<T>::identity(n);
    const auto e = block_lead_row<T>(clusters.block_sizes());
    for (int j = 0; j < n - 1; ++j) lower(n - 1, j) = e[j];
    sp.s_minus = m_inf_minus * lower;
    return sp;
  }
};

template <class T>
StokesPair<T> stokes_from_quiver(const Quiver<T>& q) {
  q.check_shapes();
  const int r0 = q.dim_v0(), rr = q.dim_vrho(), n = r0 + rr;
  StokesPair<T> sp{Matrix<T>::identity(n), Matrix<T>(n, n), r0, rr, "quiver:" + q.basis};
  sp.s_plus.set_block(0, r0, q.u0 * q.vrho);
  sp.s_minus.set_block(0, 0, Matrix<T>::identity(r0) - q.u0 * q.v0);
  sp.s_minus.set_block(r0, 0, T(-1) * (q.urho * q.v0));
  sp.s_minus.set_block(r0, r0, Matrix<T>::identity(rr) - q.urho * q.vrho);
  return sp;
}

template <class T>
T lambda_unit(const HyperParams& p, int sign) {
  return unit<T>(p.lambda_exp(), sign);
}

// S+ = [[I, x], [0, 1]], S- = [[Co(chi_B), 0], [y, e^{2 pi i lambda}]] with
// x_j = A_{n+1-j} - B_{n+1-j} - (A_1 - B_1) B_{n-j} and y = ((-1)^n e^{2 pi i sum beta}, 0, ...).
template <class T>
StokesPair<T> stokes_companion(const HyperParams& p, const Tolerances& tol = {}) {
  require_generic(p, tol.int_tol);
  const int n = p.n();
  const auto chi_a = poly::char_poly<T>(p.alpha, -1);
  const auto chi_b = poly::char_poly<T>(p.beta, -1);
  auto a = [&](int k) { return chi_a.monic_coeff(k); };
  auto b = [&](int k) { return k <= n - 1 ? chi_b.monic_coeff(k) : T(0); };
  StokesPair<T> sp{Matrix<T>::identity(n), Matrix<T>(n, n), n - 1, 1, "companion"};
  const T d1 = a(1) - b(1);
  for (int j = 1; j <= n - 1; ++j) sp.s_plus(j - 1, n - 1) = a(n + 1 - j) - b(n + 1 - j) - d1 * b(n - j);
  if (n > 1) {
    sp.s_minus.set_block(0, 0, companion(chi_b));
    Exponent sb(Rational(0));
    for (const auto& x : p.beta) sb += x;
    const T sign = (n % 2 == 0) ? T(1) : T(-1);
    sp.s_minus(n - 1, 0) = sign * unit<T>(sb, +1);
  }
  sp.s_minus(n - 1, n - 1) = lambda_unit<T>(p, +1);
  return sp;
}

// blockdiag(J of the beta clusters, e^{2 pi i lambda}).
template <class T>
Matrix<T> formal_monodromy(const HyperParams& p, const Tolerances& tol = {}) {
  require_generic(p, tol.int_tol);
  const EigenvalueClusters cl = cluster_beta(p.beta, tol.cluster_tol);
  Matrix<T> m(p.n(), p.n());
  m.set_block(0, 0, jordan_of_clusters(cl.blocks<T>()));
  m(p.n() - 1, p.n() - 1) = lambda_unit<T>(p, +1);
  return m;
}

// z = e^{-2 pi i lambda} (z_1 | ... | z_l), z_j the Taylor vector of
// chi_A / (X prod_{i != j} (X - l_i)^{k_i}) of order k_j at l_j.
template <class T>
NormalFormPair<T> stokes_jordan(const HyperParams& p, const Tolerances& tol = {}) {
  require_generic(p, tol.int_tol);
  const EigenvalueClusters cl = cluster_beta(p.beta, tol.cluster_tol);
  const auto blocks = cl.blocks<T>();
  const auto chi_a = poly::char_poly<T>(p.alpha, -1);
  const T scale = lambda_unit<T>(p, -1);
  std::vector<T> z;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    std::vector<T> roots{T(0)};
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (i != j)
        for (int k = 0; k < blocks[i].kappa; ++k) roots.push_back(blocks[i].lambda);
    const auto den = poly::poly_from_roots(roots);
    const auto tv = poly::taylor_vector(chi_a, den, blocks[j].lambda, blocks[j].kappa);
    for (const auto& v : tv.entries) z.push_back(scale * v);
  }
  return {std::move(z), cl, p.lambda_exp(), formal_monodromy<T>(p, tol)};
}

template <class T>
Matrix<T> topological_monodromy(const StokesPair<T>& sp) {
  return inverse(sp.s_plus) * sp.s_minus;
}

namespace detail {

// Block upper-triangular Toeplitz matrix with first block rows taken from y.
template <class T>
Matrix<T> toeplitz_blocks(const std::vector<T>& y, const std::vector<int>& sizes) {
  const int n = static_cast<int>(y.size());
  Matrix<T> m(n, n);
  int o = 0;
  for (int k : sizes) {
    for (int r = 0; r < k; ++r)
      for (int c = r; c < k; ++c) m(o + r, o + c) = y[o + c - r];
    o += k;
  }
  return m;
}

template <class T>
std::vector<T> probe_vector(int n, int which) {
  std::vector<T> v(n, T(0));
  if (which == 0) {
    v[0] = T(1);
  } else if (which == 1) {
    for (auto& x : v) x = T(1);
  } else {
    // Small distinct integers; deterministic.
    unsigned s = 2654435761u * static_cast<unsigned>(which);
    for (auto& x : v) {
      s = s * 1103515245u + 12345u;
      x = scalar<T>(static_cast<long long>((s >> 16) % 7) - 3);
    }
  }
  return v;
}

template <class T>
bool charpoly_matches(const poly::Polynomial<T>& a, const poly::Polynomial<T>& b, double tol) {
  if (a.degree() != b.degree()) return false;
  for (int k = 0; k <= a.degree(); ++k)
    if (!negligible(a[k] - b[k], tol)) return false;
  return true;
}

}  // namespace detail

// Canonical representative of the class of sp. Right-normalizes S+ to [[I, x], [0, 1]],
// conjugates the upper-left block of S- to J (cyclic vector + generalized
// Vandermonde), then applies the Jordan-commuting block Toeplitz correction that
// turns the lower-left row into m * e.
template <class T>
NormalFormPair<T> normalize(const StokesPair<T>& sp, const EigenvalueClusters& clusters, const Exponent& lambda_exp,
                            double tol = 1e-8) {
  sp.check_shape();
  const int n = sp.n();
  if (sp.rrho != 1) fail(ErrorCode::ShapeMismatch, "normal form needs a one-dimensional Phi_rho block");
  if (clusters.total() != n - 1) fail(ErrorCode::ShapeMismatch, "clusters do not match the Stokes block size");
  const int r = n - 1;

  const Matrix<T> p = sp.s_plus.block(0, 0, r, r);
  const T s = sp.s_plus(r, r);
  if (negligible(s, 1e-14)) fail(ErrorCode::ShapeMismatch, "S+ has a singular lower-right entry");
  const Matrix<T> pinv = r > 0 ? inverse(p) : Matrix<T>();
  const Matrix<T> l = r > 0 ? sp.s_minus.block(0, 0, r, r) * pinv : Matrix<T>();
  const std::vector<T> y = r > 0 ? (sp.s_minus.block(r, 0, 1, r) * pinv).row_vector(0) : std::vector<T>{};
  const T m = sp.s_minus(r, r) / s;
  std::vector<T> x(r);
  for (int i = 0; i < r; ++i) x[i] = sp.s_plus(i, r) / s;

  const auto blocks = clusters.template blocks<T>();
  const Matrix<T> j = jordan_of_clusters(blocks);
  NormalFormPair<T> nf;
  nf.clusters = clusters;
  nf.lambda_exp = lambda_exp;
  nf.m_inf_minus = Matrix<T>(n, n);
  nf.m_inf_minus.set_block(0, 0, j);
  nf.m_inf_minus(r, r) = m;
  if (r == 0) return nf;

  const double scale = std::max(1.0, l.max_abs());
  if (!detail::charpoly_matches(charpoly(l), poly_of_clusters(blocks), 1e-7 * scale))
    fail(ErrorCode::ShapeMismatch, "upper-left block of S- is not conjugate to the formal monodromy");

  Matrix<T> g;
  if (max_abs_diff(l, j) == 0) {
    g = Matrix<T>::identity(r);
  } else {
    const Matrix<T> h = transition_H(blocks, r);
    for (int attempt = 0; attempt < 6 && g.rows() == 0; ++attempt) {
      std::vector<T> v = detail::probe_vector<T>(r, attempt);
      Matrix<T> k(r, r);
      for (int c = 0; c < r; ++c) {
        for (int i = 0; i < r; ++i) k(i, c) = v[i];
        v = l * v;
      }
      try {
        Matrix<T> cand = h * inverse(k);
        if (max_abs_diff(cand * l, j * cand) <= 1e-6 * scale * std::max(1.0, cand.max_abs())) g = std::move(cand);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularMatrix) throw;
      }
    }
    if (g.rows() == 0) fail(ErrorCode::ShapeMismatch, "upper-left block of S- is not cyclic");
  }

  const Matrix<T> ginv = inverse(g);
  const std::vector<T> yp = (Matrix<T>::row(y) * ginv).row_vector(0);
  const std::vector<T> xp = g * x;
  std::vector<T> lead(r);
  const auto sizes = clusters.block_sizes();
  for (std::size_t b = 0, o = 0; b < sizes.size(); o += sizes[b], ++b)
    if (negligible(yp[o], tol * std::max(1.0, magnitude(m))))
      fail(ErrorCode::ZeroLeadingEntry, "lower-left row vanishes at the start of a Jordan block");
  for (int i = 0; i < r; ++i) lead[i] = yp[i] / m;
  nf.z = detail::toeplitz_blocks(lead, sizes) * xp;
  return nf;
}

template <class T>
double normal_form_distance(const NormalFormPair<T>& a, const NormalFormPair<T>& b) {
  if (a.z.size() != b.z.size() || !(a.clusters.block_sizes() == b.clusters.block_sizes()))
    return std::numeric_limits<double>::infinity();
  return std::max(max_abs_diff(a.z, b.z), max_abs_diff(a.m_inf_minus, b.m_inf_minus));
}

template <class T>
bool pairs_equivalent(const StokesPair<T>& p1, const StokesPair<T>& p2, const EigenvalueClusters& clusters,
                      double tol) {
  if (p1.r0 != p2.r0 || p1.rrho != p2.rrho) return false;
  const Exponent none;
  return normal_form_distance(normalize(p1, clusters, none, tol), normalize(p2, clusters, none, tol)) <= tol;
}

}  // namespace hypstokes
