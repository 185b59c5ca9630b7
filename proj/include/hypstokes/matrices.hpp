#pragma once

#include <vector>

#include "hypstokes/matrix.hpp"
#include "hypstokes/params.hpp"
#include "hypstokes/polyseries.hpp"

namespace hypstokes {

// Companion matrix: ones on the subdiagonal, last column (-A_n, ..., -A_1)^T.
template <class T>
Matrix<T> companion(const poly::Polynomial<T>& p) {
  const int n = p.degree();
  if (n < 1) fail(ErrorCode::InvalidArgument, "companion matrix needs degree >= 1");
  if (!negligible(p.leading() - T(1), 1e-12)) fail(ErrorCode::InvalidArgument, "companion matrix needs a monic polynomial");
  Matrix<T> m(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = T(1);
  for (int i = 0; i < n; ++i) m(i, n - 1) = -p[i];
  return m;
}

// Upper Jordan blocks J(lambda_j) of size kappa_j, in the given order.
template <class T>
Matrix<T> jordan_of_clusters(const std::vector<EigenBlock<T>>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.kappa;
  Matrix<T> j(n, n);
  int o = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.kappa; ++i) {
      j(o + i, o + i) = b.lambda;
      if (i + 1 < b.kappa) j(o + i, o + i + 1) = T(1);
    }
    o += b.kappa;
  }
  return j;
}

template <class T>
poly::Polynomial<T> poly_of_clusters(const std::vector<EigenBlock<T>>& blocks) {
  std::vector<T> roots;
  for (const auto& b : blocks)
    for (int i = 0; i < b.kappa; ++i) roots.push_back(b.lambda);
  return poly::poly_from_roots(roots);
}

namespace detail {

template <class T>
void require_distinct(const std::vector<EigenBlock<T>>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].kappa < 1) fail(ErrorCode::InvalidArgument, "cluster multiplicity must be positive");
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (negligible(blocks[i].lambda - blocks[j].lambda, 1e-12))
        fail(ErrorCode::InvalidArgument, "duplicate cluster eigenvalue");
  }
}

// binom(m, d) as a scalar, built by the multiplicative recurrence.
template <class T>
T binomial(int m, int d) {
  if (d < 0 || d > m) return T(0);
  long long b = 1;
  for (int i = 1; i <= d; ++i) b = b * (m - d + i) / i;
  return scalar<T>(b);
}

template <class T>
T power(const T& x, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace detail

// Generalized Vandermonde matrix: for each cluster, rows r^{(k-1)}/(k-1)!, ..., r',
// r with r(l) = (1, l, ..., l^{n-1}); H * Co = J * H.
template <class T>
Matrix<T> transition_H(const std::vector<EigenBlock<T>>& blocks, int n) {
  detail::require_distinct(blocks);
  int total = 0;
  for (const auto& b : blocks) total += b.kappa;
  if (total != n) fail(ErrorCode::InvalidArgument, "cluster multiplicities must sum to n");
  Matrix<T> h(n, n);
  int row = 0;
  for (const auto& b : blocks) {
    for (int d = b.kappa - 1; d >= 0; --d, ++row)
      for (int m = d; m < n; ++m) h(row, m) = detail::binomial<T>(m, d) * detail::power(b.lambda, m - d);
  }
  return h;
}

// Columns c, c', ..., c^{(k-1)}/(k-1)! per cluster, where c(l) is the eigenvector of
// companion(p) for l normalized to last entry 1: c_i(l) = sum_{k <= n-1-i} A_k l^{n-1-i-k}.
template <class T>
Matrix<T> transition_Kinv(const poly::Polynomial<T>& p, const std::vector<EigenBlock<T>>& blocks) {
  detail::require_distinct(blocks);
  const int n = p.degree();
  int total = 0;
  for (const auto& b : blocks) total += b.kappa;
  if (total != n) fail(ErrorCode::InvalidArgument, "cluster multiplicities must match the polynomial degree");
  // c_i as a polynomial in l, ascending coefficients.
  std::vector<poly::Polynomial<T>> entries;
  for (int i = 0; i < n; ++i) {
    const int d = n - 1 - i;
    std::vector<T> c(d + 1, T(0));
    for (int k = 0; k <= d; ++k) c[d - k] = p.monic_coeff(k);
    entries.emplace_back(std::move(c));
  }
  Matrix<T> k(n, n);
  int col = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < n; ++i) {
      auto jet = poly::jet_of_polynomial(entries[i], b.lambda, b.kappa);
      for (int d = 0; d < b.kappa; ++d) k(i, col + d) = jet.coeffs[d];
    }
    col += b.kappa;
  }
  return k;
}

// p / (X - l)^k by synthetic division, remainder discarded.
template <class T>
poly::Polynomial<T> deflate(const poly::Polynomial<T>& p, const T& l, int k) {
  std::vector<T> c = p.coeffs();
  for (int r = 0; r < k; ++r) {
    const int d = static_cast<int>(c.size()) - 1;
    if (d < 1) fail(ErrorCode::InvalidArgument, "cannot deflate past degree 0");
    std::vector<T> q(d, T(0));
    q[d - 1] = c[d];
    for (int i = d - 1; i >= 1; --i) q[i - 1] = c[i] + l * q[i];
    c = std::move(q);
  }
  return poly::Polynomial<T>(std::move(c));
}

template <class T>
Matrix<T> to_matrix(const poly::TaylorMatrix<T>& tm) {
  const int k = tm.size();
  Matrix<T> m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) m(r, c) = tm.at(r, c);
  return m;
}

template <class T>
struct Commutant {
  Matrix<T> A;
  Matrix<T> Ainv;
};

// A = H * Kinv, block-diagonal with Taylor matrices of p / (X - l_j)^{k_j} at l_j;
// Ainv uses the reciprocal jets.
template <class T>
Commutant<T> commutant_A(const poly::Polynomial<T>& p, const std::vector<EigenBlock<T>>& blocks) {
  detail::require_distinct(blocks);
  std::vector<Matrix<T>> a, ai;
  const auto one = poly::Polynomial<T>::constant(T(1));
  for (const auto& b : blocks) {
    const auto chi = deflate(p, b.lambda, b.kappa);
    a.push_back(to_matrix(poly::taylor_matrix(chi, one, b.lambda, b.kappa)));
    ai.push_back(to_matrix(poly::taylor_matrix(one, chi, b.lambda, b.kappa)));
  }
  return {block_diag(a), block_diag(ai)};
}

// a_{j,k} = p^{(k_j + k)}(l_j) / (k_j + k)!, k = 0..k_j - 1: the commutant entries read
// directly off the expansion of p at l_j.
template <class T>
std::vector<std::vector<T>> commutant_coefficients(const poly::Polynomial<T>& p,
                                                   const std::vector<EigenBlock<T>>& blocks) {
  std::vector<std::vector<T>> out;
  for (const auto& b : blocks) {
    auto jet = poly::jet_of_polynomial(p, b.lambda, 2 * b.kappa);
    out.emplace_back(jet.coeffs.begin() + b.kappa, jet.coeffs.end());
  }
  return out;
}

}  // namespace hypstokes
