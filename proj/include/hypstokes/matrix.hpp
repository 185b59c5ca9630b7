#pragma once

#include <algorithm>
#include <vector>

#include "hypstokes/polyseries.hpp"
#include "hypstokes/scalar.hpp"

namespace hypstokes {

// Dense row-major matrix over one of the scalar back ends.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {
    if (rows < 0 || cols < 0) fail(ErrorCode::InvalidArgument, "negative matrix dimension");
  }
  Matrix(int rows, int cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
      fail(ErrorCode::InvalidArgument, "matrix data size mismatch");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix column(const std::vector<T>& v) { return Matrix(static_cast<int>(v.size()), 1, v); }
  static Matrix row(const std::vector<T>& v) { return Matrix(1, static_cast<int>(v.size()), v); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<T>& data() const { return data_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix block(int r0, int c0, int h, int w) const {
    if (r0 < 0 || c0 < 0 || r0 + h > rows_ || c0 + w > cols_) fail(ErrorCode::InvalidArgument, "block out of range");
    Matrix b(h, w);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(int r0, int c0, const Matrix& b) {
    if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
      fail(ErrorCode::InvalidArgument, "block out of range");
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
  std::vector<T> row_vector(int r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                          data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
  }
  std::vector<T> column_vector(int c) const {
    std::vector<T> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_exactly_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) fail(ErrorCode::InvalidArgument, "matrix-vector dimension mismatch");
    std::vector<T> r(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }
  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& x : data_) m = std::max(m, magnitude(x));
    return m;
  }
  double max_row_norm() const {
    double m = 0;
    for (int i = 0; i < rows_; ++i) {
      double s = 0;
      for (int j = 0; j < cols_; ++j) s += magnitude((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  Matrix<Complex> approx() const {
    Matrix<Complex> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = hypstokes::approx((*this)(i, j));
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::InvalidArgument, "matrix dimension mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "matrix dimension mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, magnitude(a.data()[i] - b.data()[i]));
  return m;
}

template <class T>
double max_abs_diff(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vector length mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, magnitude(a[i] - b[i]));
  return m;
}

template <class T>
Matrix<T> block_diag(const std::vector<Matrix<T>>& blocks) {
  int n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Matrix<T> r(n, m);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    r.set_block(ro, co, b);
    ro += b.rows();
    co += b.cols();
  }
  return r;
}

namespace detail {

// Gaussian elimination on [a | rhs] with partial pivoting. Returns false if a
// pivot is negligible. Also accumulates the determinant.
template <class T>
bool eliminate(Matrix<T>& a, Matrix<T>& rhs, T& det) {
  const int n = a.rows();
  const double tol = 1e-12 * a.max_row_norm();
  det = T(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    double best = -1;
    for (int r = c; r < n; ++r) {
      if (is_exactly_zero(a(r, c))) continue;
      const double m = pivot_score(a(r, c));
      if (piv < 0 || m > best) {
        best = m;
        piv = r;
      }
    }
    if (piv < 0 || negligible(a(piv, c), tol)) {
      det = T(0);
      return false;
    }
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs(c, j), rhs(piv, j));
      det = -det;
    }
    det = det * a(c, c);
    const T inv = T(1) / a(c, c);
    for (int r = 0; r < n; ++r) {
      if (r == c || is_exactly_zero(a(r, c))) continue;
      const T f = a(r, c) * inv;
      for (int j = c; j < n; ++j) a(r, j) = a(r, j) - f * a(c, j);
      for (int j = 0; j < rhs.cols(); ++j) rhs(r, j) = rhs(r, j) - f * rhs(c, j);
    }
  }
  for (int r = 0; r < n; ++r) {
    const T inv = T(1) / a(r, r);
    for (int j = 0; j < rhs.cols(); ++j) rhs(r, j) = rhs(r, j) * inv;
  }
  return true;
}

}  // namespace detail

// Solves a * X = b. SingularMatrix if a pivot falls below 1e-12 * max row norm
// (exact types: an exactly zero pivot).
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.square() || a.rows() != b.rows()) fail(ErrorCode::InvalidArgument, "solve dimension mismatch");
  Matrix<T> m = a, rhs = b;
  T det;
  if (!detail::eliminate(m, rhs, det)) fail(ErrorCode::SingularMatrix, "matrix is singular to working tolerance");
  return rhs;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

template <class T>
T determinant(const Matrix<T>& a) {
  if (!a.square()) fail(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  Matrix<T> m = a, rhs(a.rows(), 0);
  T det;
  detail::eliminate(m, rhs, det);
  return det;
}

// Row echelon data used by rank and nullspace. Entries below tol count as zero.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<int> pivot_cols;
};

template <class T>
Echelon<T> row_reduce(const Matrix<T>& a, double tol) {
  Matrix<T> m = a;
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int piv = -1;
    double best = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (negligible(m(r, c), tol)) continue;
      const double v = pivot_score(m(r, c));
      if (piv < 0 || v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
    const T inv = T(1) / m(row, c);
    for (int j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || is_exactly_zero(m(r, c))) continue;
      const T f = m(r, c);
      for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

// Default rank tolerance: 1e-10 times the largest entry (at least 1).
template <class T>
double rank_tolerance(const Matrix<T>& a) {
  return 1e-10 * std::max(1.0, a.max_abs());
}

template <class T>
int rank(const Matrix<T>& a, double tol) {
  return static_cast<int>(row_reduce(a, tol).pivot_cols.size());
}

template <class T>
int rank(const Matrix<T>& a) {
  return rank(a, rank_tolerance(a));
}

// Basis of the right nullspace, one column per free variable.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a, double tol) {
  auto [m, pivots] = row_reduce(a, tol);
  std::vector<int> free;
  for (int c = 0, p = 0; c < a.cols(); ++c) {
    if (p < static_cast<int>(pivots.size()) && pivots[p] == c)
      ++p;
    else
      free.push_back(c);
  }
  Matrix<T> basis(a.cols(), static_cast<int>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], static_cast<int>(k)) = T(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) basis(pivots[p], static_cast<int>(k)) = -m(static_cast<int>(p), free[k]);
  }
  return basis;
}

namespace detail {

// Division-free (Berkowitz): for exact scalars, where field inverses inflate
// coefficients.
template <class T>
poly::Polynomial<T> charpoly_berkowitz(const Matrix<T>& a) {
  const int n = a.rows();
  std::vector<T> p{T(1), T(0) - a(0, 0)};  // descending
  for (int k = 1; k < n; ++k) {
    // Leading (k+1) x (k+1) minor from the k x k one.
    std::vector<T> items{T(1), T(0) - a(k, k)};
    std::vector<T> v(k);
    for (int i = 0; i < k; ++i) v[i] = a(i, k);
    for (int step = 0; step < k; ++step) {
      T rv(0);
      for (int j = 0; j < k; ++j) rv = rv + a(k, j) * v[j];
      items.push_back(T(0) - rv);
      if (step + 1 == k) break;
      std::vector<T> w(k, T(0));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (!is_exactly_zero(a(i, j))) w[i] = w[i] + a(i, j) * v[j];
      v = std::move(w);
    }
    std::vector<T> q(k + 2, T(0));
    for (int i = 0; i < k + 2; ++i)
      for (int j = 0; j <= std::min(i, k); ++j)
        if (!is_exactly_zero(p[j])) q[i] = q[i] + items[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return poly::Polynomial<T>(std::move(p));
}

}  // namespace detail

// Characteristic polynomial det(X - M): similarity reduction to upper
// Hessenberg form (largest pivot for floats), then the usual recurrence on the
// leading principal minors.
template <class T>
poly::Polynomial<T> charpoly(const Matrix<T>& a) {
  if (!a.square()) fail(ErrorCode::InvalidArgument, "charpoly of non-square matrix");
  const int n = a.rows();
  if (n == 0) return poly::Polynomial<T>::constant(T(1));
  if constexpr (ScalarTraits<T>::exact) return detail::charpoly_berkowitz(a);
  Matrix<T> h = a;
  for (int m = 1; m < n; ++m) {
    int piv = -1;
    double best = 0;
    for (int i = m; i < n; ++i) {
      if (is_exactly_zero(h(i, m - 1))) continue;
      const double score = pivot_score(h(i, m - 1));
      if (piv < 0 || score > best) {
        piv = i;
        best = score;
      }
    }
    if (piv < 0) continue;
    if (piv != m) {
      for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const T inv = T(1) / h(m, m - 1);
    for (int i = m + 1; i < n; ++i) {
      if (is_exactly_zero(h(i, m - 1))) continue;
      const T u = h(i, m - 1) * inv;
      for (int j = 0; j < n; ++j) h(i, j) = h(i, j) - u * h(m, j);
      for (int j = 0; j < n; ++j) h(j, m) = h(j, m) + u * h(j, i);
    }
  }
  using P = poly::Polynomial<T>;
  std::vector<P> ps{P::constant(T(1))};
  for (int m = 1; m <= n; ++m) {
    P next = P::x() * ps[m - 1] - P::constant(h(m - 1, m - 1)) * ps[m - 1];
    T t(1);
    for (int i = 1; i < m; ++i) {
      t = t * h(m - i, m - i - 1);
      next = next - P::constant(t * h(m - i - 1, m - 1)) * ps[m - i - 1];
    }
    ps.push_back(std::move(next));
  }
  return ps[n];
}

}  // namespace hypstokes
