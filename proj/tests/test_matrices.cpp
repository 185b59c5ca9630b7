#include <doctest.h>

#include <random>

#include "hypstokes/matrices.hpp"
#include "oracle.hpp"

using namespace hypstokes;

namespace {

Matrix<Complex> random_matrix(std::mt19937_64& g, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  Matrix<Complex> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(u(g), u(g));
  return m;
}

Matrix<ComplexHP> to_hp(const Matrix<Complex>& m) {
  Matrix<ComplexHP> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = ComplexHP(m(i, j).real(), m(i, j).imag());
  return out;
}

// Entries from Q(zeta_12): small integer combinations of roots of unity.
Matrix<Cyclotomic> random_cyclotomic(std::mt19937_64& g, int n) {
  std::uniform_int_distribution<int> k(0, 11), c(-2, 2);
  Matrix<Cyclotomic> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = Cyclotomic(c(g)) * Cyclotomic::root_of_unity(Rational(k(g), 12)) + Cyclotomic(c(g));
  return m;
}

}  // namespace

TEST_CASE("charpoly agrees with principal minors") {
  std::mt19937_64 g(7);
  for (int n = 1; n <= 6; ++n) {
    const auto m = random_matrix(g, n);
    const auto ref = oracle::charpoly_minors(m);
    CHECK(oracle::max_diff(charpoly(m).coeffs(), ref) < 1e-12);
    const auto hp = charpoly(to_hp(m));
    std::vector<Complex> hpc;
    for (const auto& c : hp.coeffs()) hpc.push_back(approx(c));
    CHECK(oracle::max_diff(hpc, ref) < 1e-12);
  }
}

TEST_CASE("exact charpoly and determinant") {
  std::mt19937_64 g(3);
  for (int n = 1; n <= 4; ++n) {
    const auto m = random_cyclotomic(g, n);
    CHECK(charpoly(m).coeffs() == oracle::charpoly_minors(m));
    CHECK(determinant(m) == oracle::det_laplace(m));
  }
}

TEST_CASE("determinant and inverse in double") {
  std::mt19937_64 g(11);
  for (int n = 1; n <= 6; ++n) {
    const auto m = random_matrix(g, n);
    CHECK(std::abs(determinant(m) - oracle::det_laplace(m)) < 1e-12);
    CHECK(max_abs_diff(m * inverse(m), Matrix<Complex>::identity(n)) < 1e-11);
  }
}

TEST_CASE("singular matrices are reported") {
  Matrix<Complex> m(2, 2, {1, 2, 2, 4});
  try {
    inverse(m);
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
  CHECK(std::abs(determinant(m)) == 0.0);
  Matrix<Cyclotomic> z(2, 2, {Cyclotomic(1), Cyclotomic(2), Cyclotomic(2), Cyclotomic(4)});
  CHECK_THROWS_AS(inverse(z), Error);
}

TEST_CASE("rank and nullspace") {
  Matrix<Complex> m(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, Complex(0, 1), 0});
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m, rank_tolerance(m));
  CHECK(ns.cols() == 2);
  CHECK((m * ns).max_abs() < 1e-12);
  CHECK(rank(Matrix<Complex>::identity(5)) == 5);
}

TEST_CASE("companion, Jordan and transition matrices") {
  using C = Cyclotomic;
  const C w = C::root_of_unity(Rational(1, 5)), v = C::root_of_unity(Rational(2, 3));
  const std::vector<EigenBlock<C>> blocks{{w, 3}, {v, 1}, {C(-1), 2}};
  const int n = 6;
  const auto p = poly_of_clusters(blocks);
  const auto co = companion(p);
  const auto j = jordan_of_clusters(blocks);
  CHECK(charpoly(co).coeffs() == p.coeffs());
  const auto h = transition_H(blocks, n);
  const auto kinv = transition_Kinv(p, blocks);
  CHECK(h * co == j * h);
  CHECK(co * kinv == kinv * j);
  const auto a = commutant_A(p, blocks);
  CHECK(h * kinv == a.A);
  CHECK(a.A * a.Ainv == Matrix<C>::identity(n));
  CHECK(a.A * j == j * a.A);
  const auto coef = commutant_coefficients(p, blocks);
  int o = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int k = 0; k < blocks[b].kappa; ++k) CHECK(coef[b][k] == a.A(o, o + k));
    o += blocks[b].kappa;
  }
}

TEST_CASE("transition matrices reject bad cluster data") {
  const std::vector<EigenBlock<Complex>> dup{{Complex(1), 1}, {Complex(1), 1}};
  CHECK_THROWS_AS(transition_H(dup, 2), Error);
  const std::vector<EigenBlock<Complex>> ok{{Complex(1), 1}, {Complex(-1), 1}};
  CHECK_THROWS_AS(transition_H(ok, 3), Error);
  CHECK_THROWS_AS(companion(poly::Polynomial<Complex>(std::vector<Complex>{1, 2})), Error);
}
