#include <doctest.h>

#include <random>

#include "oracle.hpp"

using namespace hypstokes;

namespace {

bool is_companion_of(const Matrix<Cyclotomic>& m, const poly::Polynomial<Cyclotomic>& p) {
  return m == companion(p);
}

}  // namespace

TEST_CASE("Levelt basis turns a rank-one pair into companions") {
  using C = Cyclotomic;
  const auto p = make_params({"1/3", "1/4", "-1/6"}, {"1/5", "2/5"});
  auto ca = companion(poly::char_poly<C>(p.alpha, -1));
  auto cb = companion(poly::char_poly<C>(p.beta, -1) * poly::Polynomial<C>(std::vector<C>{C(-1), C(1)}));
  // conjugate by a unimodular integer matrix
  Matrix<C> g(3, 3, {C(1), C(2), C(0), C(0), C(1), C(-1), C(1), C(0), C(1)});
  const auto gi = inverse(g);
  const auto a = g * ca * gi, b = g * cb * gi;
  const auto phi = levelt_basis(a, b);
  const auto phii = inverse(phi);
  CHECK(is_companion_of(phi * a * phii, charpoly(a)));
  CHECK(is_companion_of(phi * b * phii, charpoly(b)));
}

TEST_CASE("Levelt basis rejects pairs that are not rank-one perturbations") {
  const auto id = Matrix<Complex>::identity(3);
  CHECK_THROWS_AS(levelt_basis(id, id), Error);
  Matrix<Complex> d = id;
  d(0, 0) = 2;
  d(1, 1) = 3;
  try {
    levelt_basis(id, d);
    FAIL("expected HypothesesViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesesViolated);
  }
}

TEST_CASE("regular-singular monodromy triple") {
  const auto p = make_params({"1/3", "1/4", "-1/6", "3/7"}, {"1/5", "1/5", "2/5"});
  const auto rs = to_rs_params(p);
  const auto m = rs_monodromy<Cyclotomic>(rs);
  const int n = 4;
  CHECK(m.Tinf * m.Trho * m.T0 == Matrix<Cyclotomic>::identity(n));
  CHECK(charpoly(m.T0).coeffs() == poly::char_poly<Cyclotomic>(rs.gamma, +1).coeffs());
  CHECK(charpoly(inverse(m.Tinf)).coeffs() == poly::char_poly<Cyclotomic>(rs.eta, +1).coeffs());
  CHECK(rank(Matrix<Cyclotomic>::identity(n) - m.Trho, 0.0) == 1);
  RSParams bad = rs;
  bad.eta[0] = bad.gamma[0] + Exponent(Rational(2));
  CHECK_THROWS_AS(rs_monodromy<Complex>(bad), Error);
}

TEST_CASE("quivers are valid and give equivalent Stokes data") {
  for (const auto& p : {make_params({"1/3", "1/4", "-1/6"}, {"1/5", "6/5"}),
                        make_params({"1/2"}, {}),
                        make_params({"1/7", "2/7", "3/7", "4/7", "5/7"}, {"0", "1/2", "1/3", "4/3"})}) {
    const auto cl = cluster_beta(p.beta);
    const auto qc = quiver_companion<Complex>(p);
    const auto qj = quiver_jordan<Complex>(p);
    CHECK(quiver_validate(qc).valid());
    CHECK(quiver_validate(qj).valid());
    const auto ref = stokes_jordan<Complex>(p);
    const auto lam = p.lambda_exp();
    CHECK(normal_form_distance(normalize(stokes_from_quiver(qc), cl, lam), ref) < 1e-9);
    CHECK(normal_form_distance(normalize(stokes_from_quiver(qj), cl, lam), ref) < 1e-9);
    const auto m = rs_monodromy<Complex>(to_rs_params(p));
    const auto qm = quiver_from_monodromy(m.T0, m.Trho);
    CHECK(quiver_validate(qm).valid());
    CHECK(normal_form_distance(normalize(stokes_from_quiver(qm), cl, lam), ref) < 1e-9);
  }
}

TEST_CASE("quiver shape errors") {
  Quiver<Complex> q{Matrix<Complex>(1, 2), Matrix<Complex>(3, 1), Matrix<Complex>(1, 2), Matrix<Complex>(2, 1), "test"};
  try {
    q.check_shapes();
    FAIL("expected InvalidQuiver");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidQuiver);
  }
}
