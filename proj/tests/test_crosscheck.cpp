#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include "hypstokes/crosscheck.hpp"
#include "oracle.hpp"

using namespace hypstokes;

TEST_CASE("Gamma on the real axis") {
  for (double x : {0.1, 0.5, 1.0, 1.7, 3.25, 7.5, 20.0, -0.5, -2.3, -7.9}) {
    const double ref = boost::math::tgamma(x);
    CHECK(std::abs(complex_gamma(Complex(x)) - ref) < 1e-13 * std::max(1.0, std::abs(ref)));
  }
  CHECK(std::abs(approx(complex_gamma(ComplexHP(0.5))) - std::sqrt(oracle::pi)) < 1e-15);
}

TEST_CASE("Gamma identities off the real axis") {
  for (Complex z : {Complex(0.3, 0.4), Complex(-1.2, 2.5), Complex(4.1, -3.0), Complex(-6.5, 0.1)}) {
    // recurrence and reflection
    const Complex g = complex_gamma(z);
    CHECK(std::abs(complex_gamma(z + 1.0) - z * g) < 1e-12 * std::abs(z * g));
    const Complex refl = oracle::pi / std::sin(oracle::pi * z);
    CHECK(std::abs(g * complex_gamma(1.0 - z) - refl) < 1e-12 * std::abs(refl));
    // conjugate symmetry, and the 50-digit version
    CHECK(std::abs(complex_gamma(std::conj(z)) - std::conj(g)) < 1e-14 * std::abs(g));
    const Complex hp = approx(complex_gamma(ComplexHP(z.real(), z.imag())));
    CHECK(std::abs(hp - g) < 1e-13 * std::abs(g));
  }
  // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
  const double y = 1.3;
  CHECK(std::abs(std::norm(complex_gamma(Complex(0.5, y))) - oracle::pi / std::cosh(oracle::pi * y)) < 1e-14);
}

TEST_CASE("Gamma poles") {
  for (double x : {0.0, -1.0, -4.0}) {
    try {
      complex_gamma(Complex(x));
      FAIL("expected PoleOfGamma");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleOfGamma);
    }
  }
}

TEST_CASE("Gamma-function Stokes data match the normal form") {
  for (const auto& p : {make_params({"1/3", "2/3"}, {"1/2"}), make_params({"1/5", "-3/7", "5/6", "1/9"}, {"1/4", "2/3", "-1/8"}),
                        make_params({"2/9", "4/9", "8/9"}, {"1/10", "3/10"})}) {
    CHECK(dm_identity_residual<Complex>(p) < 1e-11);
    CHECK(dm_identity_residual<ComplexHP>(p) < 1e-30);
  }
  const auto rep = make_params({"1/4", "1/3", "2/3"}, {"1/2", "1/2"});
  CHECK_THROWS_AS(dm_stokes<Complex>(rep), Error);
}

TEST_CASE("cyclotomic and conjugate properties") {
  auto E = [](std::initializer_list<const char*> xs) {
    std::vector<Exponent> v;
    for (auto x : xs) v.push_back(Exponent::parse(x, true));
    return v;
  };
  CHECK(cyclotomic_property(E({"1/3", "2/3"})));
  CHECK(cyclotomic_property(E({"1/3", "-1/3"})));
  CHECK(cyclotomic_property(E({"1/5", "2/5", "3/5", "4/5", "0"})));
  CHECK_FALSE(cyclotomic_property(E({"1/5", "2/5", "3/5"})));
  CHECK_FALSE(cyclotomic_property(E({"1/3", "1/3", "2/3"})));
  CHECK(conjugate_property(E({"1/5", "4/5", "1/2"})));
  CHECK(conjugate_property(E({"3/7", "-3/7"})));
  CHECK_FALSE(conjugate_property(E({"1/5", "2/5"})));
}

TEST_CASE("snapping") {
  const auto cyc = make_params({"1/3", "2/3"}, {"1/2"});
  const auto s = snap_integral(stokes_companion<Complex>(cyc), cyc, 1e-9);
  CHECK(s.kind == SnapResult::Kind::Integer);
  CHECK(s.residual < 1e-9);
  CHECK(std::abs(std::abs(determinant(s.pair.s_minus)) - 1.0) < 1e-12);
  for (auto x : s.pair.s_minus.data()) CHECK(x == Complex(std::round(x.real()), 0));

  const auto conj = make_params({"1/5", "4/5", "1/2"}, {"1/7", "6/7"});
  const auto r = snap_integral(stokes_companion<Complex>(conj), conj, 1e-9);
  CHECK(r.kind == SnapResult::Kind::Real);
  for (auto x : r.pair.s_plus.data()) CHECK(x.imag() == 0);

  const auto plain = make_params({"1/5", "2/7"}, {"1/3"});
  CHECK(snap_integral(stokes_companion<Complex>(plain), plain, 1e-9).kind == SnapResult::Kind::Unchanged);

  auto broken = stokes_companion<Complex>(cyc);
  broken.s_plus(0, 1) += 0.1;
  try {
    snap_integral(broken, cyc, 1e-9);
    FAIL("expected SnapFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SnapFailure);
  }
}
