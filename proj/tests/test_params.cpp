#include <doctest.h>

#include "oracle.hpp"

using namespace hypstokes;

TEST_CASE("exponent parsing and reduction") {
  CHECK(Exponent::parse("2/6", true) == Exponent(1, 3));
  CHECK(Exponent::parse("-3", true) == Exponent(-3, 1));
  CHECK(Exponent::parse("0.25", true) == Exponent(1, 4));
  CHECK_FALSE(Exponent::parse("0.25", false).is_exact());
  CHECK(Exponent::parse(" 1/2 ", true) == Exponent(1, 2));
  CHECK_THROWS_AS(Exponent::parse("1/0", true), Error);
  CHECK_THROWS_AS(Exponent::parse("abc", true), Error);
  CHECK(Exponent(7, 3).reduced() == Exponent(1, 3));
  CHECK(Exponent(-1, 3).reduced() == Exponent(2, 3));
  CHECK(Exponent(-2, 1).reduced() == Exponent(0, 1));
  CHECK(Exponent::from_double(-0.25).reduced().approx() == doctest::Approx(0.75));
  CHECK(Exponent(4, 2).is_integer(0));
  CHECK(Exponent::from_double(2.0 + 1e-11).is_integer(1e-9));
  CHECK_FALSE(Exponent::from_double(2.0 + 1e-7).is_integer(1e-9));
}

TEST_CASE("eigenvalue_of lands on exact values at simple fractions") {
  CHECK(eigenvalue_of(Exponent(1, 2), -1) == Complex(-1, 0));
  CHECK(eigenvalue_of(Exponent(1, 4), -1) == Complex(0, -1));
  CHECK(eigenvalue_of(Exponent(5, 4), +1) == Complex(0, 1));
  CHECK(std::abs(eigenvalue_of(Exponent(1, 7), 1) - oracle::cis(1.0 / 7)) < 1e-15);
}

TEST_CASE("well-formedness") {
  CHECK_THROWS_AS(make_params({"1/3", "2/3"}, {"1/2", "1/5"}), Error);
  CHECK_THROWS_AS(make_params({}, {}), Error);
  CHECK_THROWS_AS(make_params({"1/3"}, {}, {0, 0}), Error);
  CHECK_NOTHROW(make_params({"1/3"}, {}));
}

TEST_CASE("genericity report") {
  const auto p = make_params({"1/2", "1"}, {"1/2"});
  const auto r = validate_generic(p);
  CHECK_FALSE(r.is_generic);
  REQUIRE(r.violations.size() == 2);
  CHECK(r.violations[0].kind == Violation::Kind::IntegralAlpha);
  CHECK(r.violations[0].indices == std::vector<int>{2});
  CHECK(r.violations[1].kind == Violation::Kind::ResonantPair);
  CHECK(r.violations[1].indices == std::vector<int>{1, 1});
  CHECK_THROWS_AS(require_generic(p), Error);
  try {
    require_generic(p);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGeneric);
  }
  CHECK(validate_generic(make_params({"1/3", "2/3"}, {"1/2"})).is_generic);
  // shifted resonance is still resonance
  CHECK_FALSE(validate_generic(make_params({"1/3", "2/3"}, {"-5/3"})).is_generic);
  // float mode uses the tolerance
  auto f = make_params({"0.3", "0.7"}, {"1.3000000000001"}, {1, 0}, false);
  CHECK_FALSE(validate_generic(f).is_generic);
}

TEST_CASE("beta clusters") {
  const auto beta = make_params({"1/5", "2/5", "3/5", "4/5"}, {"1/2", "3/2", "1/3"}).beta;
  const auto cl = cluster_beta(beta);
  REQUIRE(cl.size() == 2);
  CHECK(cl.clusters[0].exponent == Exponent(1, 3));
  CHECK(cl.clusters[0].kappa == 1);
  CHECK(cl.clusters[0].members == std::vector<int>{2});
  CHECK(cl.clusters[1].exponent == Exponent(1, 2));
  CHECK(cl.clusters[1].members == std::vector<int>{0, 1});
  CHECK(cl.block_sizes() == std::vector<int>{1, 2});
  CHECK(cl.offset(1) == 1);
  CHECK(cl.total() == 3);
  CHECK_FALSE(diagonalizable(cl));
  CHECK(diagonalizable(cluster_beta(make_params({"1/5", "2/5", "3/5"}, {"1/2", "1/3"}).beta)));
}

TEST_CASE("float clustering: merge, separate, ambiguous") {
  auto fl = [](std::vector<double> v) {
    std::vector<Exponent> out;
    for (double x : v) out.push_back(Exponent::from_double(x));
    return out;
  };
  CHECK(cluster_beta(fl({0.5, 1.5 + 1e-12})).size() == 1);
  CHECK(cluster_beta(fl({0.5, 0.6})).size() == 2);
  // |e^{-2 pi i b1} - e^{-2 pi i b2}| about 3e-8: between tol and 10 tol
  try {
    cluster_beta(fl({0.5, 0.5 + 3e-8 / (2 * oracle::pi)}));
    FAIL("expected AmbiguousClustering");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousClustering);
  }
}

TEST_CASE("regular-singular side") {
  const auto p = make_params({"1/3", "2/3", "1/4"}, {"0", "1/2"});
  const auto rs = to_rs_params(p);
  REQUIRE(rs.gamma.size() == 3);
  CHECK(rs.gamma[2] == Exponent(1, 1));
  CHECK(rs.eta[0] == Exponent(-1, 3));
  const auto cl = rs_clusters(p.beta);
  REQUIRE(cl.size() == 2);
  CHECK(cl.clusters.back().kappa == 2);
  CHECK(cl.clusters.back().members == std::vector<int>{0, -1});
  CHECK(cl.clusters.front().exponent == Exponent(1, 2));
}
