#include <doctest.h>

#include "hypstokes/crosscheck.hpp"
#include "oracle.hpp"

using namespace hypstokes;
using namespace hypstokes::engine;

namespace {

HyperParams to_float(HyperParams p) {
  for (auto& a : p.alpha) a = a.to_float();
  for (auto& b : p.beta) b = b.to_float();
  return p;
}

}  // namespace

TEST_CASE("parameter JSON round trip") {
  for (bool exact : {true, false}) {
    auto p = make_params({"1/3", "-5/7", "2/9"}, {"1/2", "3/2"});
    if (!exact) p = to_float(p);
    const Json j = params_to_json(p);
    const auto q = params_from_json(j, exact);
    CHECK(params_to_json(q) == j);
  }
  const Json e = exponent_to_json(Exponent(Rational(-4, 6)));
  CHECK(e["num"] == -2);
  CHECK(e["den"] == 3);
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"alpha": "x"})"), true), Error);
}

TEST_CASE("Stokes and normal form JSON round trip") {
  const auto p = make_params({"1/4", "1/3", "2/3"}, {"1/2", "1/2"});
  const auto sp = stokes_companion<Complex>(p);
  const auto back = stokes_from_json(stokes_to_json(sp));
  CHECK(back.s_plus == sp.s_plus);
  CHECK(back.s_minus == sp.s_minus);
  CHECK(back.r0 == sp.r0);
  const auto nf = stokes_jordan<Complex>(p);
  const auto nb = normal_form_from_json(normal_form_to_json(nf));
  CHECK(normal_form_distance(nb, nf) == 0.0);
  CHECK(complex_from_json(complex_to_json(Complex(1.5, -2))) == Complex(1.5, -2));
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[[1,0]],[[1,0],[2,0]]]")), Error);
}

TEST_CASE("arithmetic selection") {
  CHECK(resolve_arith(Arith::Auto, make_params({"1/3", "2/3"}, {"1/2"})) == Arith::Exact);
  CHECK(resolve_arith(Arith::Auto, to_float(make_params({"1/3", "2/3"}, {"1/2"}))) == Arith::Double);
  CHECK(resolve_arith(Arith::Auto, make_params({"1/11", "1/13"}, {"1/7"})) == Arith::High);
  CHECK(resolve_arith(Arith::Double, make_params({"1/3", "2/3"}, {"1/2"})) == Arith::Double);
  CHECK(parse_arith("high") == Arith::High);
  CHECK(parse_form("quiver") == Form::Quiver);
  CHECK_THROWS_AS(parse_arith("fast"), Error);
  CHECK_THROWS_AS(parse_form("diag"), Error);
}

TEST_CASE("compute results") {
  const auto a = make_params({"1/3", "2/3"}, {"1/2"});
  const Tolerances tol;
  const Json c = compute(a, Form::Companion, Arith::Auto, tol);
  CHECK(c["schema"] == kResultSchema);
  CHECK(c["arith"] == "exact");
  CHECK(c["stokes"]["s_minus_exact"] == Json::parse(R"([["-1","0"],["-1","-1"]])"));
  const Json j = compute(a, Form::Jordan, Arith::Double, tol);
  CHECK(oracle::max_diff(complex_vector_from_json(j["normal_form"]["z"]), {Complex(1)}) < 1e-12);
  for (auto f : {Form::Normal, Form::Quiver}) {
    const Json r = compute(a, f, Arith::High, tol);
    CHECK(r["arith"] == "high");
    CHECK_FALSE(pretty(r).empty());
  }
  const auto bad = make_params({"1/2", "1"}, {"1/2"});
  try {
    compute(bad, Form::Companion, Arith::Auto, tol);
    FAIL("expected NotGeneric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGeneric);
  }
}

TEST_CASE("verification reports") {
  const Tolerances tol;
  for (auto arith : {Arith::Double, Arith::High, Arith::Exact}) {
    const auto rep = verify(make_params({"1/4", "1/3", "2/3"}, {"1/2", "1/2"}), arith, tol);
    CHECK(rep.passed());
    CHECK(rep.checks.size() >= 10);
  }
  const auto p = make_params({"1/5", "2/7"}, {"1/3"});
  auto sp = stokes_companion<Complex>(p);
  CHECK(verify_pair(sp, p, tol).passed());
  sp.s_plus(0, 1) += 1e-3;
  CHECK_FALSE(verify_pair(sp, p, tol).passed());
}

TEST_CASE("corpus is deterministic and independent of the job count") {
  const Tolerances tol;
  const auto a = generate_corpus(5, 25), b = generate_corpus(5, 25);
  REQUIRE(a.size() == 25);
  int repeated = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(params_to_json(a[i].params) == params_to_json(b[i].params));
    CHECK(validate_generic(a[i].params).is_generic);
    if (a[i].kind == "repeated_beta") ++repeated;
    if (a[i].kind == "cyclotomic") {
      CHECK(cyclotomic_property(a[i].params.alpha));
      CHECK(cyclotomic_property(a[i].params.beta));
    }
  }
  CHECK(repeated == 10);
  CHECK(params_to_json(generate_corpus(6, 1)[0].params) != params_to_json(a[0].params));
  CHECK(corpus_jsonl(5, 12, 1, tol) == corpus_jsonl(5, 12, 3, tol));
  CHECK(corpus_jsonl(5, 0, 1, tol).empty());
  for (const auto& d : generate_diagonal(3, 10)) CHECK(diagonalizable(cluster_beta(d.params.beta)));
  CHECK_THROWS_AS(make_instance(1, 0, "bogus"), Error);
  const auto s = verify_corpus(5, 10, 2, Arith::Auto, tol);
  CHECK(s.failures == 0);
  CHECK(s.report["instances"] == 10);
}

TEST_CASE("parallel_for propagates errors") {
  std::vector<int> hit(50, 0);
  parallel_for(50, 4, [&](int i) { hit[i] = 1; });
  CHECK(std::count(hit.begin(), hit.end(), 1) == 50);
  CHECK_THROWS_AS(parallel_for(10, 3, [](int i) {
                    if (i == 7) throw Error(ErrorCode::InvalidArgument, "boom");
                  }),
                  Error);
}
