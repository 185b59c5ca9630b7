#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <string>

#include "hypstokes/hypstokes.h"

using nlohmann::json;

namespace {

struct Params {
  hs_params* p = nullptr;
  ~Params() { hs_params_free(p); }
};

struct Result {
  hs_result* r = nullptr;
  ~Result() { hs_result_free(r); }
  json parsed() { return json::parse(hs_result_text(r, HS_FORMAT_JSON)); }
};

}  // namespace

TEST_CASE("parameters from lists and JSON") {
  Params a;
  REQUIRE(hs_params_from_lists("1/3, 2/3", "1/2", 1, 0, 1, &a.p) == HS_OK);
  Params b;
  CHECK(hs_params_from_json(R"({"alpha": [{"num": 1, "den": 3}, {"num": 2, "den": 3}], "beta": [{"num": 1, "den": 2}]})",
                            1, &b.p) == HS_OK);
  Params c;
  CHECK(hs_params_from_lists("1/3, x", "1/2", 1, 0, 1, &c.p) == HS_ERR_PARSE);
  CHECK(c.p == nullptr);
  CHECK(std::string(hs_last_error()).size() > 0);
  Params d;
  CHECK(hs_params_from_json("{not json", 1, &d.p) != HS_OK);
  CHECK(hs_params_from_lists("1/3", "", 1, 0, 1, nullptr) == HS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("compute through the C interface") {
  Params a;
  REQUIRE(hs_params_from_lists("1/3,2/3", "1/2", 1, 0, 1, &a.p) == HS_OK);
  const hs_tolerances tol = hs_default_tolerances();
  CHECK(tol.compare_tol == 1e-8);
  Result r;
  REQUIRE(hs_compute(a.p, "companion", "exact", &tol, &r.r) == HS_OK);
  const json j = r.parsed();
  CHECK(j["stokes"]["s_plus_exact"] == json::parse(R"([["1","1"],["0","1"]])"));
  CHECK(std::string(hs_result_text(r.r, HS_FORMAT_PRETTY)).find("S") != std::string::npos);
  Result bad;
  CHECK(hs_compute(a.p, "diagonal", "auto", nullptr, &bad.r) == HS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("non-generic input returns the report") {
  Params a;
  REQUIRE(hs_params_from_lists("1/2,1", "1/2", 1, 0, 1, &a.p) == HS_OK);
  Result r;
  CHECK(hs_compute(a.p, "companion", "auto", nullptr, &r.r) == HS_ERR_NOT_GENERIC);
  REQUIRE(r.r != nullptr);
  CHECK(r.parsed()["report"]["is_generic"] == false);
  CHECK(std::string(hs_status_name(HS_ERR_NOT_GENERIC)) == "NotGeneric");
}

TEST_CASE("verification through the C interface") {
  Params a;
  REQUIRE(hs_params_from_lists("1/4,1/3,2/3", "1/2,1/2", 1, 0, 1, &a.p) == HS_OK);
  Result v;
  REQUIRE(hs_verify(a.p, "auto", nullptr, &v.r) == HS_OK);
  CHECK(hs_result_passed(v.r) == 1);

  Result c;
  REQUIRE(hs_compute(a.p, "companion", "double", nullptr, &c.r) == HS_OK);
  json pair = c.parsed()["stokes"];
  Result ok;
  REQUIRE(hs_verify_pair(a.p, pair.dump().c_str(), nullptr, &ok.r) == HS_OK);
  CHECK(hs_result_passed(ok.r) == 1);
  pair["s_plus"][0][2][0] = pair["s_plus"][0][2][0].get<double>() + 0.5;
  Result wrong;
  REQUIRE(hs_verify_pair(a.p, pair.dump().c_str(), nullptr, &wrong.r) == HS_OK);
  CHECK(hs_result_passed(wrong.r) == 0);
}

TEST_CASE("corpus through the C interface") {
  Result r;
  REQUIRE(hs_corpus(42, 5, 2, nullptr, &r.r) == HS_OK);
  const std::string text = hs_result_text(r.r, HS_FORMAT_JSON);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  Result v;
  REQUIRE(hs_verify_corpus(42, 5, 2, "auto", nullptr, &v.r) == HS_OK);
  CHECK(hs_result_passed(v.r) == 1);
  Result neg;
  CHECK(hs_corpus(42, -1, 1, nullptr, &neg.r) == HS_ERR_INVALID_ARGUMENT);
}
