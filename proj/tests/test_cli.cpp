#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPSTOKES_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t k; (k = fread(buf, 1, sizeof buf, f)) > 0;) out.append(buf, k);
  const int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path golden(const char* name) { return std::filesystem::path(GOLDEN_DIR) / name; }

// Equal structure; numbers within tol.
bool close(const json& a, const json& b, double tol = 1e-12) {
  if (a.is_number() && b.is_number()) return std::abs(a.get<double>() - b.get<double>()) <= tol;
  if (a.type() != b.type() || a.size() != b.size()) return false;
  if (a.is_array()) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!close(a[i], b[i], tol)) return false;
    return true;
  }
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !close(it.value(), b[it.key()], tol)) return false;
    return true;
  }
  return a == b;
}

std::filesystem::path temp(const char* name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("compute matches the golden files") {
  const auto a = run("compute --alpha 1/3,2/3 --beta 1/2");
  CHECK(a.code == 0);
  CHECK(close(json::parse(a.out), json::parse(slurp(golden("instance_a_companion.json")))));
  const auto b = run("compute --alpha 1/4,1/3,2/3 --beta 1/2,1/2 --form jordan");
  CHECK(b.code == 0);
  CHECK(close(json::parse(b.out), json::parse(slurp(golden("instance_b_jordan.json")))));
}

TEST_CASE("input files and pretty output") {
  const auto in = temp("hypstokes_cli_params.json");
  std::ofstream(in) << R"({"alpha": [{"num": 1, "den": 3}, {"num": 2, "den": 3}], "beta": [{"num": 1, "den": 2}]})";
  const auto a = run("compute --input " + in.string());
  CHECK(a.code == 0);
  CHECK(close(json::parse(a.out), json::parse(slurp(golden("instance_a_companion.json")))));
  const auto p = run("verify --alpha 1/3,2/3 --beta 1/2 --format pretty");
  CHECK(p.code == 0);
  CHECK(p.out.find("all checks passed") != std::string::npos);
  std::filesystem::remove(in);
}

TEST_CASE("exit codes") {
  CHECK(run("compute --alpha 1/2,1 --beta 1/2").code == 2);
  CHECK(run("compute --alpha 1/3,x --beta 1/2").code == 1);
  CHECK(run("compute --alpha 1/3,2/3 --beta 1/2 --form banana").code != 0);
  CHECK(run("compute --input /nonexistent/params.json").code == 1);
  CHECK(run("verify --alpha 0.3,0.55 --beta 0.1 --mode float").code == 0);
}

TEST_CASE("verify a supplied pair") {
  const auto c = run("compute --alpha 1/5,2/7,3/4 --beta 1/3,1/3 --arith double");
  REQUIRE(c.code == 0);
  json pair = json::parse(c.out)["stokes"];
  const auto good = temp("hypstokes_cli_pair.json");
  std::ofstream(good) << pair.dump();
  CHECK(run("verify --alpha 1/5,2/7,3/4 --beta 1/3,1/3 --pair " + good.string()).code == 0);
  pair["s_minus"][2][0][1] = pair["s_minus"][2][0][1].get<double>() + 0.25;
  const auto bad = temp("hypstokes_cli_pair_bad.json");
  std::ofstream(bad) << pair.dump();
  CHECK(run("verify --alpha 1/5,2/7,3/4 --beta 1/3,1/3 --pair " + bad.string()).code == 3);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("corpus output") {
  const auto out = temp("hypstokes_cli_corpus.jsonl");
  CHECK(run("corpus --seed 42 --count 3 --jobs 2 --out " + out.string()).code == 0);
  std::istringstream got(slurp(out)), want(slurp(golden("corpus_seed42_n3.jsonl")));
  std::string g, w;
  int lines = 0;
  while (std::getline(want, w)) {
    REQUIRE(std::getline(got, g));
    CHECK(close(json::parse(g), json::parse(w), 1e-10));
    ++lines;
  }
  CHECK(lines == 3);
  CHECK_FALSE(std::getline(got, g));
  CHECK(run("corpus --seed 42 --count 0 --out " + out.string()).code == 0);
  CHECK(std::filesystem::file_size(out) == 0);
  const auto v = run("corpus --seed 42 --count 10 --verify");
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["failures"] == 0);
  std::filesystem::remove(out);
}
