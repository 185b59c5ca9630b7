// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hypstokes/hypstokes.h"

namespace {

enum Exit { kOk = 0, kInternal = 1, kNotGeneric = 2, kVerifyFailed = 3 };

struct Config {
  std::string alpha, beta, input, pair, out;
  std::string glambda = "1,0";
  std::string form = "companion";
  std::string mode = "exact";
  std::string arith = "auto";
  std::string format = "json";
  hs_tolerances tol = hs_default_tolerances();
  std::uint64_t seed = 42;
  int count = 200;
  int jobs = 0;
  bool verify = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) throw std::runtime_error("cannot write '" + cfg.out + "'");
}

int report_failure(hs_status s) {
  std::cerr << "hypstokes: " << hs_status_name(s) << ": " << hs_last_error() << "\n";
  return s == HS_ERR_NOT_GENERIC ? kNotGeneric : kInternal;
}

// Owns a result and prints it; maps the status to an exit code.
int finish(const Config& cfg, hs_status s, hs_result* r) {
  int code = kOk;
  if (r) {
    emit(cfg, hs_result_text(r, cfg.format == "pretty" ? HS_FORMAT_PRETTY : HS_FORMAT_JSON));
    if (s == HS_OK && !hs_result_passed(r)) code = kVerifyFailed;
    hs_result_free(r);
  }
  if (s != HS_OK) code = report_failure(s);
  return code;
}

hs_params* load_params(const Config& cfg) {
  const int exact = cfg.mode == "exact";
  hs_params* p = nullptr;
  hs_status s;
  if (!cfg.input.empty()) {
    s = hs_params_from_json(slurp(cfg.input).c_str(), exact, &p);
  } else {
    if (cfg.alpha.empty()) throw std::runtime_error("give --alpha/--beta or --input");
    double re = 1, im = 0;
    char tail = 0;
    const int got = std::sscanf(cfg.glambda.c_str(), "%lf,%lf%c", &re, &im, &tail);
    if (got < 1 || got > 2) throw std::runtime_error("--glambda expects RE or RE,IM");
    s = hs_params_from_lists(cfg.alpha.c_str(), cfg.beta.c_str(), re, im, exact, &p);
  }
  if (s != HS_OK) {
    report_failure(s);
    return nullptr;
  }
  return p;
}

int cmd_compute(const Config& cfg) {
  hs_params* p = load_params(cfg);
  if (!p) return kInternal;
  hs_result* r = nullptr;
  const hs_status s = hs_compute(p, cfg.form.c_str(), cfg.arith.c_str(), &cfg.tol, &r);
  hs_params_free(p);
  return finish(cfg, s, r);
}

int cmd_verify(const Config& cfg) {
  hs_params* p = load_params(cfg);
  if (!p) return kInternal;
  hs_result* r = nullptr;
  hs_status s;
  if (cfg.pair.empty())
    s = hs_verify(p, cfg.arith.c_str(), &cfg.tol, &r);
  else
    s = hs_verify_pair(p, slurp(cfg.pair).c_str(), &cfg.tol, &r);
  hs_params_free(p);
  return finish(cfg, s, r);
}

int cmd_corpus(const Config& cfg) {
  hs_result* r = nullptr;
  const hs_status s = cfg.verify ? hs_verify_corpus(cfg.seed, cfg.count, cfg.jobs, cfg.arith.c_str(), &cfg.tol, &r)
                                 : hs_corpus(cfg.seed, cfg.count, cfg.jobs, &cfg.tol, &r);
  return finish(cfg, s, r);
}

void add_params(CLI::App* c, Config& cfg) {
  c->add_option("--alpha", cfg.alpha, "comma separated exponents, e.g. 1/3,2/3");
  c->add_option("--beta", cfg.beta, "comma separated exponents (n-1 of them)");
  c->add_option("--glambda", cfg.glambda, "irregular coefficient RE[,IM]")->capture_default_str();
  c->add_option("--input", cfg.input, "JSON parameter file")->check(CLI::ExistingFile);
  c->add_option("--mode", cfg.mode, "exponent parsing")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
}

void add_common(CLI::App* c, Config& cfg) {
  c->add_option("--arith", cfg.arith, "scalar back end")
      ->check(CLI::IsMember({"auto", "double", "high", "exact"}))
      ->capture_default_str();
  c->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "pretty"}))->capture_default_str();
  c->add_option("--out", cfg.out, "output file (default stdout)");
  auto pos = CLI::PositiveNumber;
  c->add_option("--tol-int", cfg.tol.int_tol, "integrality tolerance")->check(pos)->capture_default_str();
  c->add_option("--tol-cluster", cfg.tol.cluster_tol, "eigenvalue clustering tolerance")->check(pos)->capture_default_str();
  c->add_option("--tol-compare", cfg.tol.compare_tol, "comparison tolerance")->check(pos)->capture_default_str();
  c->add_option("--tol-snap", cfg.tol.snap_tol, "snapping tolerance")->check(pos)->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stokes matrices of confluent hypergeometric systems"};
  app.require_subcommand(1);
  Config cfg;

  auto* compute = app.add_subcommand("compute", "compute a Stokes pair or its normal form");
  add_params(compute, cfg);
  add_common(compute, cfg);
  compute->add_option("--form", cfg.form)
      ->check(CLI::IsMember({"companion", "jordan", "normal", "quiver"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the invariant suite, or check a supplied pair");
  add_params(verify, cfg);
  add_common(verify, cfg);
  verify->add_option("--pair", cfg.pair, "JSON file with s_plus and s_minus")->check(CLI::ExistingFile);

  auto* corpus = app.add_subcommand("corpus", "write the seeded instance corpus as JSON lines");
  add_common(corpus, cfg);
  corpus->add_option("--seed", cfg.seed)->capture_default_str();
  corpus->add_option("--count", cfg.count)->check(CLI::NonNegativeNumber)->capture_default_str();
  corpus->add_option("--jobs", cfg.jobs, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  corpus->add_flag("--verify", cfg.verify, "run the invariant suite on every instance and print a summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInternal;
  }
  try {
    if (*compute) return cmd_compute(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_corpus(cfg);
  } catch (const std::exception& e) {
    std::cerr << "hypstokes: " << e.what() << "\n";
    return kInternal;
  }
}
