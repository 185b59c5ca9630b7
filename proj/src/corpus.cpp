#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "hypstokes/engine.hpp"

namespace hypstokes::engine {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Integer draws use plain modular reduction of the raw engine output so that
// the stream is identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long long below(long long m) { return static_cast<long long>(eng_() % static_cast<std::uint64_t>(m)); }
  long long between(long long lo, long long hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 eng_;
};

Exponent shifted(Rng& rng, long long num, long long den) {
  const long long k = rng.between(-1, 1);
  return Exponent(num + k * den, den);
}

// Non-integer exponent with denominator in [2, 12], or (allow_integer) sometimes an integer.
Exponent draw_exponent(Rng& rng, bool allow_integer) {
  if (allow_integer && rng.below(10) == 0) return shifted(rng, 0, 1);
  const long long den = rng.between(2, 12);
  return shifted(rng, rng.between(1, den - 1), den);
}

template <class V>
void shuffle(Rng& rng, V& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(static_cast<long long>(i)))]);
}

bool generic(const HyperParams& p) { return validate_generic(p).is_generic; }

HyperParams random_params(Rng& rng, int n) {
  HyperParams p;
  for (int i = 0; i < n; ++i) p.alpha.push_back(draw_exponent(rng, false));
  for (int i = 0; i + 1 < n; ++i) p.beta.push_back(draw_exponent(rng, true));
  return p;
}

HyperParams repeated_beta(Rng& rng) {
  const int n = static_cast<int>(rng.between(3, 6));
  HyperParams p = random_params(rng, n);
  const int m = n - 1;
  const int repeats = 1 + static_cast<int>(rng.below(m - 1));
  for (int r = 0; r < repeats; ++r) {
    const int i = static_cast<int>(rng.below(m));
    int j = static_cast<int>(rng.below(m - 1));
    if (j >= i) ++j;
    p.beta[j] = p.beta[i] + Exponent(Rational(rng.between(-1, 2)));
  }
  return p;
}

int totient(int w) {
  int c = 0;
  for (int u = 0; u < w; ++u) c += std::gcd(u, w) == 1 ? 1 : 0;
  return c;
}

// Full Galois orbits u/w, gcd(u, w) = 1, filling exactly `size` slots from the
// denominators in `pool`. Empty on failure.
std::vector<Exponent> orbits(Rng& rng, const std::vector<int>& pool, int size) {
  std::vector<Exponent> out;
  int left = size;
  for (int guard = 0; left > 0 && guard < 64; ++guard) {
    std::vector<int> fit;
    for (int w : pool)
      if (totient(w) <= left) fit.push_back(w);
    if (fit.empty()) return {};
    const int w = fit[static_cast<std::size_t>(rng.below(static_cast<long long>(fit.size())))];
    for (int u = 0; u < w; ++u)
      if (std::gcd(u, w) == 1) out.push_back(shifted(rng, u, w));
    left -= totient(w);
  }
  if (left != 0) return {};
  return out;
}

HyperParams cyclotomic_params(Rng& rng) {
  const int n = static_cast<int>(rng.between(2, 6));
  for (;;) {
    std::vector<int> wa, wb;
    for (int w = 1; w <= 12; ++w) {
      if (w == 1 || rng.below(2) == 0)
        wb.push_back(w);
      else
        wa.push_back(w);
    }
    HyperParams p;
    p.alpha = orbits(rng, wa, n);
    p.beta = orbits(rng, wb, n - 1);
    if (static_cast<int>(p.alpha.size()) != n || static_cast<int>(p.beta.size()) != n - 1) continue;
    shuffle(rng, p.alpha);
    shuffle(rng, p.beta);
    if (generic(p)) return p;
  }
}

std::vector<Exponent> conjugate_list(Rng& rng, int size, bool allow_integer) {
  std::vector<Exponent> out;
  while (static_cast<int>(out.size()) < size) {
    if (size - static_cast<int>(out.size()) >= 2 && rng.below(3) != 0) {
      const long long den = rng.between(3, 12);
      const long long num = rng.between(1, den - 1);
      out.push_back(shifted(rng, num, den));
      out.push_back(shifted(rng, den - num, den));
    } else if (allow_integer && rng.below(2) == 0) {
      out.push_back(shifted(rng, 0, 1));
    } else {
      out.push_back(shifted(rng, 1, 2));
    }
  }
  shuffle(rng, out);
  return out;
}

HyperParams conjugate_params(Rng& rng) {
  const int n = static_cast<int>(rng.between(2, 6));
  for (;;) {
    HyperParams p;
    p.alpha = conjugate_list(rng, n, false);
    p.beta = conjugate_list(rng, n - 1, true);
    if (generic(p)) return p;
  }
}

HyperParams diagonal_params(Rng& rng) {
  const int n = static_cast<int>(rng.between(2, 5));
  for (;;) {
    HyperParams p = random_params(rng, n);
    if (generic(p) && diagonalizable(cluster_beta(p.beta))) return p;
  }
}

std::uint64_t kind_tag(std::string_view kind) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : kind) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h;
}

constexpr const char* kCycle[] = {"random", "repeated_beta", "repeated_beta", "cyclotomic", "conjugate"};

}  // namespace

CorpusInstance make_instance(std::uint64_t seed, int index, std::string_view kind) {
  Rng rng(splitmix64(splitmix64(seed) ^ splitmix64(static_cast<std::uint64_t>(index)) ^ kind_tag(kind)));
  CorpusInstance inst{index, std::string(kind), {}};
  if (kind == "random") {
    do inst.params = random_params(rng, static_cast<int>(rng.between(1, 6)));
    while (!generic(inst.params));
  } else if (kind == "repeated_beta") {
    do inst.params = repeated_beta(rng);
    while (!generic(inst.params));
  } else if (kind == "cyclotomic") {
    inst.params = cyclotomic_params(rng);
  } else if (kind == "conjugate") {
    inst.params = conjugate_params(rng);
  } else if (kind == "diagonal") {
    inst.params = diagonal_params(rng);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown instance kind '" + std::string(kind) + "'");
  }
  return inst;
}

std::vector<CorpusInstance> generate_corpus(std::uint64_t seed, int count) {
  if (count < 0) fail(ErrorCode::InvalidArgument, "count must be nonnegative");
  std::vector<CorpusInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(make_instance(seed, i, kCycle[i % 5]));
  return out;
}

std::vector<CorpusInstance> generate_diagonal(std::uint64_t seed, int count) {
  if (count < 0) fail(ErrorCode::InvalidArgument, "count must be nonnegative");
  std::vector<CorpusInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(make_instance(seed, i, "diagonal"));
  return out;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, std::max(count, 1));
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

Json corpus_record(const CorpusInstance& inst, const Tolerances& tol) {
  const HyperParams& p = inst.params;
  const VerifyReport rep = verify(p, Arith::Auto, tol);
  const auto nf = stokes_jordan<Complex>(p, tol);
  Json eig = Json::array();
  for (const auto& c : nf.clusters.clusters)
    for (int k = 0; k < c.kappa; ++k) eig.push_back(complex_to_json(eigenvalue_of(c.exponent, -1)));
  eig.push_back(complex_to_json(eigenvalue_of(p.lambda_exp(), +1)));
  Json residuals = Json::object();
  for (const auto& c : rep.checks) residuals[c.name] = std::isfinite(c.value) ? Json(c.value) : Json(nullptr);
  bool agree = true;
  for (const auto& c : rep.checks)
    if (c.name.rfind("route_", 0) == 0) agree = agree && c.passed;
  return {{"schema", kCorpusSchema},
          {"index", inst.index},
          {"kind", inst.kind},
          {"params", params_to_json(p)},
          {"z", vector_to_json(nf.z)},
          {"z_blocks", nf.clusters.block_sizes()},
          {"lambda_exp", exponent_to_json(p.lambda_exp())},
          {"formal_monodromy_eigenvalues", eig},
          {"residuals", residuals},
          {"route_agreement", agree},
          {"passed", rep.passed()}};
}

std::string corpus_jsonl(std::uint64_t seed, int count, int jobs, const Tolerances& tol) {
  const auto insts = generate_corpus(seed, count);
  std::vector<std::string> lines(insts.size());
  parallel_for(count, jobs, [&](int i) { lines[i] = corpus_record(insts[i], tol).dump(); });
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

CorpusSummary verify_corpus(std::uint64_t seed, int count, int jobs, Arith arith, const Tolerances& tol) {
  const auto insts = generate_corpus(seed, count);
  std::vector<VerifyReport> reps(insts.size());
  std::vector<std::string> errors(insts.size());
  parallel_for(count, jobs, [&](int i) {
    try {
      reps[i] = verify(insts[i].params, arith, tol);
    } catch (const Error& e) {
      errors[i] = std::string(hypstokes::to_string(e.code())) + ": " + e.what();
    }
  });
  CorpusSummary s;
  s.instances = count;
  Json worst = Json::object();
  std::map<std::string, double> maxima;
  Json failed = Json::array();
  for (int i = 0; i < count; ++i) {
    bool ok = errors[i].empty() && reps[i].passed();
    for (const auto& c : reps[i].checks) {
      double& m = maxima[c.name];
      m = std::max(m, std::isfinite(c.value) ? c.value : std::numeric_limits<double>::infinity());
    }
    if (!ok) {
      ++s.failures;
      Json f{{"index", i}, {"kind", insts[i].kind}, {"params", params_to_json(insts[i].params)}};
      if (!errors[i].empty()) f["error"] = errors[i];
      Json bad = Json::array();
      for (const auto& c : reps[i].checks)
        if (!c.passed) bad.push_back(c.name);
      f["failed_checks"] = bad;
      failed.push_back(std::move(f));
    }
  }
  for (const auto& [k, v] : maxima) worst[k] = std::isfinite(v) ? Json(v) : Json(nullptr);
  s.report = {{"schema", kResultSchema}, {"kind", "verify_corpus"}, {"seed", seed},
              {"instances", count},      {"failures", s.failures},  {"passed", s.failures == 0},
              {"max_residuals", worst},  {"failed", failed}};
  return s;
}

}  // namespace hypstokes::engine
