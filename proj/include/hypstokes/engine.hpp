#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hypstokes/serialize.hpp"

namespace hypstokes::engine {

enum class Arith { Auto, Double, High, Exact };
enum class Form { Companion, Jordan, Normal, Quiver };

Arith parse_arith(std::string_view s);
const char* to_string(Arith a);
Form parse_form(std::string_view s);
const char* to_string(Form f);

// lcm of all exponent denominators; 0 if some exponent is a float.
long long cyclotomic_order(const HyperParams& p);

// Auto: float input runs in double. Rational input runs exactly when the common
// cyclotomic field has degree <= 24 and at 50 digits otherwise. Exact on float
// input raises InexactInput.
Arith resolve_arith(Arith a, const HyperParams& p);

Json compute(const HyperParams& p, Form form, Arith arith, const Tolerances& tol);

struct Check {
  std::string name;
  double value = 0;
  double threshold = 0;
  bool passed = false;
  std::string note;
};

struct VerifyReport {
  std::vector<Check> checks;
  Arith arith = Arith::Double;

  bool passed() const;
  const Check* find(std::string_view name) const;
  Json to_json() const;
};

// Invariant suite for one parameter set: route agreement (four constructions
// against the closed form), spectral and determinant identities, quiver
// validity, normal-form idempotence, the Gamma-function identity when
// diagonalizable, and snapping when a rationality property holds.
VerifyReport verify(const HyperParams& p, Arith arith, const Tolerances& tol);

// Normalizes an externally supplied pair and compares it with the closed form.
VerifyReport verify_pair(const StokesPair<Complex>& sp, const HyperParams& p, const Tolerances& tol);

struct CorpusInstance {
  int index = 0;
  std::string kind;  // random | repeated_beta | cyclotomic | conjugate | diagonal
  HyperParams params;
};

// Deterministic generic rational instances: n <= 6, denominators <= 12. Kinds
// cycle random, repeated_beta, repeated_beta, cyclotomic, conjugate.
std::vector<CorpusInstance> generate_corpus(std::uint64_t seed, int count);

// Generic instances with pairwise distinct beta mod Z, n in [2, 5].
std::vector<CorpusInstance> generate_diagonal(std::uint64_t seed, int count);

CorpusInstance make_instance(std::uint64_t seed, int index, std::string_view kind);

// One JSON object per instance, schema-versioned.
Json corpus_record(const CorpusInstance& inst, const Tolerances& tol);

// Runs fn(i) for i in [0, count) on up to jobs threads (0 = hardware).
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

std::string corpus_jsonl(std::uint64_t seed, int count, int jobs, const Tolerances& tol);

struct CorpusSummary {
  int instances = 0;
  int failures = 0;
  Json report;
};

CorpusSummary verify_corpus(std::uint64_t seed, int count, int jobs, Arith arith, const Tolerances& tol);

// Plain-text rendering of any result object produced above.
std::string pretty(const Json& result);

inline constexpr const char* kCorpusSchema = "hypstokes.corpus/1";
inline constexpr const char* kResultSchema = "hypstokes.result/1";

}  // namespace hypstokes::engine
