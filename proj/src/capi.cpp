#include "hypstokes/hypstokes.h"

#include <new>
#include <sstream>

#include "hypstokes/engine.hpp"

using namespace hypstokes;

struct hs_params {
  HyperParams p;
};

struct hs_result {
  Json json;        // single object, or null for jsonl
  std::string raw;  // jsonl payload
  bool passed = true;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

hs_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return HS_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HS_ERR_PARSE;
    case ErrorCode::NotGeneric: return HS_ERR_NOT_GENERIC;
    case ErrorCode::AmbiguousClustering: return HS_ERR_AMBIGUOUS_CLUSTERING;
    case ErrorCode::InexactInput: return HS_ERR_INEXACT_INPUT;
    case ErrorCode::PoleAtCenter: return HS_ERR_POLE_AT_CENTER;
    case ErrorCode::SingularMatrix: return HS_ERR_SINGULAR_MATRIX;
    case ErrorCode::HypothesesViolated: return HS_ERR_HYPOTHESES_VIOLATED;
    case ErrorCode::ShapeMismatch: return HS_ERR_SHAPE_MISMATCH;
    case ErrorCode::ZeroLeadingEntry: return HS_ERR_ZERO_LEADING_ENTRY;
    case ErrorCode::InvalidQuiver: return HS_ERR_INVALID_QUIVER;
    case ErrorCode::NotDiagonalizable: return HS_ERR_NOT_DIAGONALIZABLE;
    case ErrorCode::PoleOfGamma: return HS_ERR_POLE_OF_GAMMA;
    case ErrorCode::SnapFailure: return HS_ERR_SNAP_FAILURE;
    case ErrorCode::Io: return HS_ERR_IO;
  }
  return HS_ERR_INTERNAL;
}

template <class F>
hs_status guarded(F&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("json: ") + e.what();
    return HS_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HS_ERR_INTERNAL;
  }
}

Tolerances tolerances(const hs_tolerances* t) {
  Tolerances r;
  if (!t) return r;
  r.int_tol = t->int_tol;
  r.cluster_tol = t->cluster_tol;
  r.compare_tol = t->compare_tol;
  r.snap_tol = t->snap_tol;
  for (double x : {r.int_tol, r.cluster_tol, r.compare_tol, r.snap_tol})
    if (!(x > 0)) fail(ErrorCode::InvalidArgument, "tolerances must be positive");
  return r;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

std::vector<std::string> split_list(const char* s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      if (!out.empty() || is.peek() != EOF) fail(ErrorCode::Parse, std::string("empty entry in '") + s + "'");
      continue;
    }
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

hs_result* make_result(Json j, bool passed) {
  auto* r = new hs_result;
  r->json = std::move(j);
  r->passed = passed;
  return r;
}

// Non-generic parameters produce a report rather than a bare error.
bool report_if_not_generic(const HyperParams& p, const Tolerances& tol, hs_result** out) {
  const GenericityReport rep = validate_generic(p, tol.int_tol);
  if (rep.is_generic) return false;
  *out = make_result({{"schema", engine::kResultSchema},
                      {"kind", "genericity"},
                      {"params", params_to_json(p)},
                      {"report", report_to_json(rep)}},
                     false);
  g_last_error = rep.describe();
  return true;
}

}  // namespace

extern "C" {

hs_tolerances hs_default_tolerances(void) {
  const Tolerances t;
  return {t.int_tol, t.cluster_tol, t.compare_tol, t.snap_tol};
}

hs_status hs_params_from_json(const char* json, int exact, hs_params** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = nullptr;
    const Json j = Json::parse(json);
    *out = new hs_params{params_from_json(j, exact != 0)};
    return HS_OK;
  });
}

hs_status hs_params_from_lists(const char* alpha, const char* beta, double re, double im, int exact, hs_params** out) {
  return guarded([&] {
    need(alpha, "alpha");
    need(beta, "beta");
    need(out, "out");
    *out = nullptr;
    HyperParams p = make_params(split_list(alpha), split_list(beta), {re, im}, exact != 0);
    if (!exact) p = p.to_float();
    *out = new hs_params{std::move(p)};
    return HS_OK;
  });
}

void hs_params_free(hs_params* p) { delete p; }

hs_status hs_compute(const hs_params* p, const char* form, const char* arith, const hs_tolerances* tol, hs_result** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = nullptr;
    const Tolerances t = tolerances(tol);
    const auto f = engine::parse_form(form ? form : "companion");
    const auto a = engine::parse_arith(arith ? arith : "auto");
    if (report_if_not_generic(p->p, t, out)) return HS_ERR_NOT_GENERIC;
    *out = make_result(engine::compute(p->p, f, a, t), true);
    return HS_OK;
  });
}

hs_status hs_verify(const hs_params* p, const char* arith, const hs_tolerances* tol, hs_result** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = nullptr;
    const Tolerances t = tolerances(tol);
    const auto a = engine::parse_arith(arith ? arith : "auto");
    if (report_if_not_generic(p->p, t, out)) return HS_ERR_NOT_GENERIC;
    const auto rep = engine::verify(p->p, a, t);
    *out = make_result({{"schema", engine::kResultSchema},
                        {"kind", "verify"},
                        {"params", params_to_json(p->p)},
                        {"report", rep.to_json()}},
                       rep.passed());
    return HS_OK;
  });
}

hs_status hs_verify_pair(const hs_params* p, const char* pair_json, const hs_tolerances* tol, hs_result** out) {
  return guarded([&] {
    need(p, "params");
    need(pair_json, "pair_json");
    need(out, "out");
    *out = nullptr;
    const Tolerances t = tolerances(tol);
    if (report_if_not_generic(p->p, t, out)) return HS_ERR_NOT_GENERIC;
    Json j = Json::parse(pair_json);
    if (j.contains("stokes")) j = j["stokes"];
    const auto rep = engine::verify_pair(stokes_from_json(j), p->p, t);
    *out = make_result({{"schema", engine::kResultSchema},
                        {"kind", "verify"},
                        {"params", params_to_json(p->p)},
                        {"report", rep.to_json()}},
                       rep.passed());
    return HS_OK;
  });
}

hs_status hs_corpus(uint64_t seed, int count, int jobs, const hs_tolerances* tol, hs_result** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    auto* r = make_result(nullptr, true);
    try {
      r->raw = engine::corpus_jsonl(seed, count, jobs, tolerances(tol));
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
    return HS_OK;
  });
}

hs_status hs_verify_corpus(uint64_t seed, int count, int jobs, const char* arith, const hs_tolerances* tol,
                           hs_result** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    const auto s = engine::verify_corpus(seed, count, jobs, engine::parse_arith(arith ? arith : "auto"), tolerances(tol));
    *out = make_result(s.report, s.failures == 0);
    return HS_OK;
  });
}

const char* hs_result_text(hs_result* r, hs_format format) {
  if (!r) return "";
  try {
    if (r->json.is_null())
      r->text = r->raw;
    else if (format == HS_FORMAT_PRETTY)
      r->text = engine::pretty(r->json);
    else
      r->text = r->json.dump(2) + "\n";
  } catch (const std::exception& e) {
    g_last_error = e.what();
    r->text.clear();
  }
  return r->text.c_str();
}

int hs_result_passed(const hs_result* r) { return r && r->passed ? 1 : 0; }

void hs_result_free(hs_result* r) { delete r; }

const char* hs_last_error(void) { return g_last_error.c_str(); }

const char* hs_status_name(hs_status s) {
  switch (s) {
    case HS_OK: return "ok";
    case HS_ERR_INTERNAL: return "internal";
    default:
      if (s > HS_OK && s < HS_ERR_INTERNAL) return hypstokes::to_string(static_cast<ErrorCode>(s - 1));
  }
  return "unknown";
}

}  // extern "C"
