#include "hypstokes/engine.hpp"

#include <numeric>
#include <sstream>

namespace hypstokes::engine {

Arith parse_arith(std::string_view s) {
  if (s == "auto") return Arith::Auto;
  if (s == "double") return Arith::Double;
  if (s == "high") return Arith::High;
  if (s == "exact") return Arith::Exact;
  fail(ErrorCode::InvalidArgument, "unknown arithmetic '" + std::string(s) + "' (auto|double|high|exact)");
}

const char* to_string(Arith a) {
  switch (a) {
    case Arith::Auto: return "auto";
    case Arith::Double: return "double";
    case Arith::High: return "high";
    case Arith::Exact: return "exact";
  }
  return "auto";
}

Form parse_form(std::string_view s) {
  if (s == "companion") return Form::Companion;
  if (s == "jordan") return Form::Jordan;
  if (s == "normal") return Form::Normal;
  if (s == "quiver") return Form::Quiver;
  fail(ErrorCode::InvalidArgument, "unknown form '" + std::string(s) + "' (companion|jordan|normal|quiver)");
}

const char* to_string(Form f) {
  switch (f) {
    case Form::Companion: return "companion";
    case Form::Jordan: return "jordan";
    case Form::Normal: return "normal";
    case Form::Quiver: return "quiver";
  }
  return "companion";
}

long long cyclotomic_order(const HyperParams& p) {
  long long n = 1;
  auto add = [&](const Exponent& e) {
    if (!e.is_exact()) return false;
    const long long d = to_ll(boost::multiprecision::denominator(e.exact()));
    n = std::lcm(n, d);
    if (n > 1'000'000) fail(ErrorCode::InvalidArgument, "exponent denominators are too large");
    return true;
  };
  for (const auto& a : p.alpha)
    if (!add(a)) return 0;
  for (const auto& b : p.beta)
    if (!add(b)) return 0;
  return n;
}

namespace {

long long euler_phi(long long n) {
  long long r = n;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      r -= r / q;
    }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

Arith resolve_arith(Arith a, const HyperParams& p) {
  const long long order = cyclotomic_order(p);
  if (a == Arith::Exact && order == 0)
    fail(ErrorCode::InexactInput, "exact arithmetic needs rational exponents (use --mode exact)");
  if (a != Arith::Auto) return a;
  if (order == 0) return Arith::Double;
  return euler_phi(order) <= 24 ? Arith::Exact : Arith::High;
}

namespace {

template <class T>
Json compute_impl(const HyperParams& p, Form form, const Tolerances& tol) {
  Json out;
  switch (form) {
    case Form::Companion:
      out["stokes"] = stokes_to_json(stokes_companion<T>(p, tol));
      break;
    case Form::Quiver:
      out["stokes"] = stokes_to_json(stokes_from_quiver(quiver_companion<T>(p, tol)));
      break;
    case Form::Jordan:
      out["normal_form"] = normal_form_to_json(stokes_jordan<T>(p, tol));
      break;
    case Form::Normal: {
      const auto cl = cluster_beta(p.beta, tol.cluster_tol);
      out["normal_form"] = normal_form_to_json(normalize(stokes_companion<T>(p, tol), cl, p.lambda_exp(), tol.compare_tol));
      break;
    }
  }
  return out;
}

}  // namespace

Json compute(const HyperParams& p, Form form, Arith arith, const Tolerances& tol) {
  const Arith a = resolve_arith(arith, p);
  require_generic(p, tol.int_tol);
  Json body;
  switch (a) {
    case Arith::Exact: body = compute_impl<Cyclotomic>(p, form, tol); break;
    case Arith::High: body = compute_impl<ComplexHP>(p, form, tol); break;
    default: body = compute_impl<Complex>(p, form, tol); break;
  }
  Json out{{"schema", kResultSchema},
           {"kind", "compute"},
           {"form", to_string(form)},
           {"arith", to_string(a)},
           {"params", params_to_json(p)},
           {"lambda_exp", exponent_to_json(p.lambda_exp())},
           {"orientation", kOrientation}};
  out.update(body);
  return out;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const Check* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Json VerifyReport::to_json() const {
  Json a = Json::array();
  for (const auto& c : checks) {
    Json j{{"name", c.name}, {"threshold", c.threshold}, {"passed", c.passed}};
    j["value"] = std::isfinite(c.value) ? Json(c.value) : Json(nullptr);
    if (!c.note.empty()) j["note"] = c.note;
    a.push_back(std::move(j));
  }
  return {{"arith", to_string(arith)}, {"passed", passed()}, {"checks", a}};
}

}  // namespace hypstokes::engine
