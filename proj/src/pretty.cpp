#include <cstdio>
#include <sstream>

#include "hypstokes/engine.hpp"

namespace hypstokes::engine {

namespace {

std::string exponent_text(const Json& e) {
  if (e.is_object()) {
    const std::string num = e["num"].is_string() ? e["num"].get<std::string>() : e["num"].dump();
    const std::string den = e["den"].is_string() ? e["den"].get<std::string>() : e["den"].dump();
    return den == "1" ? num : num + "/" + den;
  }
  return e.dump();
}

std::string list_text(const Json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + exponent_text(a[i]);
  return s + ")";
}

void params_text(std::ostream& os, const Json& p) {
  os << "alpha = " << list_text(p["alpha"]) << "\n";
  os << "beta  = " << list_text(p["beta"]) << "\n";
  os << "glambda = " << format_complex({p["glambda"]["re"].get<double>(), p["glambda"]["im"].get<double>()}) << "\n";
}

std::string value_text(const Json& v) {
  if (v.is_null()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v.get<double>());
  return buf;
}

void stokes_text(std::ostream& os, const Json& s) {
  const int r0 = s["blocks"][0].get<int>();
  os << "S+ =\n" << format_block_matrix(matrix_from_json(s["s_plus"]), r0);
  os << "S- =\n" << format_block_matrix(matrix_from_json(s["s_minus"]), r0);
  if (s.contains("s_minus_exact")) {
    os << "exact entries (zN = exp(2 pi i / N)):\n";
    for (const char* key : {"s_plus_exact", "s_minus_exact"}) {
      os << "  " << (key[2] == 'p' ? "S+" : "S-") << ":\n";
      for (const auto& row : s[key]) {
        os << "   ";
        for (const auto& x : row) os << " [" << x.get<std::string>() << "]";
        os << "\n";
      }
    }
  }
}

void normal_form_text(std::ostream& os, const Json& nf) {
  const auto z = complex_vector_from_json(nf["z"]);
  const auto& clusters = nf["clusters"];
  os << "z =";
  std::size_t k = 0;
  for (const auto& c : clusters) {
    os << " [";
    for (int i = 0; i < c["kappa"].get<int>(); ++i, ++k) os << (i ? ", " : "") << format_complex(z.at(k));
    os << "]";
  }
  os << "\n";
  if (nf.contains("z_exact")) {
    os << "z (exact) =";
    for (const auto& x : nf["z_exact"]) os << " [" << x.get<std::string>() << "]";
    os << "\n";
  }
  os << "clusters:\n";
  for (const auto& c : clusters) {
    std::vector<int> m = c["members"].get<std::vector<int>>();
    os << "  exponent " << exponent_text(c["exponent"]) << "  eigenvalue "
       << format_complex(complex_from_json(c["eigenvalue"])) << "  kappa " << c["kappa"].get<int>() << "  beta index";
    for (int x : m) os << ' ' << x;
    os << "\n";
  }
  os << "M_inf^- =\n" << format_block_matrix(matrix_from_json(nf["m_inf_minus"]), static_cast<int>(z.size()));
}

void checks_text(std::ostream& os, const Json& rep) {
  std::size_t w = 5;
  for (const auto& c : rep["checks"]) w = std::max(w, c["name"].get<std::string>().size());
  for (const auto& c : rep["checks"]) {
    const std::string name = c["name"].get<std::string>();
    os << (c["passed"].get<bool>() ? "  ok    " : "  FAIL  ") << name << std::string(w - name.size() + 2, ' ')
       << value_text(c["value"]) << "  <= " << value_text(c["threshold"]);
    if (c.contains("note")) os << "  (" << c["note"].get<std::string>() << ")";
    os << "\n";
  }
}

}  // namespace

std::string pretty(const Json& r) {
  std::ostringstream os;
  const std::string kind = r.value("kind", "");
  if (r.contains("params")) params_text(os, r["params"]);
  if (kind == "compute") {
    os << "form " << r["form"].get<std::string>() << ", arithmetic " << r["arith"].get<std::string>()
       << ", lambda = " << exponent_text(r["lambda_exp"]) << "\n";
    if (r.contains("stokes")) stokes_text(os, r["stokes"]);
    if (r.contains("normal_form")) normal_form_text(os, r["normal_form"]);
  } else if (kind == "verify") {
    os << "arithmetic " << r["report"]["arith"].get<std::string>() << "\n";
    checks_text(os, r["report"]);
    os << (r["report"]["passed"].get<bool>() ? "all checks passed" : "verification FAILED") << "\n";
  } else if (kind == "genericity") {
    const auto& g = r["report"];
    os << (g["is_generic"].get<bool>() ? "generic" : "not generic") << "\n";
    for (const auto& v : g["violations"]) {
      os << "  " << v["kind"].get<std::string>();
      for (int i : v["indices"].get<std::vector<int>>()) os << ' ' << i;
      os << "\n";
    }
  } else if (kind == "verify_corpus") {
    os << "seed " << r["seed"].dump() << ", " << r["instances"].get<int>() << " instances, " << r["failures"].get<int>()
       << " failures\n";
    os << "largest residuals:\n";
    for (const auto& [name, v] : r["max_residuals"].items()) os << "  " << name << "  " << value_text(v) << "\n";
    for (const auto& f : r["failed"]) {
      os << "FAIL #" << f["index"].get<int>() << " (" << f["kind"].get<std::string>() << ")";
      for (const auto& c : f["failed_checks"]) os << ' ' << c.get<std::string>();
      if (f.contains("error")) os << "  " << f["error"].get<std::string>();
      os << "\n";
    }
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace hypstokes::engine
