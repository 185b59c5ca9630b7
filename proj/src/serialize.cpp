#include "hypstokes/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace hypstokes {

namespace {

Json bigint_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min())
    return v.convert_to<long long>();
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    Exponent e = Exponent::parse(j.get<std::string>(), true);
    if (!e.is_exact() || boost::multiprecision::denominator(e.exact()) != 1)
      fail(ErrorCode::Parse, "expected an integer, got '" + j.get<std::string>() + "'");
    return boost::multiprecision::numerator(e.exact());
  }
  fail(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json exponent_to_json(const Exponent& e) {
  if (!e.is_exact()) return e.approx();
  const Rational& q = e.exact();
  return Json{{"num", bigint_to_json(boost::multiprecision::numerator(q))},
              {"den", bigint_to_json(boost::multiprecision::denominator(q))}};
}

Exponent exponent_from_json(const Json& j, bool exact_mode) {
  Exponent e;
  if (j.is_object()) {
    const BigInt num = bigint_from_json(member(j, "num"));
    const BigInt den = bigint_from_json(member(j, "den"));
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in " + j.dump());
    e = Exponent(Rational(num, den));
  } else if (j.is_number_integer()) {
    e = Exponent(Rational(j.get<long long>()));
  } else if (j.is_number_float()) {
    if (exact_mode)
      fail(ErrorCode::InexactInput, "floating exponent " + j.dump() + " in exact mode (use {num, den} or a string)");
    e = Exponent::from_double(j.get<double>());
  } else if (j.is_string()) {
    e = Exponent::parse(j.get<std::string>(), exact_mode);
  } else {
    fail(ErrorCode::Parse, "cannot read an exponent from " + j.dump());
  }
  return exact_mode ? e : e.to_float();
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object()) return {member(j, "re").get<double>(), j.value("im", 0.0)};
  if (j.is_number()) return {j.get<double>(), 0.0};
  fail(ErrorCode::Parse, "cannot read a complex number from " + j.dump());
}

Json params_to_json(const HyperParams& p) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : p.alpha) a.push_back(exponent_to_json(x));
  for (const auto& x : p.beta) b.push_back(exponent_to_json(x));
  return Json{{"alpha", a}, {"beta", b}, {"glambda", {{"re", p.glambda.real()}, {"im", p.glambda.imag()}}}};
}

HyperParams params_from_json(const Json& j, bool exact_mode) {
  HyperParams p;
  const Json& a = member(j, "alpha");
  const Json& b = member(j, "beta");
  if (!a.is_array() || !b.is_array()) fail(ErrorCode::Parse, "alpha and beta must be arrays");
  for (const auto& x : a) p.alpha.push_back(exponent_from_json(x, exact_mode));
  for (const auto& x : b) p.beta.push_back(exponent_from_json(x, exact_mode));
  if (j.contains("glambda")) p.glambda = complex_from_json(j.at("glambda"));
  p.check_well_formed();
  return p;
}

Json report_to_json(const GenericityReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", to_string(x.kind)}, {"indices", x.indices}});
  return {{"is_generic", r.is_generic}, {"violations", v}};
}

GenericityReport report_from_json(const Json& j) {
  GenericityReport r;
  r.is_generic = member(j, "is_generic").get<bool>();
  for (const auto& x : member(j, "violations")) {
    const std::string kind = member(x, "kind").get<std::string>();
    Violation v;
    if (kind == "resonant_pair")
      v.kind = Violation::Kind::ResonantPair;
    else if (kind == "integral_alpha")
      v.kind = Violation::Kind::IntegralAlpha;
    else
      fail(ErrorCode::Parse, "unknown violation kind '" + kind + "'");
    v.indices = member(x, "indices").get<std::vector<int>>();
    r.violations.push_back(std::move(v));
  }
  return r;
}

Json clusters_to_json(const EigenvalueClusters& c) {
  Json a = Json::array();
  for (const auto& k : c.clusters) {
    std::vector<int> members;
    for (int m : k.members) members.push_back(m + 1);  // 0 marks the extra eigenvalue 1
    a.push_back({{"exponent", exponent_to_json(k.exponent)},
                 {"eigenvalue", complex_to_json(eigenvalue_of(k.exponent, -1))},
                 {"kappa", k.kappa},
                 {"members", members}});
  }
  return a;
}

EigenvalueClusters clusters_from_json(const Json& j) {
  EigenvalueClusters c;
  for (const auto& k : j) {
    const Json& e = member(k, "exponent");
    Cluster cl{exponent_from_json(e, !e.is_number_float()), member(k, "kappa").get<int>(), {}};
    for (int m : member(k, "members").get<std::vector<int>>()) cl.members.push_back(m - 1);
    c.clusters.push_back(std::move(cl));
  }
  return c;
}

Json exact_vector_to_json(const std::vector<Cyclotomic>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Json exact_matrix_to_json(const Matrix<Cyclotomic>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(exact_vector_to_json(m.row_vector(i)));
  return rows;
}

std::vector<Complex> complex_vector_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "expected an array of complex numbers");
  std::vector<Complex> v;
  for (const auto& x : j) v.push_back(complex_from_json(x));
  return v;
}

Matrix<Complex> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::Parse, "expected a nonempty matrix");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matrix<Complex> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto r = complex_vector_from_json(j[i]);
    if (static_cast<int>(r.size()) != cols) fail(ErrorCode::Parse, "ragged matrix");
    for (int c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

StokesPair<Complex> stokes_from_json(const Json& j) {
  StokesPair<Complex> sp;
  sp.s_plus = matrix_from_json(member(j, "s_plus"));
  sp.s_minus = matrix_from_json(member(j, "s_minus"));
  const auto blocks = j.contains("blocks") ? j.at("blocks").get<std::vector<int>>()
                                           : std::vector<int>{sp.s_plus.rows() - 1, 1};
  if (blocks.size() != 2) fail(ErrorCode::Parse, "blocks must have two entries");
  sp.r0 = blocks[0];
  sp.rrho = blocks[1];
  sp.route = j.value("route", "input");
  return sp;
}

NormalFormPair<Complex> normal_form_from_json(const Json& j) {
  NormalFormPair<Complex> nf;
  nf.z = complex_vector_from_json(member(j, "z"));
  nf.clusters = clusters_from_json(member(j, "clusters"));
  const Json& l = member(j, "lambda_exp");
  nf.lambda_exp = exponent_from_json(l, !l.is_number_float());
  nf.m_inf_minus = matrix_from_json(member(j, "m_inf_minus"));
  return nf;
}

std::string format_complex(const Complex& z, int digits) {
  auto num = [&](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    std::string s(buf);
    return s == "-0" ? std::string("0") : s;
  };
  const double tiny = 1e-13 * std::max(1.0, std::abs(z));
  const bool has_re = std::abs(z.real()) > tiny;
  const bool has_im = std::abs(z.imag()) > tiny;
  if (!has_im) return num(has_re ? z.real() : 0.0);
  std::string im;
  if (std::abs(z.imag() - 1) <= tiny)
    im = "i";
  else if (std::abs(z.imag() + 1) <= tiny)
    im = "-i";
  else
    im = num(z.imag()) + "i";
  if (!has_re) return im;
  return num(z.real()) + (im[0] == '-' ? "" : "+") + im;
}

std::string format_block_matrix(const Matrix<Complex>& m, int r0) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      cells[i][j] = format_complex(m(i, j));
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::ostringstream os;
  auto rule = [&] {
    os << "  [";
    for (int j = 0; j < m.cols(); ++j) {
      if (j == r0 && j > 0) os << "-+";
      os << std::string(width[j] + 2, '-');
    }
    os << "]\n";
  };
  for (int i = 0; i < m.rows(); ++i) {
    if (i == r0 && i > 0) rule();
    os << "  [";
    for (int j = 0; j < m.cols(); ++j) {
      if (j == r0 && j > 0) os << " |";
      os << ' ' << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j] << ' ';
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace hypstokes
