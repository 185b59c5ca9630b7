#pragma once

#include <json.hpp>

#include <string>

#include "hypstokes/crosscheck.hpp"

namespace hypstokes {

using Json = nlohmann::json;

// Rationals as {"num", "den"}, floats as numbers. Strings such as "1/3" are also
// accepted on input.
Json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const Json& j, bool exact_mode);

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json params_to_json(const HyperParams& p);
// exact_mode: JSON floats are rejected (InexactInput); otherwise all exponents
// become floats.
HyperParams params_from_json(const Json& j, bool exact_mode);

Json report_to_json(const GenericityReport& r);
GenericityReport report_from_json(const Json& j);

Json clusters_to_json(const EigenvalueClusters& c);
EigenvalueClusters clusters_from_json(const Json& j);

template <class T>
Json scalar_to_json(const T& x) {
  return complex_to_json(approx(x));
}

template <class T>
Json vector_to_json(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

template <class T>
Json matrix_to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row_vector(i)));
  return rows;
}

// Exact cyclotomic entries as strings in the power basis, e.g. "1 + z12^3".
Json exact_matrix_to_json(const Matrix<Cyclotomic>& m);
Json exact_vector_to_json(const std::vector<Cyclotomic>& v);

std::vector<Complex> complex_vector_from_json(const Json& j);
Matrix<Complex> matrix_from_json(const Json& j);

template <class T>
Json stokes_to_json(const StokesPair<T>& sp) {
  Json j{{"s_plus", matrix_to_json(sp.s_plus)},
         {"s_minus", matrix_to_json(sp.s_minus)},
         {"blocks", {sp.r0, sp.rrho}},
         {"route", sp.route}};
  if constexpr (std::is_same_v<T, Cyclotomic>) {
    j["s_plus_exact"] = exact_matrix_to_json(sp.s_plus);
    j["s_minus_exact"] = exact_matrix_to_json(sp.s_minus);
  }
  return j;
}

StokesPair<Complex> stokes_from_json(const Json& j);

template <class T>
Json normal_form_to_json(const NormalFormPair<T>& nf) {
  Json j{{"z", vector_to_json(nf.z)},
         {"z_blocks", nf.clusters.block_sizes()},
         {"clusters", clusters_to_json(nf.clusters)},
         {"lambda_exp", exponent_to_json(nf.lambda_exp)},
         {"m_inf_minus", matrix_to_json(nf.m_inf_minus)}};
  if constexpr (std::is_same_v<T, Cyclotomic>) {
    j["z_exact"] = exact_vector_to_json(nf.z);
    j["m_inf_minus_exact"] = exact_matrix_to_json(nf.m_inf_minus);
  }
  return j;
}

NormalFormPair<Complex> normal_form_from_json(const Json& j);

// Human-readable rendering of a complex number, e.g. "1", "-i", "2-1i", "0.30880-0.33942i".
std::string format_complex(const Complex& z, int digits = 10);

// Matrix with rules separating the (r0, rrho) blocks.
std::string format_block_matrix(const Matrix<Complex>& m, int r0);

}  // namespace hypstokes
