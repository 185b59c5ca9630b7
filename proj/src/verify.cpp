#include <limits>

#include "hypstokes/engine.hpp"

namespace hypstokes::engine {

namespace {

class Runner {
 public:
  explicit Runner(VerifyReport& rep) : rep_(rep) {}

  template <class F>
  void operator()(std::string name, double threshold, F&& fn) {
    Check c{std::move(name), 0, threshold, false, {}};
    try {
      c.value = fn();
      c.passed = c.value <= threshold;  // false for NaN
    } catch (const Error& e) {
      c.value = std::numeric_limits<double>::infinity();
      c.note = std::string(hypstokes::to_string(e.code())) + ": " + e.what();
    }
    rep_.checks.push_back(std::move(c));
  }

 private:
  VerifyReport& rep_;
};

template <class T>
double poly_diff(const poly::Polynomial<T>& a, const poly::Polynomial<T>& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  double m = 0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, magnitude(a.coeff(i) - b.coeff(i)));
  return m;
}

template <class T>
double failed_checks(const Quiver<T>& q) {
  int bad = 0;
  for (const auto& c : quiver_validate(q).checks) bad += c.passed ? 0 : 1;
  return bad;
}

template <class T>
void verify_impl(const HyperParams& p, const Tolerances& tol, VerifyReport& rep) {
  Runner run(rep);
  const int n = p.n();
  const double ctol = tol.compare_tol;
  const EigenvalueClusters cl = cluster_beta(p.beta, tol.cluster_tol);
  const Exponent lam = p.lambda_exp();
  const NormalFormPair<T> ref = stokes_jordan<T>(p, tol);
  const StokesPair<T> comp = stokes_companion<T>(p, tol);
  const Quiver<T> qc = quiver_companion<T>(p, tol);
  // The Jordan-basis and monodromy quivers are badly conditioned under
  // normalization when eigenvalues crowd; in double they run at 50 digits.
  using O = std::conditional_t<std::is_same_v<T, Complex>, ComplexHP, T>;
  const Quiver<O> qj = quiver_jordan<O>(p, tol);
  const Quiver<O> qc_o = quiver_companion<O>(p, tol);
  const auto chi_a = poly::char_poly<T>(p.alpha, -1);

  auto route = [&](const StokesPair<T>& sp) { return normal_form_distance(normalize(sp, cl, lam, ctol), ref); };
  run("route_quiver_companion", ctol, [&] { return route(stokes_from_quiver(qc)); });
  run("route_companion", ctol, [&] { return route(comp); });
  const NormalFormPair<O> ref_o = std::is_same_v<T, O> ? NormalFormPair<O>{} : stokes_jordan<O>(p, tol);
  auto route_o = [&](const StokesPair<O>& sp) {
    const auto nf = normalize(sp, cl, lam, ctol);
    if constexpr (std::is_same_v<T, O>)
      return normal_form_distance(nf, ref);
    else
      return normal_form_distance(nf, ref_o);
  };
  run("route_quiver_jordan", ctol, [&] { return route_o(stokes_from_quiver(qj)); });
  run("route_monodromy_quiver", ctol, [&] {
    const auto m = rs_monodromy<O>(to_rs_params(p, tol.int_tol));
    return route_o(stokes_from_quiver(quiver_from_monodromy(m.T0, m.Trho)));
  });
  run("normal_form_idempotent", ctol, [&] { return route(ref.reconstruct()); });
  run("charpoly_topological", 1e-9, [&] { return poly_diff(charpoly(topological_monodromy(comp)), chi_a); });
  run("det_s_plus", 1e-9, [&] { return magnitude(determinant(comp.s_plus) - T(1)); });
  run("det_s_minus", 1e-10, [&] {
    Exponent sa(Rational(0));
    for (const auto& a : p.alpha) sa += a;
    return magnitude(determinant(comp.s_minus) - unit<T>(sa, -1));
  });
  run("formal_monodromy_spectrum", 1e-9, [&] {
    std::vector<T> roots{unit<T>(lam, +1)};
    for (const auto& b : p.beta) roots.push_back(unit<T>(b, -1));
    return poly_diff(charpoly(ref.m_inf_minus), poly::poly_from_roots(roots));
  });
  run("quiver_valid", 0, [&] { return failed_checks(qc) + failed_checks(qj); });
  run("quiver_charpoly_agreement", 1e-9, [&] {
    const auto id = Matrix<O>::identity(n);
    return std::max(poly_diff(charpoly(id - qc_o.v0 * qc_o.u0), charpoly(id - qj.v0 * qj.u0)),
                    poly_diff(charpoly(id - qc_o.vrho * qc_o.urho), charpoly(id - qj.vrho * qj.urho)));
  });
  run("det_trho", 1e-9, [&] {
    const auto id = Matrix<T>::identity(n);
    return magnitude(determinant(id - qc.vrho * qc.urho) - unit<T>(lam, +1));
  });

  if (diagonalizable(cl)) {
    if constexpr (std::is_same_v<T, Complex>)
      run("dm_identity", 1e-8, [&] { return dm_identity_residual<Complex>(p, tol); });
    else
      run("dm_identity", 1e-12, [&] { return dm_identity_residual<ComplexHP>(p, tol); });
  }

  const bool cyc = p.exact() && cyclotomic_property(p.alpha) && cyclotomic_property(p.beta);
  const bool conj = conjugate_property(p.alpha, tol.int_tol) && conjugate_property(p.beta, tol.int_tol);
  if (cyc || conj) {
    SnapResult snapped;
    run(cyc ? "snap_integer" : "snap_real", tol.snap_tol, [&] {
      snapped = snap_integral(comp, p, tol.snap_tol);
      return snapped.residual;
    });
    if (cyc && snapped.pair.s_minus.rows() == n)
      run("snap_det_s_minus_unit", 1e-9, [&] {
        const Complex d = determinant(snapped.pair.s_minus);
        return std::min(std::abs(d - 1.0), std::abs(d + 1.0));
      });
  }
}

}  // namespace

VerifyReport verify(const HyperParams& p, Arith arith, const Tolerances& tol) {
  VerifyReport rep;
  rep.arith = resolve_arith(arith, p);
  require_generic(p, tol.int_tol);
  switch (rep.arith) {
    case Arith::Exact: verify_impl<Cyclotomic>(p, tol, rep); break;
    case Arith::High: verify_impl<ComplexHP>(p, tol, rep); break;
    default: verify_impl<Complex>(p, tol, rep); break;
  }
  return rep;
}

VerifyReport verify_pair(const StokesPair<Complex>& sp, const HyperParams& p, const Tolerances& tol) {
  VerifyReport rep;
  rep.arith = Arith::Double;
  require_generic(p, tol.int_tol);
  Runner run(rep);
  const EigenvalueClusters cl = cluster_beta(p.beta, tol.cluster_tol);
  const auto ref = stokes_jordan<Complex>(p, tol);
  run("route_agreement", tol.compare_tol, [&] {
    if (sp.n() != p.n()) fail(ErrorCode::ShapeMismatch, "pair size does not match the parameters");
    return normal_form_distance(normalize(sp, cl, p.lambda_exp(), tol.compare_tol), ref);
  });
  run("charpoly_topological", 1e-9,
      [&] { return poly_diff(charpoly(topological_monodromy(sp)), poly::char_poly<Complex>(p.alpha, -1)); });
  return rep;
}

}  // namespace hypstokes::engine
