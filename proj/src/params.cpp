#include "hypstokes/params.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hypstokes {

bool HyperParams::exact() const {
  auto ex = [](const Exponent& e) { return e.is_exact(); };
  return std::all_of(alpha.begin(), alpha.end(), ex) && std::all_of(beta.begin(), beta.end(), ex);
}

HyperParams HyperParams::to_float() const {
  HyperParams f = *this;
  for (auto& a : f.alpha) a = a.to_float();
  for (auto& b : f.beta) b = b.to_float();
  return f;
}

Exponent HyperParams::lambda_exp() const {
  Exponent l(Rational(1));
  for (const auto& a : alpha) l -= a;
  for (const auto& b : beta) l += b;
  return l;
}

void HyperParams::check_well_formed() const {
  if (alpha.empty()) fail(ErrorCode::InvalidArgument, "alpha must have at least one entry");
  if (beta.size() + 1 != alpha.size())
    fail(ErrorCode::InvalidArgument, "beta must have exactly n - 1 = " + std::to_string(alpha.size() - 1) +
                                         " entries (got " + std::to_string(beta.size()) + ")");
  if (glambda == Complex(0.0, 0.0)) fail(ErrorCode::InvalidArgument, "glambda must be nonzero");
  if (!std::isfinite(glambda.real()) || !std::isfinite(glambda.imag()))
    fail(ErrorCode::InvalidArgument, "glambda must be finite");
}

HyperParams make_params(const std::vector<std::string>& alpha, const std::vector<std::string>& beta,
                        Complex glambda, bool exact_decimals) {
  HyperParams p;
  for (const auto& s : alpha) p.alpha.push_back(Exponent::parse(s, exact_decimals));
  for (const auto& s : beta) p.beta.push_back(Exponent::parse(s, exact_decimals));
  p.glambda = glambda;
  p.check_well_formed();
  return p;
}

const char* to_string(Violation::Kind kind) {
  return kind == Violation::Kind::ResonantPair ? "resonant_pair" : "integral_alpha";
}

std::string GenericityReport::describe() const {
  if (is_generic) return "generic";
  std::ostringstream os;
  os << "not generic:";
  for (const auto& v : violations) {
    os << ' ' << to_string(v.kind) << '(';
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << ')';
  }
  return os.str();
}

GenericityReport validate_generic(const HyperParams& p, double int_tol) {
  p.check_well_formed();
  GenericityReport r;
  for (int i = 0; i < p.n(); ++i)
    if (p.alpha[i].is_integer(int_tol)) r.violations.push_back({Violation::Kind::IntegralAlpha, {i + 1}});
  for (int i = 0; i < p.n(); ++i)
    for (std::size_t j = 0; j < p.beta.size(); ++j)
      if ((p.alpha[i] - p.beta[j]).is_integer(int_tol))
        r.violations.push_back({Violation::Kind::ResonantPair, {i + 1, static_cast<int>(j) + 1}});
  r.is_generic = r.violations.empty();
  return r;
}

void require_generic(const HyperParams& p, double int_tol) {
  GenericityReport r = validate_generic(p, int_tol);
  if (!r.is_generic) fail(ErrorCode::NotGeneric, r.describe());
}

RSParams to_rs_params(const HyperParams& p, double int_tol) {
  require_generic(p, int_tol);
  RSParams rs;
  for (const auto& b : p.beta) rs.gamma.push_back(-b);
  rs.gamma.push_back(Exponent(Rational(1)));
  for (const auto& a : p.alpha) rs.eta.push_back(-a);
  rs.rho = Complex(1.0, 0.0) / p.glambda;
  return rs;
}

int EigenvalueClusters::total() const {
  int t = 0;
  for (const auto& c : clusters) t += c.kappa;
  return t;
}

std::vector<int> EigenvalueClusters::block_sizes() const {
  std::vector<int> s;
  for (const auto& c : clusters) s.push_back(c.kappa);
  return s;
}

int EigenvalueClusters::offset(int j) const {
  int o = 0;
  for (int i = 0; i < j; ++i) o += clusters[i].kappa;
  return o;
}

namespace {

bool all_exact(const std::vector<Exponent>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Exponent& e) { return e.is_exact(); });
}

void sort_canonical(std::vector<Cluster>& cl) {
  std::stable_sort(cl.begin(), cl.end(), [](const Cluster& a, const Cluster& b) { return a.exponent < b.exponent; });
}

}  // namespace

EigenvalueClusters cluster_beta(const std::vector<Exponent>& beta, double cluster_tol) {
  if (!(cluster_tol > 0)) fail(ErrorCode::InvalidArgument, "cluster_tol must be positive");
  std::vector<Cluster> cl;
  const int m = static_cast<int>(beta.size());
  if (all_exact(beta)) {
    for (int i = 0; i < m; ++i) {
      const Exponent r = beta[i].reduced();
      auto it = std::find_if(cl.begin(), cl.end(), [&](const Cluster& c) { return c.exponent == r; });
      if (it == cl.end()) {
        cl.push_back({r, 1, {i}});
      } else {
        ++it->kappa;
        it->members.push_back(i);
      }
    }
  } else {
    std::vector<Complex> ev(m);
    for (int i = 0; i < m; ++i) ev[i] = eigenvalue_of(beta[i].to_float(), -1);
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const double d = std::abs(ev[i] - ev[j]);
        if (d < cluster_tol) {
          parent[find(j)] = find(i);
        } else if (d < 10 * cluster_tol) {
          fail(ErrorCode::AmbiguousClustering, "exponents " + beta[i].to_string() + " and " + beta[j].to_string() +
                                                   " are neither clearly equal nor clearly distinct mod Z");
        }
      }
    for (int i = 0; i < m; ++i) {
      const int root = find(i);
      auto it = std::find_if(cl.begin(), cl.end(), [&](const Cluster& c) { return find(c.members.front()) == root; });
      if (it == cl.end()) {
        cl.push_back({beta[i].to_float().reduced(), 1, {i}});
      } else {
        ++it->kappa;
        it->members.push_back(i);
      }
    }
  }
  sort_canonical(cl);
  return {std::move(cl)};
}

EigenvalueClusters rs_clusters(const std::vector<Exponent>& beta, double cluster_tol) {
  EigenvalueClusters c = cluster_beta(beta, cluster_tol);
  auto is_one = [&](const Cluster& k) {
    if (k.exponent.is_exact()) return k.exponent.exact() == 0;
    return std::abs(eigenvalue_of(k.exponent, -1) - Complex(1.0, 0.0)) < cluster_tol;
  };
  auto it = std::find_if(c.clusters.begin(), c.clusters.end(), is_one);
  Cluster one;
  if (it == c.clusters.end()) {
    one = {Exponent(Rational(0)), 0, {}};
  } else {
    one = *it;
    c.clusters.erase(it);
  }
  ++one.kappa;
  one.members.push_back(-1);
  c.clusters.push_back(std::move(one));
  return c;
}

bool diagonalizable(const EigenvalueClusters& c) {
  return std::all_of(c.clusters.begin(), c.clusters.end(), [](const Cluster& k) { return k.kappa == 1; });
}

}  // namespace hypstokes
