#pragma once

#include <string>
#include <vector>

#include "hypstokes/scalar.hpp"

namespace hypstokes {

struct Tolerances {
  double int_tol = 1e-9;       // float-mode integrality
  double cluster_tol = 1e-8;   // float-mode eigenvalue coincidence
  double compare_tol = 1e-8;   // route agreement and similar comparisons
  double snap_tol = 1e-9;      // integer / real snapping
};

// Exponents (alpha; beta) with len(beta) = n - 1, and the scale glambda != 0.
struct HyperParams {
  std::vector<Exponent> alpha;
  std::vector<Exponent> beta;
  Complex glambda{1.0, 0.0};

  int n() const { return static_cast<int>(alpha.size()); }
  bool exact() const;
  // Float-mode copy: every exponent replaced by its double approximation.
  HyperParams to_float() const;
  // lambda = 1 - sum(alpha) + sum(beta).
  Exponent lambda_exp() const;
  void check_well_formed() const;

  friend bool operator==(const HyperParams&, const HyperParams&) = default;
};

HyperParams make_params(const std::vector<std::string>& alpha, const std::vector<std::string>& beta,
                        Complex glambda = {1.0, 0.0}, bool exact_decimals = true);

struct Violation {
  enum class Kind { ResonantPair, IntegralAlpha };
  Kind kind;
  std::vector<int> indices;  // 1-based: (i, j) for a pair, (i) for alpha

  friend bool operator==(const Violation&, const Violation&) = default;
};

const char* to_string(Violation::Kind kind);

struct GenericityReport {
  bool is_generic = true;
  std::vector<Violation> violations;

  std::string describe() const;
  friend bool operator==(const GenericityReport&, const GenericityReport&) = default;
};

GenericityReport validate_generic(const HyperParams& p, double int_tol = Tolerances{}.int_tol);

// Throws NotGeneric with the report text unless p is generic.
void require_generic(const HyperParams& p, double int_tol = Tolerances{}.int_tol);

struct RSParams {
  std::vector<Exponent> gamma;
  std::vector<Exponent> eta;
  Complex rho;
};

RSParams to_rs_params(const HyperParams& p, double int_tol = Tolerances{}.int_tol);

// Eigenvalue e^{-2 pi i exponent} with multiplicity kappa, evaluated in T.
template <class T>
struct EigenBlock {
  T lambda;
  int kappa;
};

// One cluster of exponents with a common eigenvalue e^{-2 pi i exponent}.
// exponent is the reduced representative of the first member. members are
// 0-based indices into the clustered list; -1 marks the extra eigenvalue 1 on
// the regular-singular side.
struct Cluster {
  Exponent exponent;
  int kappa = 0;
  std::vector<int> members;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct EigenvalueClusters {
  std::vector<Cluster> clusters;

  int total() const;
  int size() const { return static_cast<int>(clusters.size()); }
  std::vector<int> block_sizes() const;
  // Offset of cluster j in the concatenated block layout.
  int offset(int j) const;

  template <class T>
  std::vector<EigenBlock<T>> blocks() const {
    std::vector<EigenBlock<T>> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) out.push_back({unit<T>(c.exponent, -1), c.kappa});
    return out;
  }

  friend bool operator==(const EigenvalueClusters&, const EigenvalueClusters&) = default;
};

// Groups beta by beta_i - beta_j in Z (exact) or |e^{-2 pi i beta_i} - e^{-2 pi i beta_j}|
// < cluster_tol (float). Clusters ascend by reduced exponent. A float distance in
// [cluster_tol, 10 cluster_tol) raises AmbiguousClustering.
EigenvalueClusters cluster_beta(const std::vector<Exponent>& beta, double cluster_tol = Tolerances{}.cluster_tol);

// Clusters of gamma = (-beta, 1) with eigenvalues e^{2 pi i gamma}: the beta
// clusters in canonical order, with the eigenvalue-1 cluster (enlarged by the
// extra exponent) moved to the end.
EigenvalueClusters rs_clusters(const std::vector<Exponent>& beta, double cluster_tol = Tolerances{}.cluster_tol);

// True when no two beta differ by an integer.
bool diagonalizable(const EigenvalueClusters& c);

}  // namespace hypstokes
