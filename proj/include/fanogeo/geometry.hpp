// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "fanogeo/embedding.hpp"

namespace fanogeo {

/// Dense rank-3 array with value semantics.
struct Tensor3 {
  int d0 = 0, d1 = 0, d2 = 0;
  std::vector<double> v;

  Tensor3() = default;
  Tensor3(int a, int b, int c) : d0(a), d1(b), d2(c), v(size_t(a) * b * c, 0.0) {}
  double& operator()(int i, int j, int k) { return v[(size_t(i) * d1 + j) * d2 + k]; }
  double operator()(int i, int j, int k) const { return v[(size_t(i) * d1 + j) * d2 + k]; }
};

/// Dense rank-4 array with value semantics.
struct Tensor4 {
  int d0 = 0, d1 = 0, d2 = 0, d3 = 0;
  std::vector<double> v;

  Tensor4() = default;
  Tensor4(int a, int b, int c, int d)
      : d0(a), d1(b), d2(c), d3(d), v(size_t(a) * b * c * d, 0.0) {}
  double& operator()(int i, int j, int k, int l) {
    return v[((size_t(i) * d1 + j) * d2 + k) * d3 + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return v[((size_t(i) * d1 + j) * d2 + k) * d3 + l];
  }
};

/// Pullback metric g = J^T J with its exact derivative stack.
/// Index conventions: dg(k, m, n) = d g_mn / d u^k and
/// ddg(k, l, m, n) = d^2 g_mn / d u^k d u^l.
struct MetricTensor {
  Eigen::VectorXd point;
  Eigen::MatrixXd g;
  Eigen::MatrixXd g_inv;
  Tensor3 dg;
  std::optional<Tensor4> ddg;        // filled on request
  double condition_number = 0.0;     // largest over smallest eigenvalue of g
};

/// Metric, inverse, and first derivatives at u; second derivatives too when
/// with_second is set. All derivatives are assembled exactly from the
/// monomial structure of the map (no differencing).
MetricTensor induced_metric(const EmbeddingMap& map, const Eigen::VectorXd& u,
                            bool with_second = false);

/// True when the case has a closed-form pullback metric (the three named
/// cases) or scalar curvature (the two two-block named cases).
bool has_metric_closed_form(const ManifoldCase& manifold);
bool has_scalar_closed_form(const ManifoldCase& manifold);

/// Closed-form metric / scalar curvature for the supported named cases;
/// throws std::invalid_argument otherwise.
Eigen::MatrixXd metric_closed_form(const ManifoldCase& manifold, const Eigen::VectorXd& u);
double scalar_curvature_closed_form(const ManifoldCase& manifold, const Eigen::VectorXd& u);

/// Connection coefficients Gamma(l, m, n) = Gamma^l_mn of the metric,
/// computed through a Cholesky solve (the metric is positive definite,
/// bounded below by the identity).
Tensor3 christoffel(const MetricTensor& metric);

/// Curvature data at one point. riemann(k, l, m, n) = R^k_lmn, with
/// R^k_lmn = d_m Gamma^k_nl - d_n Gamma^k_ml + Gamma^e_nl Gamma^k_me
///         - Gamma^e_ml Gamma^k_ne (summed over e); ricci is the (1,3)
///         contraction and scalar its g-inverse trace.
struct CurvatureReport {
  Eigen::VectorXd point;
  Tensor3 christoffel;
  Tensor4 riemann;
  Eigen::MatrixXd ricci;
  double scalar = 0.0;
  double metric_condition_number = 0.0;
};

/// Full pipeline from an explicitly given metric derivative stack. The
/// induced-metric path and any independently produced stack (for instance a
/// finite-difference one) share this assembly.
CurvatureReport curvature_from_stack(const Eigen::VectorXd& point, const Eigen::MatrixXd& g,
                                     const Tensor3& dg, const Tensor4& ddg);

/// Curvature of the embedding's pullback metric at u.
CurvatureReport curvature(const EmbeddingMap& map, const Eigen::VectorXd& u);
double scalar_curvature(const EmbeddingMap& map, const Eigen::VectorXd& u);

/// Largest absolute violations of the curvature identities.
struct SymmetryResiduals {
  double christoffel_symmetry = 0.0;       // Gamma^l_mn - Gamma^l_nm
  double riemann_last_pair = 0.0;          // R^k_lmn + R^k_lnm
  double riemann_first_pair = 0.0;         // lowered R_klmn + R_lkmn
  double riemann_pair_exchange = 0.0;      // lowered R_klmn - R_mnkl
  double first_bianchi = 0.0;              // R^k_lmn + R^k_mnl + R^k_nlm
};

SymmetryResiduals symmetry_residuals(const CurvatureReport& report, const Eigen::MatrixXd& g);

/// Compares the squared embedded distance |F(u + eps v) - F(u)|^2 with the
/// quadratic form eps^2 v^T g v; they agree to relative O(eps).
struct PullbackCheck {
  double embedded_sq = 0.0;
  double quadratic_form = 0.0;
  double rel_error = 0.0;
};

PullbackCheck pullback_length_check(const EmbeddingMap& map, const Eigen::VectorXd& u,
                                    const Eigen::VectorXd& v, double eps);

}  // namespace fanogeo
