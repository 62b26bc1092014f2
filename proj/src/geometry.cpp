// SPDX-License-Identifier: MIT
#include "fanogeo/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace fanogeo {

namespace {

/// Product of u over the monomial's coordinates, skipping up to three of
/// them (monomial entries are distinct, so skipping by value is unambiguous).
double prod_except(const std::vector<int>& mono, const Eigen::VectorXd& u, int s1 = -1,
                   int s2 = -1, int s3 = -1) {
  double p = 1.0;
  for (int x : mono)
    if (x != s1 && x != s2 && x != s3) p *= u[x];
  return p;
}

void check_point(const EmbeddingMap& map, const Eigen::VectorXd& u, const char* who) {
  if (u.size() != map.domain_dim())
    throw std::invalid_argument(std::string(who) + ": point has dimension " +
                                std::to_string(u.size()) + ", expected " +
                                std::to_string(map.domain_dim()));
}

double sumsq(const Eigen::VectorXd& u, int offset, int count) {
  return u.segment(offset, count).squaredNorm();
}

/// Shared two-block curvature expression: coordinate blocks of sizes s1, s2
/// with squared norms p1, p2.
double two_block_scalar(int s1, int s2, double p1, double p2) {
  const double num = -2.0 * (s1 + (s1 - 1) * p1 + s1 * p2) * (s2 + s2 * p1 + (s2 - 1) * p2);
  const double den = (1.0 + p1) * (1.0 + p2) * (1.0 + p1 + p2) * (1.0 + p1 + p2);
  return num / den;
}

}  // namespace

MetricTensor induced_metric(const EmbeddingMap& map, const Eigen::VectorXd& u,
                            bool with_second) {
  check_point(map, u, "induced_metric");
  const int m = map.domain_dim();

  MetricTensor out;
  out.point = u;
  const Eigen::MatrixXd j = jacobian(map, u);
  out.g = j.transpose() * j;
  out.dg = Tensor3(m, m, m);
  if (with_second) out.ddg = Tensor4(m, m, m, m);

  // g_mn = sum_a F^a_m F^a_n; differentiate the monomial products directly.
  // Every derivative of F^a keeps only coordinates of the monomial, so each
  // component contributes a small block of index tuples.
  for (const auto& mono : map.monomials) {
    const int s = int(mono.size());
    for (int im = 0; im < s; ++im) {
      const int cm = mono[size_t(im)];
      for (int ik = 0; ik < s; ++ik) {
        const int ck = mono[size_t(ik)];
        if (ck != cm) {
          // F_{km} F_n
          const double fkm = prod_except(mono, u, ck, cm);
          for (int in = 0; in < s; ++in) {
            const int cn = mono[size_t(in)];
            out.dg(ck, cm, cn) += fkm * prod_except(mono, u, cn);
          }
        }
        // F_m F_{kn}
        const double fm = prod_except(mono, u, cm);
        for (int in = 0; in < s; ++in) {
          const int cn = mono[size_t(in)];
          if (ck == cn) continue;
          out.dg(ck, cm, cn) += fm * prod_except(mono, u, ck, cn);
        }
      }
    }
    if (!with_second) continue;
    Tensor4& dd = *out.ddg;
    // dd(k, l, m, n) accumulates d_k d_l (F_m F_n) =
    //   F_{klm} F_n + F_{km} F_{ln} + F_{lm} F_{kn} + F_m F_{kln}.
    for (int ik = 0; ik < s; ++ik) {
      const int ck = mono[size_t(ik)];
      for (int il = 0; il < s; ++il) {
        const int cl = mono[size_t(il)];
        for (int im = 0; im < s; ++im) {
          const int cm = mono[size_t(im)];
          for (int in = 0; in < s; ++in) {
            const int cn = mono[size_t(in)];
            double acc = 0.0;
            if (ck != cl && ck != cm && cl != cm)
              acc += prod_except(mono, u, ck, cl, cm) * prod_except(mono, u, cn);
            if (ck != cm && cl != cn)
              acc += prod_except(mono, u, ck, cm) * prod_except(mono, u, cl, cn);
            if (cl != cm && ck != cn)
              acc += prod_except(mono, u, cl, cm) * prod_except(mono, u, ck, cn);
            if (ck != cl && ck != cn && cl != cn)
              acc += prod_except(mono, u, cm) * prod_except(mono, u, ck, cl, cn);
            if (acc != 0.0) dd(ck, cl, cm, cn) += acc;
          }
        }
      }
    }
  }

  Eigen::LLT<Eigen::MatrixXd> llt(out.g);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("induced_metric: metric is not positive definite");
  out.g_inv = llt.solve(Eigen::MatrixXd::Identity(m, m));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.g, Eigen::EigenvaluesOnly);
  out.condition_number = es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();
  return out;
}

bool has_metric_closed_form(const ManifoldCase& manifold) {
  return manifold.name == "two-qubit-product" || manifold.name == "three-qubit-biproduct" ||
         manifold.name == "three-qubit-product";
}

bool has_scalar_closed_form(const ManifoldCase& manifold) {
  return manifold.name == "two-qubit-product" || manifold.name == "three-qubit-biproduct";
}

Eigen::MatrixXd metric_closed_form(const ManifoldCase& manifold, const Eigen::VectorXd& u) {
  if (u.size() != manifold.domain_dim())
    throw std::invalid_argument("metric_closed_form: wrong point dimension");
  if (manifold.name == "two-qubit-product" || manifold.name == "three-qubit-biproduct") {
    // Two blocks x (size s1) and y (size s2):
    //   g = [ (1 + |y|^2) I   x y^T        ]
    //       [ y x^T           (1 + |x|^2) I ]
    const int s1 = 3, s2 = manifold.domain_dim() - 3;
    const Eigen::VectorXd x = u.head(s1), y = u.tail(s2);
    Eigen::MatrixXd g(s1 + s2, s1 + s2);
    g.topLeftCorner(s1, s1) =
        (1.0 + y.squaredNorm()) * Eigen::MatrixXd::Identity(s1, s1);
    g.bottomRightCorner(s2, s2) =
        (1.0 + x.squaredNorm()) * Eigen::MatrixXd::Identity(s2, s2);
    g.topRightCorner(s1, s2) = x * y.transpose();
    g.bottomLeftCorner(s2, s1) = y * x.transpose();
    return g;
  }
  if (manifold.name == "three-qubit-product") {
    // Three Bloch blocks a^1, a^2, a^3 with q_l = |a^l|^2:
    //   diagonal block l:   prod_{r != l} (1 + q_r) I_3
    //   off-diagonal (l,l'): prod_{r != l,l'} (1 + q_r) a^l a^l'^T
    Eigen::MatrixXd g(9, 9);
    double q[3];
    for (int l = 0; l < 3; ++l) q[l] = sumsq(u, 3 * l, 3);
    for (int l = 0; l < 3; ++l)
      for (int lp = 0; lp < 3; ++lp) {
        double factor = 1.0;
        for (int r = 0; r < 3; ++r)
          if (r != l && r != lp) factor *= 1.0 + q[r];
        if (l == lp)
          g.block<3, 3>(3 * l, 3 * l) = factor * Eigen::Matrix3d::Identity();
        else
          g.block<3, 3>(3 * l, 3 * lp) =
              factor * u.segment<3>(3 * l) * u.segment<3>(3 * lp).transpose();
      }
    return g;
  }
  throw std::invalid_argument("metric_closed_form: no closed form for case '" +
                              manifold.name + "'");
}

double scalar_curvature_closed_form(const ManifoldCase& manifold, const Eigen::VectorXd& u) {
  if (u.size() != manifold.domain_dim())
    throw std::invalid_argument("scalar_curvature_closed_form: wrong point dimension");
  if (manifold.name == "two-qubit-product")
    return two_block_scalar(3, 3, sumsq(u, 0, 3), sumsq(u, 3, 3));
  if (manifold.name == "three-qubit-biproduct")
    return two_block_scalar(3, 15, sumsq(u, 0, 3), sumsq(u, 3, 15));
  throw std::invalid_argument("scalar_curvature_closed_form: no closed form for case '" +
                              manifold.name + "'");
}

Tensor3 christoffel(const MetricTensor& metric) {
  const int m = int(metric.g.rows());
  // C(k, m, n) = (d_m g_nk + d_n g_mk - d_k g_mn) / 2, then solve g Gamma = C.
  Eigen::MatrixXd c(m, m * m);
  for (int k = 0; k < m; ++k)
    for (int mm = 0; mm < m; ++mm)
      for (int n = 0; n < m; ++n)
        c(k, mm * m + n) = 0.5 * (metric.dg(mm, n, k) + metric.dg(n, mm, k) -
                                  metric.dg(k, mm, n));
  Eigen::LLT<Eigen::MatrixXd> llt(metric.g);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("christoffel: metric is not positive definite");
  const Eigen::MatrixXd gamma = llt.solve(c);
  Tensor3 out(m, m, m);
  for (int l = 0; l < m; ++l)
    for (int mm = 0; mm < m; ++mm)
      for (int n = 0; n < m; ++n) out(l, mm, n) = gamma(l, mm * m + n);
  return out;
}

CurvatureReport curvature_from_stack(const Eigen::VectorXd& point, const Eigen::MatrixXd& g,
                                     const Tensor3& dg, const Tensor4& ddg) {
  const int m = int(g.rows());
  MetricTensor metric;
  metric.point = point;
  metric.g = g;
  metric.dg = dg;
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("curvature_from_stack: metric is not positive definite");
  metric.g_inv = llt.solve(Eigen::MatrixXd::Identity(m, m));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  metric.condition_number = es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();

  CurvatureReport rep;
  rep.point = point;
  rep.metric_condition_number = metric.condition_number;
  rep.christoffel = christoffel(metric);

  // d_r g^{-1} = -g^{-1} (d_r g) g^{-1}.
  std::vector<Eigen::MatrixXd> dgmat(m), dginv(m);
  for (int r = 0; r < m; ++r) {
    dgmat[size_t(r)].resize(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) dgmat[size_t(r)](a, b) = dg(r, a, b);
    dginv[size_t(r)] = -metric.g_inv * dgmat[size_t(r)] * metric.g_inv;
  }

  // C(k, m, n) and its derivative dC(r, k, m, n).
  Tensor3 c(m, m, m);
  for (int k = 0; k < m; ++k)
    for (int mm = 0; mm < m; ++mm)
      for (int n = 0; n < m; ++n)
        c(k, mm, n) = 0.5 * (dg(mm, n, k) + dg(n, mm, k) - dg(k, mm, n));
  Tensor4 dc(m, m, m, m);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k < m; ++k)
      for (int mm = 0; mm < m; ++mm)
        for (int n = 0; n < m; ++n)
          dc(r, k, mm, n) =
              0.5 * (ddg(r, mm, n, k) + ddg(r, n, mm, k) - ddg(r, k, mm, n));

  // d_r Gamma^l_mn = sum_p (d_r g^{-1})_{lp} C(p,m,n) + g^{-1}_{lp} dC(r,p,m,n).
  Tensor4 dgamma(m, m, m, m);
  for (int r = 0; r < m; ++r)
    for (int l = 0; l < m; ++l)
      for (int mm = 0; mm < m; ++mm)
        for (int n = 0; n < m; ++n) {
          double acc = 0.0;
          for (int p = 0; p < m; ++p)
            acc += dginv[size_t(r)](l, p) * c(p, mm, n) +
                   metric.g_inv(l, p) * dc(r, p, mm, n);
          dgamma(r, l, mm, n) = acc;
        }

  rep.riemann = Tensor4(m, m, m, m);
  const Tensor3& ga = rep.christoffel;
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) {
          double acc = dgamma(mu, k, nu, l) - dgamma(nu, k, mu, l);
          for (int e = 0; e < m; ++e)
            acc += ga(e, nu, l) * ga(k, mu, e) - ga(e, mu, l) * ga(k, nu, e);
          rep.riemann(k, l, mu, nu) = acc;
        }

  rep.ricci = Eigen::MatrixXd::Zero(m, m);
  for (int mu = 0; mu < m; ++mu)
    for (int nu = 0; nu < m; ++nu) {
      double acc = 0.0;
      for (int l = 0; l < m; ++l) acc += rep.riemann(l, mu, l, nu);
      rep.ricci(mu, nu) = acc;
    }
  rep.scalar = (metric.g_inv * rep.ricci).trace();
  return rep;
}

CurvatureReport curvature(const EmbeddingMap& map, const Eigen::VectorXd& u) {
  const MetricTensor metric = induced_metric(map, u, /*with_second=*/true);
  return curvature_from_stack(u, metric.g, metric.dg, *metric.ddg);
}

double scalar_curvature(const EmbeddingMap& map, const Eigen::VectorXd& u) {
  return curvature(map, u).scalar;
}

SymmetryResiduals symmetry_residuals(const CurvatureReport& report, const Eigen::MatrixXd& g) {
  const int m = int(g.rows());
  SymmetryResiduals res;
  for (int l = 0; l < m; ++l)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        res.christoffel_symmetry =
            std::max(res.christoffel_symmetry,
                     std::abs(report.christoffel(l, a, b) - report.christoffel(l, b, a)));

  Tensor4 low(m, m, m, m);  // R_klmn = g_kp R^p_lmn
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) {
          double acc = 0.0;
          for (int p = 0; p < m; ++p) acc += g(k, p) * report.riemann(p, l, mu, nu);
          low(k, l, mu, nu) = acc;
        }

  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) {
          res.riemann_last_pair =
              std::max(res.riemann_last_pair,
                       std::abs(report.riemann(k, l, mu, nu) + report.riemann(k, l, nu, mu)));
          res.riemann_first_pair = std::max(
              res.riemann_first_pair, std::abs(low(k, l, mu, nu) + low(l, k, mu, nu)));
          res.riemann_pair_exchange = std::max(
              res.riemann_pair_exchange, std::abs(low(k, l, mu, nu) - low(mu, nu, k, l)));
          res.first_bianchi =
              std::max(res.first_bianchi,
                       std::abs(report.riemann(k, l, mu, nu) + report.riemann(k, mu, nu, l) +
                                report.riemann(k, nu, l, mu)));
        }
  return res;
}

PullbackCheck pullback_length_check(const EmbeddingMap& map, const Eigen::VectorXd& u,
                                    const Eigen::VectorXd& v, double eps) {
  check_point(map, u, "pullback_length_check");
  if (v.size() != u.size())
    throw std::invalid_argument("pullback_length_check: direction dimension mismatch");
  const MetricTensor metric = induced_metric(map, u);
  PullbackCheck out;
  out.embedded_sq = (evaluate(map, u + eps * v) - evaluate(map, u)).squaredNorm();
  out.quadratic_form = eps * eps * v.dot(metric.g * v);
  out.rel_error = std::abs(out.embedded_sq - out.quadratic_form) /
                  std::max(out.quadratic_form, 1e-300);
  return out;
}

}  // namespace fanogeo
