// SPDX-License-Identifier: MIT
#include "doctest.h"
#include "fanogeo/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "fanogeo/state_factory.hpp"
#include "support/fd_oracle.hpp"
#include "support/helpers.hpp"

using namespace fanogeo;
using namespace fanogeo_test;

namespace {

std::vector<ManifoldCase> named_cases() {
  return {two_qubit_product_case(), three_qubit_biproduct_case(), three_qubit_product_case()};
}

double tensor3_max(const Tensor3& t) {
  double mx = 0.0;
  for (double x : t.v) mx = std::max(mx, std::abs(x));
  return mx;
}

double tensor4_max(const Tensor4& t) {
  double mx = 0.0;
  for (double x : t.v) mx = std::max(mx, std::abs(x));
  return mx;
}

}  // namespace

TEST_CASE("induced metric equals the closed form on the named cases") {
  unsigned seed = 3000;
  for (const auto& c : named_cases()) {
    CAPTURE(c.name);
    EmbeddingMap map = build_map(c);
    const int m = c.domain_dim();
    MetricTensor at_origin = induced_metric(map, Eigen::VectorXd::Zero(m));
    CHECK((at_origin.g - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() == 0.0);
    for (int rep = 0; rep < 30; ++rep) {
      Eigen::VectorXd u = random_box_point(m, seed++);
      MetricTensor metric = induced_metric(map, u);
      Eigen::MatrixXd closed = metric_closed_form(c, u);
      CHECK((metric.g - closed).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((metric.g - metric.g.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("the metric dominates the identity everywhere") {
  unsigned seed = 3300;
  for (const auto& c : named_cases()) {
    CAPTURE(c.name);
    EmbeddingMap map = build_map(c);
    for (int rep = 0; rep < 20; ++rep) {
      Eigen::VectorXd u = random_box_point(c.domain_dim(), seed++);
      MetricTensor metric = induced_metric(map, u);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric.g, Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues().minCoeff() >= 1.0 - 1e-12);
      CHECK(metric.condition_number >= 1.0);
      CHECK(metric.condition_number <
            es.eigenvalues().maxCoeff() / (1.0 - 1e-12));
      CHECK((metric.g * metric.g_inv - Eigen::MatrixXd::Identity(c.domain_dim(),
                                                                 c.domain_dim()))
                .cwiseAbs()
                .maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("metric derivatives match wide-step finite differences exactly") {
  // Metric entries are at most quadratic in each single coordinate, so
  // central differences are exact up to rounding for any step size.
  std::vector<ManifoldCase> cases = named_cases();
  cases.push_back(general_case(3, 2, Partition::finest(2)));
  cases.push_back(general_case(2, 3, Partition::parse("1,3|2", 3)));
  unsigned seed = 3600;
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CAPTURE(c.levels);
    EmbeddingMap map = build_map(c);
    const int m = c.domain_dim();
    Eigen::VectorXd u = random_box_point(m, seed++);
    MetricTensor metric = induced_metric(map, u, /*with_second=*/true);
    auto gfn = [&](const Eigen::VectorXd& x) { return induced_metric(map, x).g; };
    for (int k = 0; k < m; ++k) {
      Eigen::MatrixXd fd = fd_matrix_derivative(gfn, u, k, 0.5);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) CHECK(metric.dg(k, a, b) == doctest::Approx(fd(a, b)).epsilon(1e-12));
    }
    for (int k = 0; k < m; ++k)
      for (int l = k; l < m; ++l) {
        Eigen::MatrixXd fd = fd_matrix_second_derivative(gfn, u, k, l, 0.25);
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            CHECK((*metric.ddg)(k, l, a, b) == doctest::Approx(fd(a, b)).epsilon(1e-11));
            CHECK((*metric.ddg)(k, l, a, b) == (*metric.ddg)(l, k, a, b));
          }
      }
  }
}

TEST_CASE("Christoffel symbols are symmetric and match the defining formula") {
  unsigned seed = 4000;
  for (const auto& c : named_cases()) {
    CAPTURE(c.name);
    EmbeddingMap map = build_map(c);
    const int m = c.domain_dim();
    Eigen::VectorXd u = random_box_point(m, seed++);
    MetricTensor metric = induced_metric(map, u);
    Tensor3 gamma = christoffel(metric);
    auto gfn = [&](const Eigen::VectorXd& x) { return induced_metric(map, x).g; };
    const Eigen::MatrixXd ginv = metric.g.inverse();
    std::vector<Eigen::MatrixXd> dg(m);
    for (int k = 0; k < m; ++k) dg[size_t(k)] = fd_matrix_derivative(gfn, u, k, 0.5);
    for (int l = 0; l < m; ++l)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          double expect = 0.0;
          for (int p = 0; p < m; ++p)
            expect += 0.5 * ginv(l, p) *
                      (dg[size_t(a)](b, p) + dg[size_t(b)](a, p) - dg[size_t(p)](a, b));
          CHECK(gamma(l, a, b) == doctest::Approx(expect).epsilon(1e-9));
          CHECK(gamma(l, a, b) == doctest::Approx(gamma(l, b, a)).epsilon(1e-12));
        }
  }
}

TEST_CASE("two-qubit scalar curvature matches the closed form") {
  ManifoldCase c = two_qubit_product_case();
  EmbeddingMap map = build_map(c);

  CHECK(scalar_curvature(map, Eigen::VectorXd::Zero(6)) == doctest::Approx(-18.0).epsilon(1e-12));
  CHECK(scalar_curvature_closed_form(c, Eigen::VectorXd::Zero(6)) == -18.0);

  // A single pure correlation direction: q1 = 0, q2 = 1.
  Eigen::VectorXd e3 = Eigen::VectorXd::Zero(6);
  e3[2] = 1.0;
  CHECK(scalar_curvature(map, e3) == doctest::Approx(-7.5).epsilon(1e-10));
  CHECK(scalar_curvature_closed_form(c, e3) == doctest::Approx(-7.5).epsilon(1e-14));

  // Frozen invariance point q1 = 1, q2 = 0.25.
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(6);
  inv[0] = 1.0;
  inv[3] = 0.5;
  CHECK(scalar_curvature(map, inv) == doctest::Approx(-5.90617283950617).epsilon(1e-9));

  unsigned seed = 4200;
  for (int rep = 0; rep < 40; ++rep) {
    Eigen::VectorXd u = random_box_point(6, seed++);
    const double q = scalar_curvature(map, u);
    const double qc = scalar_curvature_closed_form(c, u);
    CHECK(std::abs(q - qc) <= 1e-8 * std::abs(qc));
    CHECK(q < 0.0);
  }

  // The curvature depends on the point only through the two block norms.
  Eigen::VectorXd p1(6), p2(6);
  p1 << 0.6, 0.0, 0.0, 0.0, 0.3, 0.4;
  p2 << 0.0, 0.0, 0.6, 0.5, 0.0, 0.0;
  CHECK(scalar_curvature(map, p1) == doctest::Approx(scalar_curvature(map, p2)).epsilon(1e-10));
}

TEST_CASE("biproduct scalar curvature matches the closed form") {
  ManifoldCase c = three_qubit_biproduct_case();
  EmbeddingMap map = build_map(c);

  CHECK(scalar_curvature(map, Eigen::VectorXd::Zero(18)) ==
        doctest::Approx(-90.0).epsilon(1e-12));
  CHECK(scalar_curvature_closed_form(c, Eigen::VectorXd::Zero(18)) == -90.0);

  // Frozen sparse point.
  Eigen::VectorXd s = Eigen::VectorXd::Zero(18);
  s[0] = 0.3;
  s[3] = -0.4;
  s[7] = 0.5;
  s[17] = -0.25;
  CHECK(scalar_curvature(map, s) == doctest::Approx(-53.88852913817542).epsilon(1e-10));
  CHECK(scalar_curvature_closed_form(c, s) ==
        doctest::Approx(-53.88852913817542).epsilon(1e-12));

  unsigned seed = 4400;
  for (int rep = 0; rep < 15; ++rep) {
    Eigen::VectorXd u = random_box_point(18, seed++);
    const double q = scalar_curvature(map, u);
    const double qc = scalar_curvature_closed_form(c, u);
    CHECK(std::abs(q - qc) <= 1e-8 * std::abs(qc));
    CHECK(q < 0.0);
  }
}

TEST_CASE("fully product three-qubit curvature agrees with the difference referee") {
  ManifoldCase c = three_qubit_product_case();
  EmbeddingMap map = build_map(c);

  CHECK(scalar_curvature(map, Eigen::VectorXd::Zero(9)) == doctest::Approx(-54.0).epsilon(1e-12));

  Eigen::VectorXd s(9);
  s << 0.2, -0.3, 0.4, 0.1, 0.5, -0.2, 0.3, 0.1, -0.4;
  CHECK(scalar_curvature(map, s) == doctest::Approx(-22.99425152976379).epsilon(1e-10));

  auto gfn = [&](const Eigen::VectorXd& x) { return induced_metric(map, x).g; };
  unsigned seed = 4600;
  for (int rep = 0; rep < 3; ++rep) {
    Eigen::VectorXd u = random_box_point(9, seed++);
    const double exact = scalar_curvature(map, u);
    const double fd = fd_scalar_curvature(gfn, u, 1e-3);
    CHECK(std::abs(exact - fd) <= 1e-5 * std::abs(exact));
    CHECK(exact < 0.0);
  }
}

TEST_CASE("the pipeline reproduces the paraboloid's textbook curvature") {
  // Surface z = x^2 + y^2: g = I + 4 (x,y)(x,y)^T, Q = 8 / (1 + 4x^2 + 4y^2)^2.
  auto gfn = [](const Eigen::VectorXd& p) {
    Eigen::MatrixXd g(2, 2);
    g << 1 + 4 * p[0] * p[0], 4 * p[0] * p[1], 4 * p[0] * p[1], 1 + 4 * p[1] * p[1];
    return g;
  };
  auto exact = [](double x, double y) {
    const double w = 1 + 4 * x * x + 4 * y * y;
    return 8.0 / (w * w);
  };
  for (auto [x, y] : {std::pair{0.0, 0.0}, {0.3, -0.2}, {1.0, 0.5}, {-0.7, 0.9}}) {
    CAPTURE(x);
    CAPTURE(y);
    Eigen::VectorXd u(2);
    u << x, y;
    // Independent finite-difference referee.
    CHECK(fd_scalar_curvature(gfn, u, 1e-4) == doctest::Approx(exact(x, y)).epsilon(1e-7));
    // Library assembly fed with the hand-computed exact stack.
    Tensor3 dg(2, 2, 2);
    dg(0, 0, 0) = 8 * x;
    dg(0, 0, 1) = dg(0, 1, 0) = 4 * y;
    dg(1, 0, 1) = dg(1, 1, 0) = 4 * x;
    dg(1, 1, 1) = 8 * y;
    Tensor4 ddg(2, 2, 2, 2);
    ddg(0, 0, 0, 0) = 8;
    ddg(0, 1, 0, 1) = ddg(0, 1, 1, 0) = 4;
    ddg(1, 0, 0, 1) = ddg(1, 0, 1, 0) = 4;
    ddg(1, 1, 1, 1) = 8;
    CurvatureReport rep = curvature_from_stack(u, gfn(u), dg, ddg);
    CHECK(rep.scalar == doctest::Approx(exact(x, y)).epsilon(1e-11));
  }
}

TEST_CASE("a single-group manifold is flat") {
  // With one group the map is the identity on the full coefficient space.
  ManifoldCase c = general_case(2, 2, Partition::trivial(2));
  EmbeddingMap map = build_map(c);
  CHECK(c.domain_dim() == 15);
  Eigen::VectorXd u = random_box_point(15, 4800);
  MetricTensor metric = induced_metric(map, u, true);
  CHECK((metric.g - Eigen::MatrixXd::Identity(15, 15)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(tensor3_max(metric.dg) == 0.0);
  CurvatureReport rep = curvature(map, u);
  CHECK(tensor3_max(rep.christoffel) == 0.0);
  CHECK(tensor4_max(rep.riemann) == 0.0);
  CHECK(rep.scalar == 0.0);
  CHECK(rep.metric_condition_number == doctest::Approx(1.0));
}

TEST_CASE("curvature identities hold to rounding accuracy") {
  unsigned seed = 5000;
  for (const auto& c : named_cases()) {
    CAPTURE(c.name);
    EmbeddingMap map = build_map(c);
    for (int rep = 0; rep < 3; ++rep) {
      Eigen::VectorXd u = random_box_point(c.domain_dim(), seed++);
      MetricTensor metric = induced_metric(map, u);
      CurvatureReport curv = curvature(map, u);
      SymmetryResiduals res = symmetry_residuals(curv, metric.g);
      CHECK(res.christoffel_symmetry < 1e-10);
      CHECK(res.riemann_last_pair < 1e-10);
      CHECK(res.riemann_first_pair < 1e-10);
      CHECK(res.riemann_pair_exchange < 1e-10);
      CHECK(res.first_bianchi < 1e-10);
      CHECK((curv.ricci - curv.ricci.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("small displacements measure lengths through the metric") {
  ManifoldCase c = three_qubit_biproduct_case();
  EmbeddingMap map = build_map(c);
  Eigen::VectorXd u = random_box_point(18, 5100);
  Eigen::VectorXd v = random_box_point(18, 5101);
  v.normalize();
  PullbackCheck coarse = pullback_length_check(map, u, v, 1e-3);
  CHECK(coarse.rel_error < 0.05);
  PullbackCheck fine = pullback_length_check(map, u, v, 1e-5);
  CHECK(fine.rel_error < 5e-4);
  CHECK(fine.rel_error < coarse.rel_error);
}

TEST_CASE("geometry interface validates its input") {
  ManifoldCase l = three_qubit_product_case();
  EmbeddingMap map = build_map(l);
  Eigen::VectorXd bad = Eigen::VectorXd::Zero(5);
  CHECK_THROWS_AS(induced_metric(map, bad), std::invalid_argument);
  CHECK_THROWS_AS(scalar_curvature(map, bad), std::invalid_argument);
  CHECK_THROWS_AS(scalar_curvature_closed_form(l, Eigen::VectorXd::Zero(9)),
                  std::invalid_argument);
  ManifoldCase g = general_case(2, 2, Partition::finest(2));
  CHECK_THROWS_AS(metric_closed_form(g, Eigen::VectorXd::Zero(6)), std::invalid_argument);
  CHECK(has_metric_closed_form(l));
  CHECK(!has_metric_closed_form(g));
  CHECK(has_scalar_closed_form(two_qubit_product_case()));
  CHECK(has_scalar_closed_form(three_qubit_biproduct_case()));
  CHECK(!has_scalar_closed_form(l));
}
