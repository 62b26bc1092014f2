// SPDX-License-Identifier: MIT
#include "fanogeo/state_factory.hpp"

#include "fanogeo/lie_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fanogeo {

namespace {

constexpr int kRejectionBudget = 100000;

Eigen::MatrixXcd ginibre(int dim, SeededRng& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = cplx(rng.normal(), rng.normal());
  return g;
}

DensityMatrix ginibre_state(int levels, int qudits, SeededRng& rng) {
  DensityMatrix rho{levels, qudits, {}};
  const Eigen::MatrixXcd g = ginibre(rho.dim(), rng);
  rho.matrix = g * g.adjoint();
  rho.matrix /= rho.matrix.trace();
  return rho;
}

/// Uniform Bloch vector in the closed unit ball, by rejection from the cube.
Eigen::Vector3d ball_bloch(SeededRng& rng) {
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    Eigen::Vector3d a(rng.uniform_symmetric(), rng.uniform_symmetric(),
                      rng.uniform_symmetric());
    if (a.norm() <= 1.0) return a;
  }
  throw std::runtime_error("random_manifold_point: rejection budget exhausted");
}

}  // namespace

double SeededRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double a = uniform();
  while (a <= 0.0) a = uniform();
  const double b = uniform();
  const double r = std::sqrt(-2.0 * std::log(a));
  const double t = 2.0 * std::numbers::pi * b;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

DensityMatrix single_qubit_state(const Eigen::Vector3d& bloch) {
  if (bloch.norm() > 1.0 + 1e-12)
    throw std::invalid_argument("single_qubit_state: Bloch vector leaves the unit ball");
  const auto& sigma = generators(2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  for (int i = 0; i < 3; ++i) m += bloch[i] * sigma[size_t(i)];
  return DensityMatrix{2, 1, m / 2.0};
}

DensityMatrix product_state(const std::vector<DensityMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_state: no factors");
  DensityMatrix out = factors[0];
  for (size_t f = 1; f < factors.size(); ++f) {
    const DensityMatrix& b = factors[f];
    if (b.levels != out.levels)
      throw std::invalid_argument("product_state: factors must share the level count");
    DensityMatrix next{out.levels, out.qudits + b.qudits, {}};
    const int da = out.dim(), db = b.dim();
    next.matrix.resize(da * db, da * db);
    for (int r1 = 0; r1 < da; ++r1)
      for (int c1 = 0; c1 < da; ++c1)
        next.matrix.block(r1 * db, c1 * db, db, db) = out.matrix(r1, c1) * b.matrix;
    out = std::move(next);
  }
  return out;
}

DensityMatrix bell_state() { return ghz_state(2); }

DensityMatrix ghz_state(int qudits) {
  if (qudits < 2 || qudits > 12)
    throw std::invalid_argument("ghz_state: qudits must be between 2 and 12");
  DensityMatrix rho{2, qudits, {}};
  const int d = rho.dim();
  rho.matrix = Eigen::MatrixXcd::Zero(d, d);
  rho.matrix(0, 0) = rho.matrix(0, d - 1) = 0.5;
  rho.matrix(d - 1, 0) = rho.matrix(d - 1, d - 1) = 0.5;
  return rho;
}

DensityMatrix w_state(int qudits) {
  if (qudits < 2 || qudits > 12)
    throw std::invalid_argument("w_state: qudits must be between 2 and 12");
  DensityMatrix rho{2, qudits, {}};
  const int d = rho.dim();
  rho.matrix = Eigen::MatrixXcd::Zero(d, d);
  // Basis states with exactly one excited qubit: index 2^l.
  for (int a = 0; a < qudits; ++a)
    for (int b = 0; b < qudits; ++b)
      rho.matrix(1 << a, 1 << b) = 1.0 / qudits;
  return rho;
}

DensityMatrix werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("werner_state: p must lie in [0, 1]");
  DensityMatrix rho = bell_state();
  rho.matrix = p * rho.matrix + (1.0 - p) * Eigen::MatrixXcd::Identity(4, 4) / 4.0;
  return rho;
}

DensityMatrix random_density(int levels, int qudits, std::uint64_t seed) {
  if (levels < 2) throw std::invalid_argument("random_density: levels must be >= 2");
  if (qudits < 1) throw std::invalid_argument("random_density: qudits must be >= 1");
  SeededRng rng(seed);
  return ginibre_state(levels, qudits, rng);
}

Eigen::VectorXd random_manifold_point(const ManifoldCase& manifold, SampleMode mode,
                                      SeededRng& rng) {
  const int m = manifold.domain_dim();
  Eigen::VectorXd u(m);
  if (mode == SampleMode::box) {
    for (int i = 0; i < m; ++i) u[i] = rng.uniform_symmetric();
    return u;
  }

  // Physical mode: draw one coefficient block per partition group, then
  // scatter each block into the case's coordinate positions.
  std::vector<FanoTensor> blocks;
  for (const auto& group : manifold.partition.groups) {
    if (group.size() == 1 && manifold.levels == 2) {
      const Eigen::Vector3d a = ball_bloch(rng);
      blocks.push_back(FanoTensor{2, 1, {1.0, a[0], a[1], a[2]}});
    } else {
      blocks.push_back(decompose(ginibre_state(manifold.levels, int(group.size()), rng)));
    }
  }
  std::vector<int> local;
  for (int mu = 0; mu < m; ++mu) {
    const auto& idx = manifold.coordinate_order[size_t(mu)];
    int g = -1;
    for (size_t s = 0; s < idx.size(); ++s)
      if (idx[s] != 0) g = manifold.partition.group_of(int(s));
    const auto& group = manifold.partition.groups[size_t(g)];
    local.clear();
    for (int s : group) local.push_back(idx[size_t(s)]);
    u[mu] = blocks[size_t(g)](local);
  }
  return u;
}

Eigen::VectorXd random_manifold_point(const ManifoldCase& manifold, SampleMode mode,
                                      std::uint64_t seed) {
  SeededRng rng(seed);
  return random_manifold_point(manifold, mode, rng);
}

}  // namespace fanogeo
