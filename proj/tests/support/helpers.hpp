// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "fanogeo/fano.hpp"
#include "fanogeo/partition.hpp"

namespace fanogeo_test {

/// Random mixed state G G^dagger / tr(G G^dagger) with Gaussian G.
inline fanogeo::DensityMatrix random_state(int levels, int qudits, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = int(fanogeo::ipow(levels, qudits));
  Eigen::MatrixXcd g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = fanogeo::cplx(gauss(rng), gauss(rng));
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace();
  return fanogeo::DensityMatrix{levels, qudits, rho};
}

/// Tensor product of two density matrices (same levels).
inline fanogeo::DensityMatrix kron2(const fanogeo::DensityMatrix& a,
                                    const fanogeo::DensityMatrix& b) {
  fanogeo::DensityMatrix out{a.levels, a.qudits + b.qudits, {}};
  const int da = a.dim(), db = b.dim();
  out.matrix.resize(da * db, da * db);
  for (int r1 = 0; r1 < da; ++r1)
    for (int c1 = 0; c1 < da; ++c1)
      for (int r2 = 0; r2 < db; ++r2)
        for (int c2 = 0; c2 < db; ++c2)
          out.matrix(r1 * db + r2, c1 * db + c2) = a.matrix(r1, c1) * b.matrix(r2, c2);
  return out;
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Uniform draw from [-1, 1]^n.
inline Eigen::VectorXd random_box_point(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  Eigen::VectorXd u(n);
  for (int i = 0; i < n; ++i) u[i] = (rng() >> 11) * 0x1p-53 * 2.0 - 1.0;
  return u;
}

/// Tensor product of the marginals on each group, laid out on the original
/// subsystem slots (groups may interleave).
inline Eigen::MatrixXcd product_of_marginals(const fanogeo::DensityMatrix& rho,
                                             const fanogeo::Partition& p) {
  using fanogeo::cplx;
  std::vector<fanogeo::DensityMatrix> marg;
  for (const auto& g : p.groups) marg.push_back(fanogeo::partial_trace(rho, g));
  const int n = rho.levels, dim = rho.dim(), m = rho.qudits;
  Eigen::MatrixXcd out(dim, dim);
  std::vector<int> r(m), c(m), lr, lc;
  for (int row = 0; row < dim; ++row) {
    fanogeo::digits_from_flat(row, n, r);
    for (int col = 0; col < dim; ++col) {
      fanogeo::digits_from_flat(col, n, c);
      cplx prod = 1.0;
      for (size_t l = 0; l < p.groups.size(); ++l) {
        lr.clear();
        lc.clear();
        for (int s : p.groups[l]) {
          lr.push_back(r[size_t(s)]);
          lc.push_back(c[size_t(s)]);
        }
        prod *= marg[l].matrix(fanogeo::flat_from_digits(lr, n),
                               fanogeo::flat_from_digits(lc, n));
      }
      out(row, col) = prod;
    }
  }
  return out;
}

}  // namespace fanogeo_test
