// SPDX-License-Identifier: MIT
#include "fanogeo/lie_basis.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace fanogeo {

namespace {

struct BasisSet {
  std::vector<Eigen::MatrixXcd> sigma;  // N^2 - 1 generators
  std::vector<Eigen::MatrixXcd> e;      // N^2 elements, e[0] = I/N
};

std::unique_ptr<const BasisSet> build_basis(int levels) {
  const int n = levels;
  const double scale = std::sqrt(n / 2.0);  // tr(T^a T^b) = 2 delta -> N delta
  auto set = std::make_unique<BasisSet>();

  // Symmetric pair generators: scale * (E_jk + E_kj), j < k.
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
      m(j, k) = scale;
      m(k, j) = scale;
      set->sigma.push_back(std::move(m));
    }
  }
  // Antisymmetric pair generators: scale * (-i E_jk + i E_kj), j < k.
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
      m(j, k) = cplx(0.0, -scale);
      m(k, j) = cplx(0.0, scale);
      set->sigma.push_back(std::move(m));
    }
  }
  // Diagonal generators: scale * sqrt(2/(l(l+1))) (sum_{j<=l} E_jj - l E_ll).
  for (int l = 1; l < n; ++l) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    const double w = scale * std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = w;
    m(l, l) = -l * w;
    set->sigma.push_back(std::move(m));
  }

  set->e.reserve(n * n);
  set->e.push_back(Eigen::MatrixXcd::Identity(n, n) / double(n));
  for (const auto& s : set->sigma) set->e.push_back(s / double(n));
  return set;
}

const BasisSet& basis_for(int levels) {
  if (levels < 2) throw std::invalid_argument("generators: levels must be >= 2");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const BasisSet>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[levels];
  if (!slot) slot = build_basis(levels);
  return *slot;
}

}  // namespace

const std::vector<Eigen::MatrixXcd>& generators(int levels) {
  return basis_for(levels).sigma;
}

const std::vector<Eigen::MatrixXcd>& basis_elements(int levels) {
  return basis_for(levels).e;
}

}  // namespace fanogeo
