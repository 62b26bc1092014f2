// SPDX-License-Identifier: MIT
#include "fanogeo/embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fanogeo {

namespace {

/// All nonzero multi-indices over `qudits` slots of range side, lexicographic.
std::vector<std::vector<int>> all_nonzero_indices(int side, int qudits) {
  std::vector<std::vector<int>> out;
  const long long total = ipow(side, qudits);
  std::vector<int> idx(qudits);
  for (long long f = 1; f < total; ++f) {
    digits_from_flat(f, side, idx);
    out.push_back(idx);
  }
  return out;
}

/// Multi-indices supported on one group, lexicographic as full multi-indices.
std::vector<std::vector<int>> group_block_indices(int side, int qudits,
                                                  const std::vector<int>& group) {
  std::vector<std::vector<int>> out;
  const long long total = ipow(side, int(group.size()));
  std::vector<int> local(group.size());
  for (long long f = 1; f < total; ++f) {
    digits_from_flat(f, side, local);
    std::vector<int> idx(size_t(qudits), 0);
    for (size_t i = 0; i < group.size(); ++i) idx[size_t(group[i])] = local[i];
    out.push_back(std::move(idx));
  }
  // Group members are sorted, so local lexicographic order is already
  // lexicographic as full multi-indices.
  return out;
}

void check_point(const EmbeddingMap& map, const Eigen::VectorXd& u, const char* who) {
  if (u.size() != map.domain_dim())
    throw std::invalid_argument(std::string(who) + ": point has dimension " +
                                std::to_string(u.size()) + ", expected " +
                                std::to_string(map.domain_dim()));
}

}  // namespace

ManifoldCase two_qubit_product_case() {
  ManifoldCase c;
  c.name = "two-qubit-product";
  c.levels = 2;
  c.qudits = 2;
  c.partition = Partition{{{0}, {1}}};
  // Second subsystem's Bloch vector first, then the first subsystem's.
  c.coordinate_order = {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}};
  c.output_order = c.coordinate_order;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) c.output_order.push_back({i, j});
  return c;
}

ManifoldCase three_qubit_biproduct_case() {
  ManifoldCase c;
  c.name = "three-qubit-biproduct";
  c.levels = 2;
  c.qudits = 3;
  c.partition = Partition{{{0, 1}, {2}}};
  // Third-qubit Bloch vector first, then the pair block lexicographically.
  c.coordinate_order = {{0, 0, 1}, {0, 0, 2}, {0, 0, 3}};
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      if (i != 0 || j != 0) c.coordinate_order.push_back({i, j, 0});
  c.output_order = c.coordinate_order;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      if (i != 0 || j != 0)
        for (int k = 1; k <= 3; ++k) c.output_order.push_back({i, j, k});
  return c;
}

ManifoldCase three_qubit_product_case() {
  ManifoldCase c = three_qubit_biproduct_case();
  c.name = "three-qubit-product";
  c.partition = Partition{{{0}, {1}, {2}}};
  // Bloch vectors in subsystem order; the image list is unchanged.
  c.coordinate_order = {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {0, 1, 0}, {0, 2, 0},
                        {0, 3, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}};
  return c;
}

ManifoldCase general_case(int levels, int qudits, const Partition& partition) {
  if (levels < 2) throw std::invalid_argument("general_case: levels must be >= 2");
  if (qudits < 1) throw std::invalid_argument("general_case: qudits must be >= 1");
  partition.check(qudits);
  ManifoldCase c;
  c.name = "general";
  c.levels = levels;
  c.qudits = qudits;
  c.partition = partition;
  const int side = levels * levels;
  for (const auto& g : partition.groups) {
    auto block = group_block_indices(side, qudits, g);
    c.coordinate_order.insert(c.coordinate_order.end(), block.begin(), block.end());
  }
  c.output_order = all_nonzero_indices(side, qudits);
  return c;
}

ManifoldCase case_by_name(const std::string& name) {
  if (name == "two-qubit-product") return two_qubit_product_case();
  if (name == "three-qubit-biproduct") return three_qubit_biproduct_case();
  if (name == "three-qubit-product") return three_qubit_product_case();
  throw std::invalid_argument("unknown manifold case '" + name + "'");
}

EmbeddingMap build_map(const ManifoldCase& manifold) {
  std::map<std::vector<int>, int> coord_index;
  for (int mu = 0; mu < manifold.domain_dim(); ++mu)
    coord_index[manifold.coordinate_order[size_t(mu)]] = mu;

  EmbeddingMap map;
  map.manifold = manifold;
  map.monomials.reserve(manifold.output_order.size());
  for (const auto& out : manifold.output_order) {
    std::vector<int> factors;
    for (const auto& group : manifold.partition.groups) {
      // Restrict the output index to this group; skip all-zero restrictions.
      std::vector<int> restricted(out.size(), 0);
      bool nonzero = false;
      for (int s : group) {
        restricted[size_t(s)] = out[size_t(s)];
        nonzero = nonzero || out[size_t(s)] != 0;
      }
      if (!nonzero) continue;
      auto it = coord_index.find(restricted);
      if (it == coord_index.end())
        throw std::invalid_argument("build_map: output entry depends on a group block "
                                    "missing from the coordinate list");
      factors.push_back(it->second);
    }
    if (factors.empty())
      throw std::invalid_argument("build_map: output list contains the all-zero index");
    std::sort(factors.begin(), factors.end());
    map.monomials.push_back(std::move(factors));
  }
  return map;
}

Eigen::VectorXd evaluate(const EmbeddingMap& map, const Eigen::VectorXd& u) {
  check_point(map, u, "evaluate");
  Eigen::VectorXd f(map.codomain_dim());
  for (int a = 0; a < map.codomain_dim(); ++a) {
    double prod = 1.0;
    for (int mu : map.monomials[size_t(a)]) prod *= u[mu];
    f[a] = prod;
  }
  return f;
}

Eigen::MatrixXd jacobian(const EmbeddingMap& map, const Eigen::VectorXd& u) {
  check_point(map, u, "jacobian");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(map.codomain_dim(), map.domain_dim());
  for (int a = 0; a < map.codomain_dim(); ++a) {
    const auto& mono = map.monomials[size_t(a)];
    for (size_t pos = 0; pos < mono.size(); ++pos) {
      double prod = 1.0;
      for (size_t q = 0; q < mono.size(); ++q)
        if (q != pos) prod *= u[mono[q]];
      j(a, mono[pos]) = prod;
    }
  }
  return j;
}

double derivative(const EmbeddingMap& map, const Eigen::VectorXd& u, int output,
                  std::span<const int> wrt) {
  check_point(map, u, "derivative");
  if (output < 0 || output >= map.codomain_dim())
    throw std::invalid_argument("derivative: output index out of range");
  if (wrt.empty()) throw std::invalid_argument("derivative: empty index list");
  const auto& mono = map.monomials[size_t(output)];
  std::vector<bool> removed(mono.size(), false);
  for (int k : wrt) {
    if (k < 0 || k >= map.domain_dim())
      throw std::invalid_argument("derivative: coordinate index out of range");
    // Each monomial is linear in each coordinate, so a repeated (or absent)
    // differentiation index kills the whole term.
    bool found = false;
    for (size_t q = 0; q < mono.size(); ++q)
      if (mono[q] == k && !removed[q]) {
        removed[q] = true;
        found = true;
        break;
      }
    if (!found) return 0.0;
  }
  double prod = 1.0;
  for (size_t q = 0; q < mono.size(); ++q)
    if (!removed[q]) prod *= u[mono[q]];
  return prod;
}

double derivative(const EmbeddingMap& map, const Eigen::VectorXd& u, int output,
                  std::initializer_list<int> wrt) {
  return derivative(map, u, output, std::span<const int>(wrt.begin(), wrt.size()));
}

Eigen::VectorXd coordinates_of(const FanoTensor& d, const ManifoldCase& manifold) {
  if (d.levels != manifold.levels || d.qudits != manifold.qudits)
    throw std::invalid_argument("coordinates_of: tensor shape does not match the case");
  Eigen::VectorXd u(manifold.domain_dim());
  for (int mu = 0; mu < manifold.domain_dim(); ++mu)
    u[mu] = d(manifold.coordinate_order[size_t(mu)]);
  return u;
}

FanoTensor tensor_at(const EmbeddingMap& map, const Eigen::VectorXd& u) {
  check_point(map, u, "tensor_at");
  const ManifoldCase& c = map.manifold;
  FanoTensor d{c.levels, c.qudits, {}};
  d.data.assign(size_t(d.size()), 0.0);
  d.data[0] = 1.0;
  const Eigen::VectorXd f = evaluate(map, u);
  for (int a = 0; a < map.codomain_dim(); ++a) d(c.output_order[size_t(a)]) = f[a];
  return d;
}

ImmersionReport verify_immersion(const EmbeddingMap& map, const Eigen::VectorXd& u) {
  const Eigen::MatrixXd j = jacobian(map, u);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
  ImmersionReport rep;
  rep.expected = map.domain_dim();
  rep.min_singular_value = svd.singularValues().minCoeff();
  rep.rank = int(svd.rank());
  rep.immersion = rep.rank == rep.expected;
  return rep;
}

}  // namespace fanogeo
