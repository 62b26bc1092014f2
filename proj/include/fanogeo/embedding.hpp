// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "fanogeo/fano.hpp"
#include "fanogeo/partition.hpp"

namespace fanogeo {

/// A product-state manifold: which coefficient-tensor entries serve as free
/// coordinates (one block per partition group) and the order in which the
/// dependent entries are listed in the image.
///
/// Both orderings are part of the public contract: coordinate_order fixes the
/// meaning of metric and curvature component indices, output_order fixes the
/// embedding's component order. The named cases freeze specific orderings;
/// general cases order coordinates group by group, lexicographically within a
/// group, and outputs lexicographically over all nonzero multi-indices.
struct ManifoldCase {
  std::string name;  // "two-qubit-product", "three-qubit-biproduct",
                     // "three-qubit-product", or "general"
  int levels = 2;
  int qudits = 1;
  Partition partition;
  std::vector<std::vector<int>> coordinate_order;  // domain entries (multi-indices)
  std::vector<std::vector<int>> output_order;      // image entries (multi-indices)

  int domain_dim() const { return int(coordinate_order.size()); }
  int codomain_dim() const { return int(output_order.size()); }
};

/// Two qubits, fully product. Domain (6): the two Bloch vectors, second
/// subsystem's first; image (15): every nonzero pair index.
ManifoldCase two_qubit_product_case();

/// Three qubits split {1,2}|{3}. Domain (18): third-qubit Bloch vector, then
/// the pair block; image (63): every nonzero triple index.
ManifoldCase three_qubit_biproduct_case();

/// Three qubits, fully product. Domain (9): the three Bloch vectors in
/// subsystem order; image (63): every nonzero triple index.
ManifoldCase three_qubit_product_case();

/// Product manifold for an arbitrary partition of M qudits with N levels.
ManifoldCase general_case(int levels, int qudits, const Partition& partition);

/// Resolves one of the three named cases; throws for anything else.
ManifoldCase case_by_name(const std::string& name);

/// Monomial form of the embedding: component alpha of the map is the product
/// of the domain coordinates listed in monomials[alpha] (distinct indices,
/// so all derivatives are exact finite products).
struct EmbeddingMap {
  ManifoldCase manifold;
  std::vector<std::vector<int>> monomials;

  int domain_dim() const { return manifold.domain_dim(); }
  int codomain_dim() const { return manifold.codomain_dim(); }
};

EmbeddingMap build_map(const ManifoldCase& manifold);

/// F(u): component alpha is prod_{mu in monomials[alpha]} u_mu.
Eigen::VectorXd evaluate(const EmbeddingMap& map, const Eigen::VectorXd& u);

/// Exact Jacobian, codomain_dim x domain_dim.
Eigen::MatrixXd jacobian(const EmbeddingMap& map, const Eigen::VectorXd& u);

/// Exact partial derivative of component `output` with respect to the listed
/// coordinates, in any order >= 1. Differentiating twice along the same
/// coordinate (or along one absent from the monomial) gives zero.
double derivative(const EmbeddingMap& map, const Eigen::VectorXd& u, int output,
                  std::span<const int> wrt);
double derivative(const EmbeddingMap& map, const Eigen::VectorXd& u, int output,
                  std::initializer_list<int> wrt);

/// Reads the case's coordinates out of a coefficient tensor.
Eigen::VectorXd coordinates_of(const FanoTensor& d, const ManifoldCase& manifold);

/// Full coefficient tensor of the product state at manifold point u:
/// leading entry 1, image entries from evaluate(), nothing else nonzero.
FanoTensor tensor_at(const EmbeddingMap& map, const Eigen::VectorXd& u);

struct ImmersionReport {
  int rank = 0;
  int expected = 0;
  double min_singular_value = 0.0;
  bool immersion = false;  // rank == expected
};

/// Numerical rank of the Jacobian at u. Because every coordinate also appears
/// as an image component, the rank is full everywhere and the smallest
/// singular value is at least 1.
ImmersionReport verify_immersion(const EmbeddingMap& map, const Eigen::VectorXd& u);

}  // namespace fanogeo
