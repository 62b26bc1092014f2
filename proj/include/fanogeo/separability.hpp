// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "fanogeo/fano.hpp"
#include "fanogeo/partition.hpp"

namespace fanogeo {

/// Outcome of testing one factorization pattern.
struct ProductCheckReport {
  Partition partition;
  double tolerance = 0.0;
  double residual_norm = 0.0;   // Frobenius norm of the residual over all entries
  double max_violation = 0.0;   // largest absolute residual entry
  bool is_product = false;      // max_violation <= tolerance
};

/// Reduced coefficient tensor of each group: entry J of block l is the
/// tensor entry whose index is J on the group's subsystems and 0 elsewhere
/// (the Fano tensor of the marginal state on that group).
std::vector<FanoTensor> group_coefficients(const FanoTensor& d, const Partition& partition);

/// Residual r_I = prod_l block_l(I restricted to group l) - d_I for every
/// multi-index I, flat in the tensor's index order. A state factorizes over
/// the partition exactly when the residual vanishes.
std::vector<double> product_residual(const FanoTensor& d, const Partition& partition);

/// Evaluates the residual and compares its largest entry to the tolerance.
ProductCheckReport is_product(const FanoTensor& d, const Partition& partition,
                              double tolerance = 1e-10);

/// Runs is_product for every partition of the subsystems, coarsest to finest
/// (at most 6 subsystems; see all_partitions).
std::vector<ProductCheckReport> classify(const FanoTensor& d, double tolerance = 1e-10);

}  // namespace fanogeo
