// SPDX-License-Identifier: MIT
#include "fanogeo/separability.hpp"

#include <cmath>
#include <stdexcept>

namespace fanogeo {

namespace {

void check_input(const FanoTensor& d, const Partition& partition, const char* who) {
  if (std::ssize(d.data) != d.size())
    throw std::invalid_argument(std::string(who) + ": tensor data size mismatch");
  partition.check(d.qudits);
}

}  // namespace

std::vector<FanoTensor> group_coefficients(const FanoTensor& d, const Partition& partition) {
  check_input(d, partition, "group_coefficients");
  std::vector<FanoTensor> blocks;
  std::vector<int> full(d.qudits), local;
  for (const auto& group : partition.groups) {
    FanoTensor block{d.levels, int(group.size()), {}};
    block.data.resize(size_t(block.size()));
    local.assign(group.size(), 0);
    for (long long j = 0; j < block.size(); ++j) {
      digits_from_flat(j, d.side(), local);
      std::fill(full.begin(), full.end(), 0);
      for (size_t i = 0; i < group.size(); ++i) full[size_t(group[i])] = local[i];
      block.data[size_t(j)] = d(full);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<double> product_residual(const FanoTensor& d, const Partition& partition) {
  const std::vector<FanoTensor> blocks = group_coefficients(d, partition);
  std::vector<double> residual(d.data.size());
  std::vector<int> idx(d.qudits), local;
  for (long long f = 0; f < d.size(); ++f) {
    digits_from_flat(f, d.side(), idx);
    double prod = 1.0;
    for (size_t l = 0; l < partition.groups.size(); ++l) {
      const auto& group = partition.groups[l];
      local.assign(group.size(), 0);
      for (size_t i = 0; i < group.size(); ++i) local[i] = idx[size_t(group[i])];
      prod *= blocks[l](local);
    }
    residual[size_t(f)] = prod - d.data[size_t(f)];
  }
  return residual;
}

ProductCheckReport is_product(const FanoTensor& d, const Partition& partition,
                              double tolerance) {
  if (!(tolerance >= 0.0))
    throw std::invalid_argument("is_product: tolerance must be nonnegative");
  const std::vector<double> residual = product_residual(d, partition);
  ProductCheckReport rep;
  rep.partition = partition;
  rep.tolerance = tolerance;
  double sq = 0.0;
  for (double r : residual) {
    sq += r * r;
    rep.max_violation = std::max(rep.max_violation, std::abs(r));
  }
  rep.residual_norm = std::sqrt(sq);
  rep.is_product = rep.max_violation <= tolerance;
  return rep;
}

std::vector<ProductCheckReport> classify(const FanoTensor& d, double tolerance) {
  std::vector<ProductCheckReport> reports;
  for (const Partition& p : all_partitions(d.qudits))
    reports.push_back(is_product(d, p, tolerance));
  return reports;
}

}  // namespace fanogeo
