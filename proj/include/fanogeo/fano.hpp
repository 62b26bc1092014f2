// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "fanogeo/multi_index.hpp"

namespace fanogeo {

using cplx = std::complex<double>;

/// Density matrix of `qudits` subsystems with `levels` levels each.
/// The matrix is dim() x dim() with dim() = levels^qudits; subsystem 1 is the
/// most significant factor in the row/column index.
struct DensityMatrix {
  int levels = 2;
  int qudits = 1;
  Eigen::MatrixXcd matrix;

  int dim() const { return int(ipow(levels, qudits)); }
};

/// Real coefficient tensor d_{i1..iM} of the expansion
///   rho = sum d_{i1..iM} e^{i1} x ... x e^{iM},
/// stored flat in row-major order (i1 most significant), each index running
/// over 0 .. levels^2-1. For a trace-one state, data[0] == 1.
struct FanoTensor {
  int levels = 2;
  int qudits = 1;
  std::vector<double> data;

  /// Range of each index: levels^2.
  int side() const { return levels * levels; }
  long long size() const { return ipow(side(), qudits); }

  long long flat(std::span<const int> idx) const { return flat_from_digits(idx, side()); }
  double operator()(std::span<const int> idx) const { return data[size_t(flat(idx))]; }
  double& operator()(std::span<const int> idx) { return data[size_t(flat(idx))]; }
  double operator()(std::initializer_list<int> idx) const {
    return (*this)(std::span<const int>(idx.begin(), idx.size()));
  }
  double& operator()(std::initializer_list<int> idx) {
    return (*this)(std::span<const int>(idx.begin(), idx.size()));
  }
};

/// Coefficients d_{i1..iM} = levels^qudits * tr(rho * e^{i1} x ... x e^{iM}).
/// Requires rho Hermitian and trace-one within 1e-12; the coefficients are
/// then real within 1e-12 and the leading entry is normalized to exactly 1.
FanoTensor decompose(const DensityMatrix& rho);

/// Inverse expansion rho = sum d_{i1..iM} e^{i1} x ... x e^{iM}.
/// Requires d.data[0] == 1 within 1e-12. The result is Hermitian with unit
/// trace by construction; positivity is not enforced (use validate()).
DensityMatrix reconstruct(const FanoTensor& d);

/// Partial trace keeping the listed subsystems (0-based, strictly increasing,
/// nonempty). The kept subsystems retain their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

/// Generalized Bloch vector a_i = levels * tr(rho e^i), i = 1..levels^2-1,
/// of a single-qudit state. Requires qudits == 1 and rho Hermitian.
Eigen::VectorXd bloch_of(const DensityMatrix& rho);

/// Bloch vector of one marginal read directly off the coefficient tensor:
/// component i is the entry with index i in the given slot and 0 elsewhere.
Eigen::VectorXd marginal_bloch(const FanoTensor& d, int subsystem);

/// Diagnostic summary of the defining density-matrix properties.
struct ValidationReport {
  double hermiticity_dev = 0.0;  // max |rho - rho^dagger|
  double trace_dev = 0.0;        // |tr(rho) - 1|
  double min_eigenvalue = 0.0;   // of the Hermitian part
  bool hermitian = false;        // hermiticity_dev <= 1e-12
  bool unit_trace = false;       // trace_dev <= 1e-12
  bool positive_semidefinite = false;  // min_eigenvalue >= -1e-10
  bool valid = false;            // all of the above
};

ValidationReport validate(const DensityMatrix& rho);

}  // namespace fanogeo
