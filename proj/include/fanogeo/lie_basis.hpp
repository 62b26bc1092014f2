// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace fanogeo {

using cplx = std::complex<double>;

/// Hermitian traceless generators sigma^1 .. sigma^{N^2-1} of su(N),
/// normalized so that tr(sigma^i sigma^j) = N delta_ij.
///
/// Ordering: symmetric off-diagonal pairs (j,k), j<k, lexicographic; then
/// antisymmetric pairs in the same order; then the N-1 diagonal generators.
/// For levels == 2 this yields exactly the Pauli matrices X, Y, Z.
///
/// The returned reference is to an immutable cached set (thread-safe).
/// Throws std::invalid_argument for levels < 2.
const std::vector<Eigen::MatrixXcd>& generators(int levels);

/// Tensor-basis elements e^0 .. e^{N^2-1}: e^0 = I/N, e^i = sigma^i/N.
/// These satisfy tr(e^i e^j) = delta_ij / N.
///
/// Same caching and error behavior as generators().
const std::vector<Eigen::MatrixXcd>& basis_elements(int levels);

}  // namespace fanogeo
