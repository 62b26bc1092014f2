// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "fanogeo/embedding.hpp"
#include "fanogeo/fano.hpp"

namespace fanogeo {

/// Deterministic random stream. Draws are defined directly on top of the
/// mt19937_64 output (53-bit uniforms, Box-Muller normals) instead of the
/// standard distributions, whose exact sequences vary between standard
/// library implementations; a given seed reproduces the same values
/// everywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }
  /// Uniform on [0, 1).
  double uniform() { return double(gen_() >> 11) * 0x1p-53; }
  /// Uniform on [-1, 1).
  double uniform_symmetric() { return 2.0 * uniform() - 1.0; }
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// (I + a . sigma) / 2 for a Bloch vector with |a| <= 1.
DensityMatrix single_qubit_state(const Eigen::Vector3d& bloch);

/// Tensor product of the factors (same levels, arbitrary qudit counts),
/// in the given order.
DensityMatrix product_state(const std::vector<DensityMatrix>& factors);

/// (|00> + |11>)(<00| + <11|) / 2.
DensityMatrix bell_state();
/// (|0..0> + |1..1>)(h.c.) / 2 on `qudits` qubits.
DensityMatrix ghz_state(int qudits = 3);
/// Equal superposition of the single-excitation basis states.
DensityMatrix w_state(int qudits = 3);
/// p * Bell + (1 - p) * I/4, p in [0, 1].
DensityMatrix werner_state(double p);

/// Random mixed state G G^dagger / tr(G G^dagger) with standard-normal
/// complex G (Ginibre ensemble). Deterministic per seed.
DensityMatrix random_density(int levels, int qudits, std::uint64_t seed);

enum class SampleMode {
  box,      // every coordinate uniform in [-1, 1]
  physical  // every group block drawn from an actual state of that group
};

/// Random point in the case's coordinate box, or a random physical product
/// state's coordinates. Physical mode draws each single-qubit group's Bloch
/// vector uniformly from the unit ball (rejection, bounded attempts) and
/// each larger group's block from a random mixed state of that group, so the
/// reconstructed group tensors are positive semidefinite by construction.
Eigen::VectorXd random_manifold_point(const ManifoldCase& manifold, SampleMode mode,
                                      SeededRng& rng);
Eigen::VectorXd random_manifold_point(const ManifoldCase& manifold, SampleMode mode,
                                      std::uint64_t seed);

}  // namespace fanogeo
