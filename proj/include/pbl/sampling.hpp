// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pbl/state.hpp"

namespace pbl {

/// Deterministic generator of random diagonal states on ladder spectra.
///
/// Built on mt19937_64 with uniforms taken directly from the raw 64-bit
/// stream ((x >> 11) * 2^-53), so identical seeds reproduce byte-identical
/// sequences on every platform. Parallel use derives one sampler per worker
/// from (seed, stream index).
class PassiveSampler {
 public:
  explicit PassiveSampler(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform on the passive polytope: uniform simplex point (exponential
  /// spacings), sorted descending.
  DiagonalState sample_passive(std::size_t d);

  /// Uniform on the slice {passive} intersect {mean energy == energy} of
  /// ladder(d): free coordinates q_2..q_{d-1} are rejection-sampled from
  /// their bounding box and q_0, q_1 solved from the two linear constraints,
  /// so the energy is exact. Feasible range is [0, (d-1)/2].
  DiagonalState sample_passive_fixed_energy(std::size_t d, double energy);

  /// Uniform simplex draw conditioned on not being passive (rejection).
  DiagonalState sample_active_diagonal(std::size_t d);

  /// Unconditioned uniform simplex draw (building block; exposed for
  /// statistical checks of the rejection rates).
  std::vector<double> sample_simplex(std::size_t d);

 private:
  double unit();       // [0, 1)
  double unit_open();  // (0, 1]
  std::mt19937_64 rng_;
};

/// One-shot conveniences drawing the first sample of a fresh stream.
DiagonalState sample_passive(std::size_t d, std::uint64_t seed);
DiagonalState sample_passive_fixed_energy(std::size_t d, double energy,
                                          std::uint64_t seed);
DiagonalState sample_active_diagonal(std::size_t d, std::uint64_t seed);

}  // namespace pbl
