// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "pbl/spectrum.hpp"

namespace pbl {

/// A probability vector over an energy spectrum of matching length.
/// Entries are nonnegative and sum to one within 1e-12.
class DiagonalState {
 public:
  DiagonalState(std::vector<double> probs, EnergySpectrum spectrum);

  /// Maximally mixed state on ladder(d).
  static DiagonalState uniform(std::size_t d);
  /// Gibbs state q_i proportional to exp(-beta * i) on ladder(d).
  /// beta = +infinity yields the ground vertex.
  static DiagonalState gibbs(double beta, std::size_t d);
  /// Polytope vertex e_j on ladder(d): first j entries 1/j, rest 0 (1 <= j <= d).
  static DiagonalState vertex(std::size_t j, std::size_t d);

  std::size_t dimension() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  const EnergySpectrum& spectrum() const { return spectrum_; }

 private:
  std::vector<double> probs_;
  EnergySpectrum spectrum_;
};

/// Two-level battery with populations (p0, p1) and level gap E (default 1).
class QubitBattery {
 public:
  QubitBattery(double p0, double p1, double gap = 1.0);

  double p0() const { return p0_; }
  double p1() const { return p1_; }
  double gap() const { return gap_; }

  /// p0 >= p1 up to the tie slack.
  bool passive() const;
  /// ln(p0/p1)/gap; +infinity when p1 == 0.
  double inverse_temperature() const;

  DiagonalState as_state() const;

 private:
  double p0_, p1_, gap_;
};

/// One occupied basis state of a battery (x) charger product.
struct JointEntry {
  int battery_level;          // 0 or 1
  std::size_t charger_level;  // index into the charger spectrum
  double total_energy;        // battery level energy + charger level energy
  double probability;         // p_b * q_k
};

/// Occupation table of a battery (x) charger product state, laid out
/// battery-major: all battery-ground entries first, then battery-excited.
class JointDiagonalState {
 public:
  static JointDiagonalState product(const QubitBattery& battery,
                                    const DiagonalState& charger);

  const std::vector<JointEntry>& entries() const { return entries_; }
  std::size_t dimension() const { return entries_.size(); }

  /// Total population with battery_level == 1.
  double excited_population() const;

  /// Entry indices grouped into degenerate total-energy subspaces
  /// (ascending energy; members within `tol` of each other).
  std::vector<std::vector<std::size_t>> energy_subspaces(double tol) const;

 private:
  explicit JointDiagonalState(std::vector<JointEntry> entries);
  std::vector<JointEntry> entries_;
};

}  // namespace pbl
