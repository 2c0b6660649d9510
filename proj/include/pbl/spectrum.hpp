// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace pbl {

/// Ordered energy levels of a Hamiltonian diagonal in a fixed basis,
/// in dimensionless units.
///
/// The default `ladder(d)` spectrum is (0, 1, ..., d-1) with exact integer
/// gaps. Levels are normally non-decreasing; tensor products keep the raw
/// per-basis-state order, so sortedness is checked by the operations that
/// need it rather than enforced here.
class EnergySpectrum {
 public:
  explicit EnergySpectrum(std::vector<double> levels);

  /// Unit-gap spectrum 0, 1, ..., d-1 (exact integers).
  static EnergySpectrum ladder(std::size_t d);

  std::size_t dimension() const { return levels_.size(); }
  double level(std::size_t i) const { return levels_[i]; }
  const std::vector<double>& levels() const { return levels_; }

  bool sorted() const;
  /// Strictly increasing beyond the degeneracy bucket width.
  bool non_degenerate() const;
  bool is_ladder() const;

  friend bool operator==(const EnergySpectrum&, const EnergySpectrum&) = default;

 private:
  std::vector<double> levels_;
};

}  // namespace pbl
