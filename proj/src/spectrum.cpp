// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/spectrum.hpp"

#include <cmath>
#include <utility>

#include "pbl/numeric.hpp"

namespace pbl {

EnergySpectrum::EnergySpectrum(std::vector<double> levels)
    : levels_(std::move(levels)) {
  if (levels_.empty()) throw InvalidState("spectrum must have at least one level");
  for (double e : levels_) {
    if (!std::isfinite(e) || e < 0.0)
      throw InvalidState("energy levels must be finite and nonnegative");
  }
}

EnergySpectrum EnergySpectrum::ladder(std::size_t d) {
  if (d == 0) throw InvalidState("ladder dimension must be positive");
  std::vector<double> levels(d);
  for (std::size_t i = 0; i < d; ++i) levels[i] = static_cast<double>(i);
  return EnergySpectrum(std::move(levels));
}

bool EnergySpectrum::sorted() const {
  for (std::size_t i = 0; i + 1 < levels_.size(); ++i)
    if (levels_[i + 1] < levels_[i]) return false;
  return true;
}

bool EnergySpectrum::non_degenerate() const {
  for (std::size_t i = 0; i + 1 < levels_.size(); ++i)
    if (levels_[i + 1] - levels_[i] <= kDegeneracyTol) return false;
  return true;
}

bool EnergySpectrum::is_ladder() const {
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i] != static_cast<double>(i)) return false;
  return true;
}

}  // namespace pbl
