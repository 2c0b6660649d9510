// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "pbl/state.hpp"

namespace pbl {

/// Lorenz-type thermo-majorization polyline: x accumulates Boltzmann weights
/// e^{-beta eps_i}, y accumulates populations, segments sorted by decreasing
/// p_i / e^{-beta eps_i}. Starts at (0,0), ends at (Z, 1), concave.
struct ThermoCurve {
  std::vector<std::pair<double, double>> points;

  /// Piecewise-linear interpolation (x clamped to the curve's range).
  double value_at(double x) const;
  /// x coordinate of the right endpoint (the partition function Z).
  double total_weight() const;
};

/// Best excited population reachable from the charger (optimal_charge).
double max_excited_population(const QubitBattery& battery, const DiagonalState& charger);

/// Whether the charger can push the battery past population inversion:
/// max excited population > 1/2, strict.
bool activates(const QubitBattery& battery, const DiagonalState& charger);

/// Branch-resolved activation verdict for a 3-level charger. Each branch is
/// gated by its charging premise and decided by the population statement
/// p1~ > 1/2 for that branch's swap set; the printed ratio bound
/// max{(1-2q0)/(1-2q1), (1-2q1)/(1-2q2), (1-2q0-2q1)/(1-2q1-2q2)} flips sign
/// when denominators go negative, so it is exposed only as a reference value
/// (+-inf when a denominator vanishes).
struct ActivationVerdict3d {
  bool branch_i = false;     // swap level 1 only (needs p0/p1 > q0/q1)
  bool branch_ii = false;    // swap level 2 only (needs p0/p1 > q1/q2)
  bool branch_both = false;  // both swaps (needs both premises)
  double formula_max = 0.0;

  bool any() const { return branch_i || branch_ii || branch_both; }
};

ActivationVerdict3d activation_condition_3d(const QubitBattery& battery,
                                            const DiagonalState& charger);

/// Largest bath inverse temperature that can activate the battery:
/// beta_max = ln(2 p0)/E, requiring p0 > 1/2. Always below the battery's
/// own inverse temperature.
double bath_activation_bound(const QubitBattery& battery);

ThermoCurve thermo_majorization_curve(const DiagonalState& state, double beta);

/// p's curve lies on-or-above q's curve everywhere (shared spectrum).
bool thermo_majorizes(const DiagonalState& p, const DiagonalState& q, double beta);

/// thermo_majorizes plus strict dominance at the first interior kink of the
/// joined curves, which is what "strictly thermo-majorizes" means for the
/// activation bound.
bool strictly_thermo_majorizes(const DiagonalState& p, const DiagonalState& q,
                               double beta);

}  // namespace pbl
