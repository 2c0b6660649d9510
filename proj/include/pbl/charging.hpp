// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pbl/state.hpp"

namespace pbl {

/// Outcome of a charging protocol on the battery.
struct ChargeResult {
  QubitBattery final_battery;
  /// Increase of the excited population (>= 0 for the optimal protocol).
  double delta = 0.0;
  /// Charger levels k whose |0,k> <-> |1,k-1> exchange was applied.
  /// Populated when every degenerate subspace pairs at most one ground slot
  /// with one excited slot (always the case for ladder chargers).
  std::vector<std::size_t> swapped_levels;
};

/// Necessary and sufficient single-copy charging test for a ladder charger:
/// p0/p1 > min_i q_i/q_{i+1}, strict (a vanishing q_{i+1} makes the ratio
/// infinite). Requires a passive battery and a passive charger on ladder(d);
/// general spectra are handled by optimal_charge instead.
bool charging_possible(const QubitBattery& battery, const DiagonalState& charger);

/// Maximal excited population achievable by energy-conserving unitaries:
/// the joint spectrum is split into degenerate total-energy subspaces and in
/// each one the largest populations are assigned to the battery-excited
/// slots. For a ladder charger this reduces to
/// p1~ = p1 q_{d-1} + sum_E max(p0 q_E, p1 q_{E-1}).
ChargeResult optimal_charge(const QubitBattery& battery, const DiagonalState& charger);

/// Verification oracle: exhausts every permutation inside each degenerate
/// subspace (subspace dimension <= 8, joint dimension <= 1e4) and keeps the
/// best excited population. Must agree with optimal_charge exactly.
ChargeResult brute_force_charge(const QubitBattery& battery, const DiagonalState& charger);

/// Closed-form delta when every adjacent pair swaps:
/// delta = p0 sum_{i>=1} q_i - p1 sum_{i<=d-2} q_i.
/// Requires p0/p1 >= max_i q_i/q_{i+1} (ladder charger).
double delta_full_cascade(const QubitBattery& battery, const DiagonalState& charger);

struct ThermalCharge {
  double delta = 0.0;
  /// False in the beta >= beta_battery regime, where delta is pinned to 0.
  bool can_charge = false;
};

/// Charging amount for the Gibbs charger exp(-beta i)/Z on ladder(d):
/// delta = (p0 - p1) + (p1 q_{d-1} - p0 q_0) when the battery is colder
/// than the charger (beta_b > beta); otherwise {0, false}.
ThermalCharge thermal_delta(const QubitBattery& battery, double beta, std::size_t d);

/// (S(final) - S(initial)) / (E(final) - E(initial)) across optimal_charge.
/// Errors when no energy is gained.
double entropy_pollution(const QubitBattery& battery, const DiagonalState& charger);

/// 2x2 column-stochastic matrix ((a, b), (1-a, 1-b)) acting on (p0, p1),
/// tagged with the swap set / rotation angles that produced it.
struct StochasticMap {
  double a = 1.0;
  double b = 0.0;
  std::vector<std::size_t> swap_levels;
  std::vector<double> angles;  // parallel to swap_levels; empty for classical maps

  QubitBattery apply(const QubitBattery& battery) const;
  bool classical() const { return angles.empty(); }
};

/// Permutation map S^K for swaps |0,k> <-> |1,k-1>, k in K:
/// a = 1 - sum_K q_k, b = sum_K q_{k-1}. Indices must be distinct and in
/// [1, d-1] (the same resource cannot be used twice).
StochasticMap classical_stochastic_map(const DiagonalState& charger,
                                       const std::vector<std::size_t>& swaps);

/// Partial-swap map with mixing angles alpha_k in [0, pi/2] per level:
/// a = 1 - sum q_k cos^2(alpha_k), b = sum q_{k-1} cos^2(alpha_k).
/// alpha = 0 reproduces the classical swap, alpha = pi/2 the identity.
StochasticMap quantum_stochastic_map(
    const DiagonalState& charger,
    const std::vector<std::pair<std::size_t, double>>& angles);

/// Whether the battery can be driven exactly to (p1, p0) by some
/// energy-conserving map built from the ancilla. The reachable excited
/// population forms the interval [p1 + sum min(delta_k, 0),
/// p1 + sum max(delta_k, 0)] with delta_k = p0 q_k - p1 q_{k-1}, so this
/// holds iff sum max(delta_k, 0) >= p0 - p1. Always false for passive
/// ancillas on a passive battery with p0 > p1.
bool full_swap_feasible(const QubitBattery& battery, const DiagonalState& ancilla);

/// Whether some reachable final battery has strictly higher energy and
/// strictly lower entropy, i.e. sum max(delta_k, 0) > p0 - p1. Always false
/// for passive ancillas.
bool supercharge_feasible(const QubitBattery& battery, const DiagonalState& ancilla);

}  // namespace pbl
