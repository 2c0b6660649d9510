// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>

#include "pbl/state.hpp"

namespace pbl {

struct DischargeResult {
  QubitBattery final_battery;
  /// Block-shift index k: excited-column populations p1 q_0..q_k moved into
  /// the ground column. Empty when no strict improvement exists.
  std::optional<std::size_t> shift_index;
  /// Battery energy decrease (p0~ - p0) * gap.
  double energy_drop = 0.0;
};

/// Theorem-style discharge test for a passive discharger with levels
/// q_0..q_d: possible iff p0/p1 < q_0/q_d, evaluated cross-multiplied as
/// p1 q_0 > p0 q_d so a vanishing q_d needs no special casing.
bool discharging_possible(const QubitBattery& battery, const DiagonalState& discharger);

/// Maximal ground population over arbitrary joint permutations, computed by
/// the block-shift construction: p0~(k) = p0 sum_{i<=d-k-1} q_i
/// + p1 sum_{i<=k} q_i maximized over k, ties resolved toward larger k.
/// Must equal the global sort oracle.
DischargeResult optimal_discharge(const QubitBattery& battery,
                                  const DiagonalState& discharger);

/// Independent route: sort all 2(d+1) joint populations descending and sum
/// the top d+1 into the ground population.
double discharge_sort_oracle(const QubitBattery& battery,
                             const DiagonalState& discharger);

enum class DischargeOrder { a_better_or_equal, b_better_or_equal, equal };

struct DischargeOrdering {
  DischargeOrder order;
  double p0_final_a = 0.0;
  double p0_final_b = 0.0;
};

/// Majorization-based ordering of two dischargers against the battery:
/// whichever majorizes the other discharges at least as well. Incomparable
/// pairs return nullopt (their final populations are still reported inside
/// the optional when comparable).
std::optional<DischargeOrdering> discharge_ordering(const QubitBattery& battery,
                                                    const DiagonalState& a,
                                                    const DiagonalState& b);

}  // namespace pbl
