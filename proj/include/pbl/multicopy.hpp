// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pbl/state.hpp"

namespace pbl {

/// One distinct exponent multiset of an n-fold charger power: a_i copies of
/// base level i, with per-basis-state probability prod q_i^{a_i} occurring
/// `multiplicity` times.
struct CompositeEntry {
  std::vector<unsigned> exponents;
  double total_energy = 0.0;
  double probability = 0.0;
  std::uint64_t multiplicity = 1;
};

struct CompositeLevelTable {
  std::size_t base_dimension = 0;
  int copies = 0;
  std::vector<CompositeEntry> entries;
};

/// Number of exponent multisets C(n+d-1, d-1); throws past the 2e6 cap.
std::uint64_t composite_table_size(std::size_t d, int n);

/// Occupation table of charger^(x n) grouped by exponent multiset.
/// Requires a ladder charger and C(n+d-1, d-1) <= 2e6.
CompositeLevelTable composite_levels(const DiagonalState& charger, int n);

/// Whether n charger copies can charge the battery: some pair of composite
/// basis states u, v with E_v = E_u + 1 satisfies p0 q_v > p1 q_u.
/// Reduces to charging_possible at n = 1.
bool charging_possible_n(const QubitBattery& battery, const DiagonalState& charger,
                         int n);

enum class CopySearchOutcome {
  found,             // smallest charging copy count located
  budget_exhausted,  // nothing up to n_max; no theoretical claim implied
  thermal_no_go,     // exact Gibbs charger that fails single-copy: no n works
};

struct MinCopiesResult {
  std::optional<int> copies;
  CopySearchOutcome outcome = CopySearchOutcome::budget_exhausted;
};

/// Smallest n <= n_max with charging_possible_n true. Requires a strictly
/// passive battery (p0 > p1) and a passive ladder charger. Exact Gibbs
/// chargers that fail the single-copy test short-circuit to thermal_no_go.
MinCopiesResult min_copies_to_charge(const QubitBattery& battery,
                                     const DiagonalState& charger, int n_max);

/// The two closed-form composite ratio sequences for interior level k
/// (1 <= k <= d-2) at exponent r:
///   first  = (q_0/q_1) (q_{k-1} q_{k+1} / q_k^2)^{r/2}
///   second = (q_1/q_2) (q_k^2 / (q_{k-1} q_{k+1}))^{r/2}
/// All populations must be strictly positive.
std::pair<double, double> eq78_ratio_sequences(const DiagonalState& charger,
                                               std::size_t k, int r);

/// Membership in the free set F_n: no m <= n copies can charge the battery.
bool free_set_membership(const QubitBattery& battery, const DiagonalState& charger,
                         int n);

/// Maximal excited population achievable with n charger copies under
/// energy-conserving unitaries (subspace-wise largest-population assignment
/// on the composite table). Non-decreasing in n; equals
/// optimal_charge(...).final_battery.p1() at n = 1.
double optimal_charge_composite(const QubitBattery& battery,
                                const DiagonalState& charger, int n);

}  // namespace pbl
