// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "pbl/state.hpp"

namespace pbl {

/// Tr(rho H) = sum_i q_i eps_i.
double mean_energy(const DiagonalState& state);

/// -sum_i q_i ln q_i in nats, with 0 ln 0 = 0.
double shannon_entropy(const DiagonalState& state);
/// Binary entropy of (p0, p1) in nats.
double shannon_entropy(const QubitBattery& battery);

/// Product state: elementwise probability products with summed energies,
/// one level per basis-state pair in a-major order (levels are not merged
/// or re-sorted). Refuses results larger than 2e6 levels.
DiagonalState tensor(const DiagonalState& a, const DiagonalState& b);

/// p majorizes q: every descending partial sum of p dominates that of q
/// (ties within 1e-12 count as dominance). Requires equal lengths.
bool majorizes(const std::vector<double>& p, const std::vector<double>& q);
bool majorizes(const DiagonalState& p, const DiagonalState& q);

}  // namespace pbl
