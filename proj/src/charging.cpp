// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/charging.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "pbl/core.hpp"
#include "pbl/geometry.hpp"
#include "pbl/numeric.hpp"

namespace pbl {

namespace {

void require_unit_gap(const QubitBattery& battery) {
  if (battery.gap() != 1.0)
    throw PreconditionError("ladder-charger formulas assume a unit battery gap");
}

void require_ladder(const DiagonalState& charger, const char* what) {
  if (!charger.spectrum().is_ladder())
    throw PreconditionError(std::string(what) +
                            " needs a ladder charger; optimal_charge handles "
                            "general spectra");
}

// Descending-order summation so independent routes over the same value
// multiset agree bitwise.
double sum_desc(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

ChargeResult make_result(const QubitBattery& battery, double delta,
                         std::vector<std::size_t> swapped) {
  double p1f = battery.p1() + delta;
  p1f = std::clamp(p1f, 0.0, 1.0);
  return ChargeResult{QubitBattery(1.0 - p1f, p1f, battery.gap()), delta,
                      std::move(swapped)};
}

// Sum of the positive pair gains delta_k = p0 q_k - p1 q_{k-1}; the top of
// the excited-population interval reachable from a ladder ancilla.
double max_pair_gain(const QubitBattery& battery, const DiagonalState& ancilla) {
  require_unit_gap(battery);
  require_ladder(ancilla, "the stochastic-map family");
  double gain = 0.0;
  for (std::size_t k = 1; k < ancilla.dimension(); ++k) {
    gain += std::max(0.0, battery.p0() * ancilla.prob(k) -
                              battery.p1() * ancilla.prob(k - 1));
  }
  return gain;
}

}  // namespace

bool charging_possible(const QubitBattery& battery, const DiagonalState& charger) {
  if (!battery.passive())
    throw PreconditionError("charging condition is stated for passive batteries");
  require_unit_gap(battery);
  require_ladder(charger, "charging_possible");
  if (!is_passive(charger))
    throw PreconditionError("charging condition is stated for passive chargers");
  for (std::size_t k = 1; k < charger.dimension(); ++k) {
    if (definitely_greater(battery.p0() * charger.prob(k),
                           battery.p1() * charger.prob(k - 1)))
      return true;
  }
  return false;
}

ChargeResult optimal_charge(const QubitBattery& battery, const DiagonalState& charger) {
  const auto joint = JointDiagonalState::product(battery, charger);
  const auto groups = joint.energy_subspaces(kDegeneracyTol);
  double delta = 0.0;
  std::vector<std::size_t> swapped;
  bool pairwise = true;
  for (const auto& group : groups) {
    std::vector<double> values;
    std::vector<double> initial_excited;
    values.reserve(group.size());
    for (std::size_t idx : group) {
      const auto& entry = joint.entries()[idx];
      values.push_back(entry.probability);
      if (entry.battery_level == 1) initial_excited.push_back(entry.probability);
    }
    const std::size_t excited_slots = initial_excited.size();
    if (excited_slots == 0 || excited_slots == group.size()) continue;
    if (group.size() > 2) pairwise = false;

    std::sort(values.begin(), values.end(), std::greater<>());
    values.resize(excited_slots);
    delta += sum_desc(std::move(values)) - sum_desc(std::move(initial_excited));

    if (group.size() == 2 && pairwise) {
      const auto& first = joint.entries()[group[0]];
      const auto& second = joint.entries()[group[1]];
      const auto& ground = first.battery_level == 0 ? first : second;
      const auto& excited = first.battery_level == 0 ? second : first;
      if (ground.probability > excited.probability)
        swapped.push_back(ground.charger_level);
    }
  }
  if (!pairwise) swapped.clear();
  return make_result(battery, delta, std::move(swapped));
}

ChargeResult brute_force_charge(const QubitBattery& battery,
                                const DiagonalState& charger) {
  const auto joint = JointDiagonalState::product(battery, charger);
  if (joint.dimension() > 10'000)
    throw PreconditionError("brute-force oracle is capped at joint dimension 1e4");
  const auto groups = joint.energy_subspaces(kDegeneracyTol);
  double delta = 0.0;
  for (const auto& group : groups) {
    if (group.size() > 8)
      throw PreconditionError("degenerate subspace too large for brute force");
    std::vector<double> values;
    std::vector<int> slot_levels;
    std::vector<double> initial_excited;
    for (std::size_t idx : group) {
      const auto& entry = joint.entries()[idx];
      values.push_back(entry.probability);
      slot_levels.push_back(entry.battery_level);
      if (entry.battery_level == 1) initial_excited.push_back(entry.probability);
    }
    if (initial_excited.empty() || initial_excited.size() == group.size()) continue;

    std::sort(values.begin(), values.end());
    double best = -1.0;
    std::vector<double> assigned;
    do {
      assigned.clear();
      for (std::size_t s = 0; s < values.size(); ++s)
        if (slot_levels[s] == 1) assigned.push_back(values[s]);
      best = std::max(best, sum_desc(assigned));
    } while (std::next_permutation(values.begin(), values.end()));
    delta += best - sum_desc(std::move(initial_excited));
  }
  return make_result(battery, delta, {});
}

double delta_full_cascade(const QubitBattery& battery, const DiagonalState& charger) {
  if (!battery.passive())
    throw PreconditionError("full cascade is stated for passive batteries");
  require_unit_gap(battery);
  require_ladder(charger, "delta_full_cascade");
  if (!is_passive(charger))
    throw PreconditionError("full cascade is stated for passive chargers");
  const auto& q = charger.probs();
  for (std::size_t k = 1; k < q.size(); ++k) {
    if (definitely_greater(battery.p1() * q[k - 1], battery.p0() * q[k]))
      throw PreconditionError(
          "full-cascade premise p0/p1 >= max_i q_i/q_{i+1} violated");
  }
  double upper = 0.0, lower = 0.0;
  for (std::size_t i = 1; i < q.size(); ++i) upper += q[i];
  for (std::size_t i = 0; i + 1 < q.size(); ++i) lower += q[i];
  return battery.p0() * upper - battery.p1() * lower;
}

ThermalCharge thermal_delta(const QubitBattery& battery, double beta, std::size_t d) {
  if (!(beta >= 0.0)) throw InvalidState("thermal charger needs beta >= 0");
  if (d < 2) throw InvalidState("thermal charger needs d >= 2");
  if (!battery.passive())
    throw PreconditionError("thermal charging is stated for passive batteries");
  require_unit_gap(battery);
  if (!definitely_greater(battery.inverse_temperature(), beta)) return {0.0, false};
  const auto charger = DiagonalState::gibbs(beta, d);
  const double delta = (battery.p0() - battery.p1()) +
                       (battery.p1() * charger.prob(d - 1) -
                        battery.p0() * charger.prob(0));
  return {delta, true};
}

double entropy_pollution(const QubitBattery& battery, const DiagonalState& charger) {
  const ChargeResult result = optimal_charge(battery, charger);
  if (result.delta <= 0.0)
    throw PreconditionError("battery gains no energy; entropy pollution undefined");
  const double ds = shannon_entropy(result.final_battery) - shannon_entropy(battery);
  return ds / (result.delta * battery.gap());
}

QubitBattery StochasticMap::apply(const QubitBattery& battery) const {
  const double p0f = a * battery.p0() + b * battery.p1();
  return QubitBattery(p0f, (1.0 - a) * battery.p0() + (1.0 - b) * battery.p1(),
                      battery.gap());
}

StochasticMap classical_stochastic_map(const DiagonalState& charger,
                                       const std::vector<std::size_t>& swaps) {
  require_ladder(charger, "classical_stochastic_map");
  std::vector<std::size_t> levels = swaps;
  std::sort(levels.begin(), levels.end());
  if (std::adjacent_find(levels.begin(), levels.end()) != levels.end())
    throw InvalidState("swap levels must be distinct (resource used twice)");
  StochasticMap map;
  for (std::size_t k : levels) {
    if (k < 1 || k >= charger.dimension())
      throw InvalidState("swap level out of range [1, d-1]");
    map.a -= charger.prob(k);
    map.b += charger.prob(k - 1);
  }
  map.a = std::clamp(map.a, 0.0, 1.0);
  map.b = std::clamp(map.b, 0.0, 1.0);
  map.swap_levels = std::move(levels);
  return map;
}

StochasticMap quantum_stochastic_map(
    const DiagonalState& charger,
    const std::vector<std::pair<std::size_t, double>>& angles) {
  require_ladder(charger, "quantum_stochastic_map");
  std::vector<std::pair<std::size_t, double>> sorted = angles;
  std::sort(sorted.begin(), sorted.end());
  StochasticMap map;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto [k, alpha] = sorted[i];
    if (i > 0 && sorted[i - 1].first == k)
      throw InvalidState("swap levels must be distinct (resource used twice)");
    if (k < 1 || k >= charger.dimension())
      throw InvalidState("swap level out of range [1, d-1]");
    if (!(alpha >= 0.0) || alpha > std::numbers::pi / 2.0 + kProbTol)
      throw InvalidState("mixing angle must lie in [0, pi/2]");
    const double c2 = std::cos(alpha) * std::cos(alpha);
    map.a -= charger.prob(k) * c2;
    map.b += charger.prob(k - 1) * c2;
    map.swap_levels.push_back(k);
    map.angles.push_back(alpha);
  }
  map.a = std::clamp(map.a, 0.0, 1.0);
  map.b = std::clamp(map.b, 0.0, 1.0);
  return map;
}

bool full_swap_feasible(const QubitBattery& battery, const DiagonalState& ancilla) {
  if (!battery.passive())
    throw PreconditionError("full-swap analysis assumes a passive battery");
  return greater_or_close(max_pair_gain(battery, ancilla),
                          battery.p0() - battery.p1());
}

bool supercharge_feasible(const QubitBattery& battery, const DiagonalState& ancilla) {
  if (!battery.passive())
    throw PreconditionError("supercharge analysis assumes a passive battery");
  return definitely_greater(max_pair_gain(battery, ancilla),
                            battery.p0() - battery.p1());
}

}  // namespace pbl
