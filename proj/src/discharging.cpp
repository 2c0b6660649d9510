// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/discharging.hpp"

#include <algorithm>
#include <functional>

#include "pbl/core.hpp"
#include "pbl/geometry.hpp"
#include "pbl/numeric.hpp"

namespace pbl {

namespace {

void require_discharge_inputs(const QubitBattery& battery,
                              const DiagonalState& discharger) {
  if (!battery.passive())
    throw PreconditionError("discharging is stated for passive batteries");
  if (!is_passive(discharger))
    throw PreconditionError("discharging is stated for passive dischargers");
}

double sum_desc(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

// p0~ for shift index k = taken - 1: ground column collects the p0 products
// of levels 0..d-taken plus the p1 products of levels 0..taken-1, summed in
// canonical descending order.
double block_shift_value(const QubitBattery& battery, const DiagonalState& discharger,
                         std::size_t taken) {
  const std::size_t levels = discharger.dimension();
  std::vector<double> selected;
  selected.reserve(levels);
  for (std::size_t i = 0; i + taken < levels; ++i)
    selected.push_back(battery.p0() * discharger.prob(i));
  for (std::size_t i = 0; i < taken; ++i)
    selected.push_back(battery.p1() * discharger.prob(i));
  return sum_desc(std::move(selected));
}

}  // namespace

bool discharging_possible(const QubitBattery& battery, const DiagonalState& discharger) {
  require_discharge_inputs(battery, discharger);
  // Cross-multiplied p0/p1 < q_0/q_d, which also settles the q_d = 0 edge:
  // improvement exists exactly when the top excited population beats the
  // smallest ground one.
  return definitely_greater(battery.p1() * discharger.prob(0),
                            battery.p0() * discharger.prob(discharger.dimension() - 1));
}

DischargeResult optimal_discharge(const QubitBattery& battery,
                                  const DiagonalState& discharger) {
  require_discharge_inputs(battery, discharger);
  if (!discharging_possible(battery, discharger))
    return {battery, std::nullopt, 0.0};

  const std::size_t levels = discharger.dimension();
  std::size_t best_taken = 0;
  double best = battery.p0();
  for (std::size_t taken = 1; taken <= levels; ++taken) {
    const double candidate = block_shift_value(battery, discharger, taken);
    if (candidate >= best) {  // ties resolve toward the larger shift
      best = candidate;
      best_taken = taken;
    }
  }
  const double p0f = std::clamp(best, 0.0, 1.0);
  return {QubitBattery(p0f, 1.0 - p0f, battery.gap()),
          best_taken == 0 ? std::nullopt : std::optional<std::size_t>(best_taken - 1),
          (p0f - battery.p0()) * battery.gap()};
}

double discharge_sort_oracle(const QubitBattery& battery,
                             const DiagonalState& discharger) {
  require_discharge_inputs(battery, discharger);
  std::vector<double> populations;
  populations.reserve(2 * discharger.dimension());
  for (double p : {battery.p0(), battery.p1()})
    for (double q : discharger.probs()) populations.push_back(p * q);
  std::sort(populations.begin(), populations.end(), std::greater<>());
  double p0f = 0.0;
  for (std::size_t i = 0; i < discharger.dimension(); ++i) p0f += populations[i];
  return p0f;
}

std::optional<DischargeOrdering> discharge_ordering(const QubitBattery& battery,
                                                    const DiagonalState& a,
                                                    const DiagonalState& b) {
  const bool a_over_b = majorizes(a, b);
  const bool b_over_a = majorizes(b, a);
  if (!a_over_b && !b_over_a) return std::nullopt;
  DischargeOrdering ordering{};
  ordering.p0_final_a = optimal_discharge(battery, a).final_battery.p0();
  ordering.p0_final_b = optimal_discharge(battery, b).final_battery.p0();
  if (a_over_b && b_over_a)
    ordering.order = DischargeOrder::equal;
  else
    ordering.order = a_over_b ? DischargeOrder::a_better_or_equal
                              : DischargeOrder::b_better_or_equal;
  return ordering;
}

}  // namespace pbl
