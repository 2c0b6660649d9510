// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/activation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pbl/charging.hpp"
#include "pbl/geometry.hpp"
#include "pbl/numeric.hpp"

namespace pbl {

double ThermoCurve::value_at(double x) const {
  if (points.size() < 2) return points.empty() ? 0.0 : points.front().second;
  x = std::clamp(x, points.front().first, points.back().first);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (x <= points[i].first) {
      const auto& [x0, y0] = points[i - 1];
      const auto& [x1, y1] = points[i];
      if (x1 == x0) return y1;
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return points.back().second;
}

double ThermoCurve::total_weight() const {
  return points.empty() ? 0.0 : points.back().first;
}

double max_excited_population(const QubitBattery& battery,
                              const DiagonalState& charger) {
  return optimal_charge(battery, charger).final_battery.p1();
}

bool activates(const QubitBattery& battery, const DiagonalState& charger) {
  return definitely_greater(max_excited_population(battery, charger), 0.5);
}

ActivationVerdict3d activation_condition_3d(const QubitBattery& battery,
                                            const DiagonalState& charger) {
  if (charger.dimension() != 3)
    throw PreconditionError("branch-resolved activation needs a 3-level charger");
  if (!battery.passive() || battery.gap() != 1.0)
    throw PreconditionError("activation branches assume a unit-gap passive battery");
  if (!charger.spectrum().is_ladder() || !is_passive(charger))
    throw PreconditionError("activation branches assume a passive ladder charger");

  const double p0 = battery.p0(), p1 = battery.p1();
  const auto& q = charger.probs();
  const double delta1 = p0 * q[1] - p1 * q[0];
  const double delta2 = p0 * q[2] - p1 * q[1];
  const bool charges1 = definitely_greater(p0 * q[1], p1 * q[0]);
  const bool charges2 = definitely_greater(p0 * q[2], p1 * q[1]);

  ActivationVerdict3d verdict;
  verdict.branch_i = charges1 && definitely_greater(p1 + delta1, 0.5);
  verdict.branch_ii = charges2 && definitely_greater(p1 + delta2, 0.5);
  verdict.branch_both =
      charges1 && charges2 && definitely_greater(p1 + delta1 + delta2, 0.5);
  // Raw printed bound; sign-unsafe when denominators cross zero, so it is
  // reported verbatim rather than interpreted.
  const double f1 = (1.0 - 2.0 * q[0]) / (1.0 - 2.0 * q[1]);
  const double f2 = (1.0 - 2.0 * q[1]) / (1.0 - 2.0 * q[2]);
  const double f3 = (1.0 - 2.0 * q[0] - 2.0 * q[1]) / (1.0 - 2.0 * q[1] - 2.0 * q[2]);
  verdict.formula_max = std::fmax(std::fmax(f1, f2), f3);
  return verdict;
}

double bath_activation_bound(const QubitBattery& battery) {
  if (!definitely_greater(battery.p0(), 0.5))
    throw PreconditionError(
        "bath activation bound needs p0 > 1/2 (battery not yet inverted)");
  return std::log(2.0 * battery.p0()) / battery.gap();
}

ThermoCurve thermo_majorization_curve(const DiagonalState& state, double beta) {
  if (!(beta >= 0.0)) throw InvalidState("thermo-majorization needs beta >= 0");
  const std::size_t d = state.dimension();
  std::vector<double> weight(d);
  for (std::size_t i = 0; i < d; ++i)
    weight[i] = std::exp(-beta * state.spectrum().level(i));
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return state.prob(a) * weight[b] > state.prob(b) * weight[a];
  });
  ThermoCurve curve;
  curve.points.reserve(d + 1);
  curve.points.emplace_back(0.0, 0.0);
  double x = 0.0, y = 0.0;
  for (std::size_t i : order) {
    x += weight[i];
    y += state.prob(i);
    curve.points.emplace_back(x, y);
  }
  return curve;
}

namespace {

std::vector<double> interior_kinks(const ThermoCurve& a, const ThermoCurve& b) {
  std::vector<double> xs;
  for (const auto* curve : {&a, &b}) {
    for (std::size_t i = 1; i + 1 < curve->points.size(); ++i)
      xs.push_back(curve->points[i].first);
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

void require_same_spectrum(const DiagonalState& p, const DiagonalState& q) {
  if (!(p.spectrum() == q.spectrum()))
    throw InvalidState("thermo-majorization comparison needs a shared spectrum");
}

}  // namespace

bool thermo_majorizes(const DiagonalState& p, const DiagonalState& q, double beta) {
  require_same_spectrum(p, q);
  const ThermoCurve cp = thermo_majorization_curve(p, beta);
  const ThermoCurve cq = thermo_majorization_curve(q, beta);
  for (double x : interior_kinks(cp, cq))
    if (!greater_or_close(cp.value_at(x), cq.value_at(x))) return false;
  return true;
}

bool strictly_thermo_majorizes(const DiagonalState& p, const DiagonalState& q,
                               double beta) {
  if (!thermo_majorizes(p, q, beta)) return false;
  const ThermoCurve cp = thermo_majorization_curve(p, beta);
  const ThermoCurve cq = thermo_majorization_curve(q, beta);
  const auto kinks = interior_kinks(cp, cq);
  if (kinks.empty()) return false;
  const double first = kinks.front();
  return definitely_greater(cp.value_at(first), cq.value_at(first));
}

}  // namespace pbl
