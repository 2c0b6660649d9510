// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "pbl/numeric.hpp"

namespace pbl {

namespace {

void check_probabilities(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw InvalidState("probabilities must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbTol)
    throw InvalidState("probabilities must sum to one within 1e-12");
}

}  // namespace

DiagonalState::DiagonalState(std::vector<double> probs, EnergySpectrum spectrum)
    : probs_(std::move(probs)), spectrum_(std::move(spectrum)) {
  if (probs_.size() != spectrum_.dimension())
    throw InvalidState("probability vector and spectrum lengths differ");
  check_probabilities(probs_);
}

DiagonalState DiagonalState::uniform(std::size_t d) {
  if (d == 0) throw InvalidState("dimension must be positive");
  return DiagonalState(std::vector<double>(d, 1.0 / static_cast<double>(d)),
                       EnergySpectrum::ladder(d));
}

DiagonalState DiagonalState::gibbs(double beta, std::size_t d) {
  if (d == 0) throw InvalidState("dimension must be positive");
  if (!(beta >= 0.0)) throw InvalidState("Gibbs states need beta >= 0");
  std::vector<double> probs(d, 0.0);
  if (std::isinf(beta)) {
    probs[0] = 1.0;
  } else {
    const double x = std::exp(-beta);
    double z = 0.0, w = 1.0;
    for (std::size_t i = 0; i < d; ++i, w *= x) {
      probs[i] = w;
      z += w;
    }
    for (double& p : probs) p /= z;
  }
  return DiagonalState(std::move(probs), EnergySpectrum::ladder(d));
}

DiagonalState DiagonalState::vertex(std::size_t j, std::size_t d) {
  if (j < 1 || j > d) throw InvalidState("vertex index must lie in [1, d]");
  std::vector<double> probs(d, 0.0);
  std::fill_n(probs.begin(), j, 1.0 / static_cast<double>(j));
  return DiagonalState(std::move(probs), EnergySpectrum::ladder(d));
}

QubitBattery::QubitBattery(double p0, double p1, double gap)
    : p0_(p0), p1_(p1), gap_(gap) {
  if (!(p0 >= 0.0) || !(p1 >= 0.0))
    throw InvalidState("battery populations must be nonnegative");
  if (std::abs(p0 + p1 - 1.0) > kProbTol)
    throw InvalidState("battery populations must sum to one within 1e-12");
  if (!(gap > 0.0) || !std::isfinite(gap))
    throw InvalidState("battery gap must be positive and finite");
}

bool QubitBattery::passive() const { return greater_or_close(p0_, p1_); }

double QubitBattery::inverse_temperature() const {
  if (p1_ == 0.0) return std::numeric_limits<double>::infinity();
  return std::log(p0_ / p1_) / gap_;
}

DiagonalState QubitBattery::as_state() const {
  return DiagonalState({p0_, p1_}, EnergySpectrum({0.0, gap_}));
}

JointDiagonalState::JointDiagonalState(std::vector<JointEntry> entries)
    : entries_(std::move(entries)) {}

JointDiagonalState JointDiagonalState::product(const QubitBattery& battery,
                                               const DiagonalState& charger) {
  const std::size_t d = charger.dimension();
  std::vector<JointEntry> entries;
  entries.reserve(2 * d);
  const double levels[2] = {0.0, battery.gap()};
  const double pops[2] = {battery.p0(), battery.p1()};
  for (int b = 0; b < 2; ++b) {
    for (std::size_t k = 0; k < d; ++k) {
      entries.push_back({b, k, levels[b] + charger.spectrum().level(k),
                         pops[b] * charger.prob(k)});
    }
  }
  return JointDiagonalState(std::move(entries));
}

double JointDiagonalState::excited_population() const {
  double total = 0.0;
  for (const auto& e : entries_)
    if (e.battery_level == 1) total += e.probability;
  return total;
}

std::vector<std::vector<std::size_t>> JointDiagonalState::energy_subspaces(
    double tol) const {
  std::vector<std::size_t> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return entries_[i].total_energy < entries_[j].total_energy;
  });
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t idx : order) {
    if (groups.empty() ||
        entries_[idx].total_energy - entries_[groups.back().back()].total_energy > tol) {
      groups.emplace_back();
    }
    groups.back().push_back(idx);
  }
  return groups;
}

}  // namespace pbl
