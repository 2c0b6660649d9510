// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pbl/core.hpp"
#include "pbl/geometry.hpp"
#include "pbl/numeric.hpp"

namespace pbl {

namespace {

constexpr std::uint64_t kStreamSalt = 0x9E3779B97F4A7C15ULL;
constexpr int kMaxRejections = 10'000'000;

}  // namespace

PassiveSampler::PassiveSampler(std::uint64_t seed, std::uint64_t stream)
    : rng_(seed ^ (kStreamSalt * (stream + 1))) {}

double PassiveSampler::unit() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double PassiveSampler::unit_open() {
  return static_cast<double>((rng_() >> 11) + 1) * 0x1.0p-53;
}

std::vector<double> PassiveSampler::sample_simplex(std::size_t d) {
  if (d < 1) throw InvalidState("simplex dimension must be positive");
  std::vector<double> spacings(d);
  double total = 0.0;
  for (double& s : spacings) {
    s = -std::log(unit_open());
    total += s;
  }
  for (double& s : spacings) s /= total;
  return spacings;
}

DiagonalState PassiveSampler::sample_passive(std::size_t d) {
  if (d < 2) throw InvalidState("passive sampling needs d >= 2");
  auto probs = sample_simplex(d);
  std::sort(probs.begin(), probs.end(), std::greater<>());
  return DiagonalState(std::move(probs), EnergySpectrum::ladder(d));
}

DiagonalState PassiveSampler::sample_active_diagonal(std::size_t d) {
  if (d < 2) throw InvalidState("active sampling needs d >= 2");
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    DiagonalState state(sample_simplex(d), EnergySpectrum::ladder(d));
    if (!is_passive(state)) return state;
  }
  throw PreconditionError("active-state rejection sampling stalled");
}

DiagonalState PassiveSampler::sample_passive_fixed_energy(std::size_t d,
                                                          double energy) {
  if (d < 2) throw InvalidState("fixed-energy sampling needs d >= 2");
  const double max_energy = static_cast<double>(d - 1) / 2.0;
  if (!(energy >= -kProbTol) || energy > max_energy + kProbTol)
    throw PreconditionError("energy outside the passive-feasible range [0, (d-1)/2]");
  if (energy <= kProbTol) return DiagonalState::vertex(1, d);
  if (energy >= max_energy - kProbTol) return DiagonalState::uniform(d);
  if (d == 2) {
    return DiagonalState({1.0 - energy, energy}, EnergySpectrum::ladder(2));
  }

  // Free coordinates q_2..q_{d-1} live in the box [0, min(1/(i+1), E/i)];
  // q_1 and q_0 are solved from the energy and normalization constraints.
  std::vector<double> upper(d, 0.0);
  for (std::size_t i = 2; i < d; ++i)
    upper[i] = std::min(1.0 / static_cast<double>(i + 1),
                        energy / static_cast<double>(i));
  std::vector<double> q(d, 0.0);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    double tail_prob = 0.0, tail_energy = 0.0;
    for (std::size_t i = 2; i < d; ++i) {
      q[i] = unit() * upper[i];
      tail_prob += q[i];
      tail_energy += static_cast<double>(i) * q[i];
    }
    q[1] = energy - tail_energy;
    q[0] = 1.0 - q[1] - tail_prob;
    bool ok = q[0] >= 0.0 && q[1] >= 0.0;
    for (std::size_t i = 0; ok && i + 1 < d; ++i) ok = q[i] >= q[i + 1];
    if (ok) return DiagonalState(q, EnergySpectrum::ladder(d));
  }
  throw PreconditionError("fixed-energy slice too thin for rejection sampling");
}

DiagonalState sample_passive(std::size_t d, std::uint64_t seed) {
  return PassiveSampler(seed).sample_passive(d);
}

DiagonalState sample_passive_fixed_energy(std::size_t d, double energy,
                                          std::uint64_t seed) {
  return PassiveSampler(seed).sample_passive_fixed_energy(d, energy);
}

DiagonalState sample_active_diagonal(std::size_t d, std::uint64_t seed) {
  return PassiveSampler(seed).sample_active_diagonal(d);
}

}  // namespace pbl
