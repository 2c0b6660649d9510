// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pbl/numeric.hpp"

namespace pbl {

double mean_energy(const DiagonalState& state) {
  double total = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i)
    total += state.prob(i) * state.spectrum().level(i);
  return total;
}

double shannon_entropy(const DiagonalState& state) {
  double s = 0.0;
  for (double q : state.probs())
    if (q > 0.0) s -= q * std::log(q);
  return s;
}

double shannon_entropy(const QubitBattery& battery) {
  double s = 0.0;
  for (double p : {battery.p0(), battery.p1()})
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

DiagonalState tensor(const DiagonalState& a, const DiagonalState& b) {
  const std::size_t n = a.dimension() * b.dimension();
  if (n > 2'000'000)
    throw PreconditionError("tensor product exceeds the 2e6 level cap");
  std::vector<double> probs, levels;
  probs.reserve(n);
  levels.reserve(n);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      probs.push_back(a.prob(i) * b.prob(j));
      levels.push_back(a.spectrum().level(i) + b.spectrum().level(j));
    }
  }
  return DiagonalState(std::move(probs), EnergySpectrum(std::move(levels)));
}

bool majorizes(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size())
    throw InvalidState("majorization requires equal dimensions");
  std::vector<double> ps = p, qs = q;
  std::sort(ps.begin(), ps.end(), std::greater<>());
  std::sort(qs.begin(), qs.end(), std::greater<>());
  double sp = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    sp += ps[i];
    sq += qs[i];
    if (definitely_greater(sq, sp)) return false;
  }
  return true;
}

bool majorizes(const DiagonalState& p, const DiagonalState& q) {
  return majorizes(p.probs(), q.probs());
}

}  // namespace pbl
