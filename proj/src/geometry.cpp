// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pbl/numeric.hpp"

namespace pbl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_sorted(const DiagonalState& state) {
  if (!state.spectrum().sorted())
    throw PreconditionError("operation requires a non-decreasing spectrum");
}

void require_non_degenerate(const DiagonalState& state) {
  require_sorted(state);
  if (!state.spectrum().non_degenerate())
    throw PreconditionError(
        "polytope operations are defined for non-degenerate spectra only");
}

}  // namespace

Witness::Witness(Kind kind, std::size_t dimension, std::size_t index)
    : kind_(kind), dimension_(dimension), index_(index) {}

Witness Witness::trivial(std::size_t dimension) {
  if (dimension < 1) throw InvalidState("witness dimension must be positive");
  return Witness(Kind::trivial, dimension, dimension - 1);
}

Witness Witness::adjacent_pair(std::size_t dimension, std::size_t i) {
  if (i + 1 >= dimension)
    throw InvalidState("adjacent-pair witness index out of range");
  return Witness(Kind::adjacent_pair, dimension, i);
}

std::vector<double> Witness::diagonal() const {
  std::vector<double> diag(dimension_, 0.0);
  diag[index_] = 1.0;
  if (kind_ == Kind::adjacent_pair) diag[index_ + 1] = -1.0;
  return diag;
}

std::string Witness::label() const {
  if (kind_ == Kind::trivial) return "W_0";
  return "W_" + std::to_string(index_ + 1) + std::to_string(index_ + 2);
}

bool is_passive(const DiagonalState& state) {
  require_sorted(state);
  const auto& q = state.probs();
  const auto& eps = state.spectrum().levels();
  // Walk the degenerate blocks: each block's largest population must not
  // exceed the previous block's smallest.
  double prev_min = kInf;
  std::size_t i = 0;
  while (i < q.size()) {
    std::size_t j = i;
    double block_min = q[i], block_max = q[i];
    while (j + 1 < q.size() && eps[j + 1] - eps[i] <= kDegeneracyTol) {
      ++j;
      block_min = std::min(block_min, q[j]);
      block_max = std::max(block_max, q[j]);
    }
    if (definitely_greater(block_max, prev_min)) return false;
    prev_min = block_min;
    i = j + 1;
  }
  return true;
}

std::optional<double> gibbs_parameter(const DiagonalState& state) {
  require_non_degenerate(state);
  if (!is_passive(state))
    throw PreconditionError("gibbs_parameter requires a passive state");
  const auto& q = state.probs();
  const auto& eps = state.spectrum().levels();
  const std::size_t d = q.size();
  if (d == 1) return 0.0;
  if (q[0] >= 1.0 - kProbTol) return kInf;  // pure ground state
  for (double qi : q)
    if (qi <= 0.0) return std::nullopt;  // any other zero breaks the ratio chain
  double beta_ref = 0.0;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double beta_k = std::log(q[k] / q[k + 1]) / (eps[k + 1] - eps[k]);
    if (k == 0) {
      beta_ref = beta_k;
    } else if (std::abs(beta_k - beta_ref) >
               kGibbsRatioTol * std::max(1.0, std::abs(beta_ref))) {
      return std::nullopt;
    }
  }
  return beta_ref;
}

std::vector<double> virtual_temperatures(const DiagonalState& state) {
  require_sorted(state);
  if (!is_passive(state))
    throw PreconditionError("virtual temperatures are defined for passive states");
  const auto& q = state.probs();
  const auto& eps = state.spectrum().levels();
  std::vector<double> betas;
  betas.reserve(q.size() - 1);
  for (std::size_t k = 0; k + 1 < q.size(); ++k) {
    const double gap = eps[k + 1] - eps[k];
    if (gap <= kDegeneracyTol) {
      if (!approx_equal(q[k], q[k + 1]))
        throw PreconditionError(
            "degenerate adjacent levels with unequal populations have no "
            "virtual temperature");
      betas.push_back(0.0);
    } else if (q[k + 1] <= 0.0) {
      betas.push_back(kInf);
    } else {
      betas.push_back(std::log(q[k] / q[k + 1]) / gap);
    }
  }
  return betas;
}

VertexSet polytope_vertices(std::size_t d) {
  if (d < 2) throw PreconditionError("the passive polytope needs d >= 2");
  VertexSet set;
  set.dimension = d;
  set.vertices.reserve(d);
  for (std::size_t j = 1; j <= d; ++j) {
    std::vector<double> v(d, 0.0);
    std::fill_n(v.begin(), j, 1.0 / static_cast<double>(j));
    set.vertices.push_back(std::move(v));
  }
  return set;
}

std::vector<double> vertex_decomposition(const DiagonalState& state) {
  require_non_degenerate(state);
  if (!is_passive(state))
    throw PreconditionError("vertex decomposition requires a passive state");
  const auto& q = state.probs();
  const std::size_t d = q.size();
  std::vector<double> weights(d);
  for (std::size_t j = 1; j <= d; ++j) {
    const double next = (j < d) ? q[j] : 0.0;
    weights[j - 1] = static_cast<double>(j) * (q[j - 1] - next);
  }
  return weights;
}

double evaluate_witness(const Witness& witness, const DiagonalState& state) {
  if (witness.dimension() != state.dimension())
    throw InvalidState("witness and state dimensions differ");
  double value = state.prob(witness.index());
  if (witness.kind() == Witness::Kind::adjacent_pair)
    value -= state.prob(witness.index() + 1);
  return value;
}

std::vector<Witness> witness_set(std::size_t d) {
  if (d < 2) throw PreconditionError("witness family needs d >= 2");
  std::vector<Witness> witnesses;
  witnesses.reserve(d);
  witnesses.push_back(Witness::trivial(d));
  for (std::size_t i = 0; i + 1 < d; ++i)
    witnesses.push_back(Witness::adjacent_pair(d, i));
  return witnesses;
}

std::optional<Witness> detect_active(const DiagonalState& state) {
  require_non_degenerate(state);
  // Violation means q_{i+1} exceeds q_i beyond the tie slack, the exact
  // complement of the passivity check, so facet states stay passive.
  for (std::size_t i = 0; i + 1 < state.dimension(); ++i) {
    if (definitely_greater(state.prob(i + 1), state.prob(i)))
      return Witness::adjacent_pair(state.dimension(), i);
  }
  // The trivial witness only guards q_{d-1} >= 0, which the type enforces.
  return std::nullopt;
}

}  // namespace pbl
