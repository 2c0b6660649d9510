// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbl/state.hpp"

namespace pbl {

/// Diagonal witness operator for active (non-passive) diagonal states.
///
/// Two kinds exist: the trivial facet W_0 (entry +1 at the top level) and
/// the adjacent-pair facets W_{i,i+1} (+1 at level i, -1 at level i+1).
/// A state is active iff some witness evaluates below zero on it.
class Witness {
 public:
  enum class Kind { trivial, adjacent_pair };

  static Witness trivial(std::size_t dimension);
  /// 0-indexed i in [0, d-2]: +1 at i, -1 at i+1.
  static Witness adjacent_pair(std::size_t dimension, std::size_t i);

  Kind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  /// Position of the +1 entry (d-1 for the trivial witness).
  std::size_t index() const { return index_; }

  std::vector<double> diagonal() const;
  /// "W_0" for the trivial witness, "W_{i,i+1}" with 1-indexed levels otherwise.
  std::string label() const;

 private:
  Witness(Kind kind, std::size_t dimension, std::size_t index);
  Kind kind_;
  std::size_t dimension_;
  std::size_t index_;
};

/// The d extreme points e_1..e_d of the passive polytope: e_j is uniform on
/// the lowest j levels and zero above.
struct VertexSet {
  std::size_t dimension;
  std::vector<std::vector<double>> vertices;
};

/// Populations non-increasing wherever energy strictly increases. Degenerate
/// levels impose no constraint among themselves, but ordering across a
/// degenerate block is still checked against its neighbours.
bool is_passive(const DiagonalState& state);

/// Inverse temperature beta >= 0 with q_i proportional to exp(-beta eps_i),
/// if all per-gap ratios agree within relative tolerance 1e-9.
/// The pure ground state reports +infinity, the uniform state 0; any other
/// vanishing population means the state is not Gibbs (nullopt).
/// Requires a passive state on a non-degenerate sorted spectrum.
std::optional<double> gibbs_parameter(const DiagonalState& state);

/// Per-gap inverse temperatures beta_{k+1} = ln(q_k/q_{k+1})/(eps_{k+1}-eps_k),
/// length d-1. Vanishing denominatorless populations give +infinity entries.
/// Degenerate adjacent levels with unequal populations are an error; with
/// equal populations the gap reports 0 (it imposes no constraint).
std::vector<double> virtual_temperatures(const DiagonalState& state);

/// Extreme points of the d-dimensional passive polytope (d >= 2).
VertexSet polytope_vertices(std::size_t d);

/// Barycentric weights c_j = j (q_{j-1} - q_j) of a passive state over the
/// vertices e_1..e_d (1-indexed j, q_d = 0). Nonnegative, sum to one, and
/// reconstruct the state exactly. Requires a non-degenerate sorted spectrum.
std::vector<double> vertex_decomposition(const DiagonalState& state);

/// Tr(W rho) = sum_i w_i q_i for diagonal rho.
double evaluate_witness(const Witness& witness, const DiagonalState& state);

/// All facet witnesses of the d-dimensional polytope: W_0 plus the d-1
/// adjacent pairs.
std::vector<Witness> witness_set(std::size_t d);

/// A violated witness (value < -1e-12) if the state is active; nullopt iff
/// passive. Requires a non-degenerate sorted spectrum (the facet witnesses
/// are only valid there).
std::optional<Witness> detect_active(const DiagonalState& state);

}  // namespace pbl
