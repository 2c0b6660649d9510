// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pbl {

/// Equality slack for probability bookkeeping (normalization, partial sums,
/// witness thresholds). Strict inequalities in theorem conditions are
/// evaluated beyond this slack; anything closer counts as a tie.
inline constexpr double kProbTol = 1e-12;

/// Absolute width used when bucketing non-integer energy levels into
/// degenerate subspaces.
inline constexpr double kDegeneracyTol = 1e-9;

/// Relative agreement required between adjacent population ratios for a
/// state to count as Gibbs.
inline constexpr double kGibbsRatioTol = 1e-9;

/// Thrown when an input violates a type invariant (bad probability vector,
/// bad spectrum, dimension mismatch).
struct InvalidState : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when inputs are valid but an operation's premise does not hold.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// a exceeds b beyond the tie slack. The slack scales with the operands so
/// that deep multi-copy population products (which can sit far below 1)
/// compare by ratio rather than drowning in an absolute cutoff.
inline bool definitely_greater(double a, double b, double tol = kProbTol) {
  if (std::isinf(a) || std::isinf(b)) return a > b;
  return a - b > tol * std::max(std::abs(a), std::abs(b));
}

/// Non-strict comparison under the same tie convention.
inline bool greater_or_close(double a, double b, double tol = kProbTol) {
  return !definitely_greater(b, a, tol);
}

/// |a - b| within slack; floored at absolute tol for values of order one.
inline bool approx_equal(double a, double b, double tol = kProbTol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace pbl
