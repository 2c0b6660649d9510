// Copyright 2026 The pbl Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbl/multicopy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "pbl/charging.hpp"
#include "pbl/geometry.hpp"
#include "pbl/numeric.hpp"

namespace pbl {

namespace {

constexpr std::uint64_t kTableCap = 2'000'000;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Tie slack for log-population comparisons: a log gap of 1e-12 is a relative
// population gap of 1e-12, matching the linear-domain convention while
// staying meaningful for deep copy powers whose products underflow doubles.
constexpr double kLogTieTol = 1e-12;

void require_multicopy_inputs(const QubitBattery& battery,
                              const DiagonalState& charger, int n) {
  if (n < 1) throw InvalidState("copy count must be at least 1");
  if (!battery.passive())
    throw PreconditionError("multi-copy charging is stated for passive batteries");
  if (battery.gap() != 1.0)
    throw PreconditionError("multi-copy charging assumes a unit battery gap");
  if (!charger.spectrum().is_ladder())
    throw PreconditionError("multi-copy charging needs a ladder charger");
  if (!is_passive(charger))
    throw PreconditionError("multi-copy charging is stated for passive chargers");
}

std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw PreconditionError("multiplicity overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

// Visit every exponent vector over d levels summing to n, reporting the
// ladder energy and the log per-basis-state probability.
template <typename Visit>
void for_each_multiset(std::size_t d, int n, const std::vector<double>& log_q,
                       Visit&& visit) {
  std::vector<unsigned> exponents(d, 0);
  const std::function<void(std::size_t, int, std::uint64_t, double)> recurse =
      [&](std::size_t level, int remaining, std::uint64_t energy, double log_p) {
        if (level + 1 == d) {
          exponents[level] = static_cast<unsigned>(remaining);
          visit(exponents, energy + static_cast<std::uint64_t>(remaining) * level,
                log_p + remaining * log_q[level]);
          return;
        }
        for (int a = 0; a <= remaining; ++a) {
          exponents[level] = static_cast<unsigned>(a);
          recurse(level + 1, remaining - a,
                  energy + static_cast<std::uint64_t>(a) * level,
                  log_p + a * log_q[level]);
        }
      };
  recurse(0, n, 0, 0.0);
}

std::vector<double> log_probs(const DiagonalState& charger) {
  std::vector<double> log_q(charger.dimension());
  for (std::size_t i = 0; i < charger.dimension(); ++i)
    log_q[i] = charger.prob(i) > 0.0 ? std::log(charger.prob(i)) : -kInf;
  return log_q;
}

}  // namespace

std::uint64_t composite_table_size(std::size_t d, int n) {
  if (d == 0 || n < 1) throw InvalidState("composite table needs d >= 1, n >= 1");
  unsigned __int128 size = 1;
  for (std::size_t i = 1; i < d; ++i) {
    size = size * (static_cast<std::uint64_t>(n) + i) / i;
    if (size > kTableCap)
      throw PreconditionError("composite table exceeds the 2e6 multiset cap");
  }
  return static_cast<std::uint64_t>(size);
}

CompositeLevelTable composite_levels(const DiagonalState& charger, int n) {
  if (n < 1) throw InvalidState("copy count must be at least 1");
  if (!charger.spectrum().is_ladder())
    throw PreconditionError("composite tables are built over ladder chargers");
  const std::size_t d = charger.dimension();
  composite_table_size(d, n);

  CompositeLevelTable table;
  table.base_dimension = d;
  table.copies = n;
  const auto log_q = log_probs(charger);
  for_each_multiset(d, n, log_q,
                    [&](const std::vector<unsigned>& exponents, std::uint64_t energy,
                        double /*log_p*/) {
                      CompositeEntry entry;
                      entry.exponents = exponents;
                      entry.total_energy = static_cast<double>(energy);
                      entry.probability = 1.0;
                      std::uint64_t remaining = static_cast<std::uint64_t>(n);
                      std::uint64_t mult = 1;
                      for (std::size_t i = 0; i < d; ++i) {
                        const std::uint64_t c = binomial_checked(remaining, exponents[i]);
                        unsigned __int128 wide = static_cast<unsigned __int128>(mult) * c;
                        if (wide > std::numeric_limits<std::uint64_t>::max())
                          throw PreconditionError("multiplicity overflows 64 bits");
                        mult = static_cast<std::uint64_t>(wide);
                        remaining -= exponents[i];
                        entry.probability *=
                            std::pow(charger.prob(i), static_cast<int>(exponents[i]));
                      }
                      entry.multiplicity = mult;
                      table.entries.push_back(std::move(entry));
                    });
  return table;
}

bool charging_possible_n(const QubitBattery& battery, const DiagonalState& charger,
                         int n) {
  require_multicopy_inputs(battery, charger, n);
  const std::size_t d = charger.dimension();
  composite_table_size(d, n);

  const std::size_t max_energy = static_cast<std::size_t>(n) * (d - 1);
  std::vector<double> min_log(max_energy + 1, kInf);
  std::vector<double> max_log(max_energy + 1, -kInf);
  const auto log_q = log_probs(charger);
  for_each_multiset(d, n, log_q,
                    [&](const std::vector<unsigned>&, std::uint64_t energy, double lp) {
                      min_log[energy] = std::min(min_log[energy], lp);
                      max_log[energy] = std::max(max_log[energy], lp);
                    });

  const double lp0 = std::log(battery.p0());
  const double lp1 = battery.p1() > 0.0 ? std::log(battery.p1()) : -kInf;
  for (std::size_t e = 0; e < max_energy; ++e) {
    const double upper = lp0 + max_log[e + 1];  // candidate |0, v> population
    const double lower = lp1 + min_log[e];      // candidate |1, u> population
    if (std::isinf(upper) || std::isinf(lower)) {
      if (upper > lower) return true;
      continue;
    }
    if (upper - lower > kLogTieTol) return true;
  }
  return false;
}

MinCopiesResult min_copies_to_charge(const QubitBattery& battery,
                                     const DiagonalState& charger, int n_max) {
  if (n_max < 1) throw InvalidState("n_max must be at least 1");
  require_multicopy_inputs(battery, charger, 1);
  if (!definitely_greater(battery.p0(), battery.p1()))
    throw PreconditionError("minimal-copy search needs a strictly passive battery");

  if (charging_possible_n(battery, charger, 1))
    return {1, CopySearchOutcome::found};
  // A charger that is exactly Gibbs and fails the single-copy test never
  // charges: its powers keep one ratio per unit energy.
  if (gibbs_parameter(charger).has_value())
    return {std::nullopt, CopySearchOutcome::thermal_no_go};
  for (int n = 2; n <= n_max; ++n) {
    if (charging_possible_n(battery, charger, n))
      return {n, CopySearchOutcome::found};
  }
  return {std::nullopt, CopySearchOutcome::budget_exhausted};
}

std::pair<double, double> eq78_ratio_sequences(const DiagonalState& charger,
                                               std::size_t k, int r) {
  const std::size_t d = charger.dimension();
  if (k < 1 || k + 2 > d)
    throw InvalidState("ratio sequences need an interior level 1 <= k <= d-2");
  if (r < 0) throw InvalidState("exponent r must be nonnegative");
  for (double q : charger.probs())
    if (q <= 0.0)
      throw PreconditionError("ratio sequences need strictly positive populations");
  const auto& q = charger.probs();
  const double geometric = q[k - 1] * q[k + 1] / (q[k] * q[k]);
  const double half_r = static_cast<double>(r) / 2.0;
  return {(q[0] / q[1]) * std::pow(geometric, half_r),
          (q[1] / q[2]) * std::pow(1.0 / geometric, half_r)};
}

bool free_set_membership(const QubitBattery& battery, const DiagonalState& charger,
                         int n) {
  if (n < 1) throw InvalidState("free-set order must be at least 1");
  for (int m = 1; m <= n; ++m)
    if (charging_possible_n(battery, charger, m)) return false;
  return true;
}

double optimal_charge_composite(const QubitBattery& battery,
                                const DiagonalState& charger, int n) {
  require_multicopy_inputs(battery, charger, n);
  const auto table = composite_levels(charger, n);
  const std::size_t d = charger.dimension();
  const std::size_t max_energy = static_cast<std::size_t>(n) * (d - 1);

  // Entries grouped by composite energy; each joint subspace at total energy
  // m mixes ground slots (composite energy m) with excited ones (m - 1).
  std::vector<std::vector<const CompositeEntry*>> by_energy(max_energy + 1);
  for (const auto& entry : table.entries)
    by_energy[static_cast<std::size_t>(entry.total_energy)].push_back(&entry);

  double excited_total = 0.0;
  for (std::size_t m = 0; m <= max_energy + 1; ++m) {
    std::vector<std::pair<double, std::uint64_t>> slots;  // (population, count)
    std::uint64_t excited_slots = 0;
    if (m <= max_energy) {
      for (const auto* e : by_energy[m])
        slots.emplace_back(battery.p0() * e->probability, e->multiplicity);
    }
    if (m >= 1) {
      for (const auto* e : by_energy[m - 1]) {
        slots.emplace_back(battery.p1() * e->probability, e->multiplicity);
        excited_slots += e->multiplicity;
      }
    }
    if (excited_slots == 0) continue;
    std::sort(slots.begin(), slots.end(), std::greater<>());
    std::uint64_t need = excited_slots;
    for (const auto& [value, count] : slots) {
      const std::uint64_t take = std::min(count, need);
      excited_total += value * static_cast<double>(take);
      need -= take;
      if (need == 0) break;
    }
  }
  return excited_total;
}

}  // namespace pbl
