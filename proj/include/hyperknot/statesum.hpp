#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperknot/cocycle.hpp"
#include "hyperknot/coloring.hpp"

namespace hyperknot {

/// The invariant vector: counts[g] colorings accumulate weight g, with
/// coordinates in the group's lexicographic element order. The counts sum
/// to the coloring count, and the identity coordinate is at least the
/// quandle size (constant colorings weigh zero).
struct StateSum {
  AbelianGroup group;
  std::vector<uint64_t> counts;

  friend bool operator==(const StateSum& a, const StateSum& b) {
    return a.group == b.group && a.counts == b.counts;
  }
  friend bool operator!=(const StateSum& a, const StateSum& b) { return !(a == b); }
};

/// Sums over all colorings of the closure of w; each coloring contributes
/// to the coordinate given by the signed sum of phi over its trace.
StateSum cjkls_state_sum(const Quandle& q, const BraidWord& w, const Cocycle& phi,
                         uint64_t cap = uint64_t(1) << 20);

/// Coordinatewise natural log of the counts; nullopt marks a zero count.
using FreeEnergy = std::vector<std::optional<double>>;

FreeEnergy free_energy(const StateSum& z);

/// Defined coordinates divided by the crossing count; throws ZeroCrossings
/// when crossings = 0.
FreeEnergy free_energy_per_crossing(const FreeEnergy& f, uint64_t crossings);

/// Euclidean norm over the defined coordinates only.
double defined_norm(const FreeEnergy& f);

}  // namespace hyperknot
