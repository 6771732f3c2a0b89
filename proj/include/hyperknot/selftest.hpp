#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperknot {

struct SelftestConfig {
  uint64_t seed = 0;
  int words = 200;             // cases per equivalence property and setup
  int triviality_words = 100;  // 1-component closures per coboundary property
};

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

struct SelftestResult {
  std::vector<PropertyResult> properties;

  bool pass() const;
  int total_cases() const;
  int total_failures() const;
};

/// Runs the seeded randomized suite: closure-move invariance of the state
/// sum (braid relation, far commutation, conjugation, stabilization, R2
/// insertion), coloring-oracle agreement, coboundary triviality, and
/// cohomology invariance, over dihedral-3 with Z3 and the GF(4) Alexander
/// quandle with Z2, under zero, coboundary, and non-coboundary cocycles.
SelftestResult run_selftest(const SelftestConfig& config = {});

}  // namespace hyperknot
