#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperknot/statesum.hpp"

namespace hyperknot {

/// Crossing count used for the free energy per crossing: the torus-closure
/// crossing number (valid only when the base word is the torus generator),
/// or the diagram upper bound (word length).
enum class CrossingMode { murasugi, diagram };

/// Where the period came from: the Burau matrix order M (period M * |A|),
/// or direct state-sum repetition when the quandle carries no ring spec.
enum class OrderSource { burau, detected };

struct SequenceRow {
  int n;
  int components;
  uint64_t word_length;
  uint64_t crossing_count;
  StateSum sum;
  std::optional<double> fepc_norm;      // unset when crossing_count = 0
  std::optional<bool> period_verified;  // unset when n + period is out of range
};

struct SequenceReport {
  CrossingMode crossing_mode;
  OrderSource order_source;
  std::optional<uint64_t> burau_order;  // M; unset for detected periods
  uint64_t group_size;
  uint64_t period;
  std::vector<SequenceRow> rows;
  std::vector<StateSum> distinct_sums;  // in first-appearance order
  double bound_constant;                // C = max defined-log norm over distinct sums
  bool periodicity_ok;
};

/// Rows for the closures of b^n, n = 1..n_max. The period is M * |A| with
/// M the Burau matrix order of b, and every in-range pair (n, n + period)
/// is compared exactly. Murasugi mode demands that b be the torus generator
/// word on its strand count.
SequenceReport analyze_sequence(const BraidWord& b, const Quandle& q, const Cocycle& phi,
                                int n_max, CrossingMode mode, uint64_t order_cap = 1000000,
                                uint64_t coloring_cap = uint64_t(1) << 20);

enum class Verdict { pass, fail };

/// PASS iff over the last `tail` rows with a crossing count (optionally
/// skipping multi-component closures): every fepc norm stays within
/// bound_constant / crossing_count, and the last norm improves on the
/// first (or both are zero). Throws InsufficientRows when fewer than
/// `tail` rows qualify.
Verdict convergence_check(const SequenceReport& report, int tail = 8, bool include_links = true);

}  // namespace hyperknot
