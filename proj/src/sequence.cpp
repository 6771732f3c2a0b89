#include "hyperknot/sequence.hpp"

#include <algorithm>
#include <string>

#include "hyperknot/error.hpp"

namespace hyperknot {

namespace {

constexpr double kRelTol = 1e-12;

bool is_torus_generator(const BraidWord& b) {
  const int n = b.strands();
  if (static_cast<int>(b.length()) != n - 1) return false;
  for (int i = 0; i < n - 1; ++i) {
    const BraidLetter& l = b.letters()[static_cast<size_t>(i)];
    if (l.index != n - 1 - i || l.sign != 1) return false;
  }
  return true;
}

// Smallest d such that every in-range pair (n, n + d) has equal sums; the
// vacuous d = n_max closes the search.
uint64_t detect_period(const std::vector<SequenceRow>& rows) {
  const size_t count = rows.size();
  for (size_t d = 1; d < count; ++d) {
    bool ok = true;
    for (size_t i = 0; i + d < count && ok; ++i) {
      ok = rows[i].sum == rows[i + d].sum;
    }
    if (ok) return d;
  }
  return count;
}

}  // namespace

SequenceReport analyze_sequence(const BraidWord& b, const Quandle& q, const Cocycle& phi,
                                int n_max, CrossingMode mode, uint64_t order_cap,
                                uint64_t coloring_cap) {
  if (n_max < 1) {
    throw Error(Err::BadParameters, "n_max must be at least 1");
  }
  if (mode == CrossingMode::murasugi && !is_torus_generator(b)) {
    throw Error(Err::BadParameters,
                "murasugi crossing counts apply only to the torus generator word");
  }

  SequenceReport report;
  report.crossing_mode = mode;
  report.group_size = phi.group().size();

  std::vector<SequenceRow>& rows = report.rows;
  rows.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const BraidWord word = b.power(n);
    const uint64_t crossings =
        mode == CrossingMode::murasugi
            ? static_cast<uint64_t>(torus_crossing_number(b.strands(), n))
            : word.length();
    SequenceRow row{n,
                    word.components(),
                    word.length(),
                    crossings,
                    cjkls_state_sum(q, word, phi, coloring_cap),
                    std::nullopt,
                    std::nullopt};
    if (row.crossing_count >= 1) {
      row.fepc_norm = defined_norm(free_energy_per_crossing(free_energy(row.sum),
                                                            row.crossing_count));
    }
    rows.push_back(std::move(row));
  }

  if (q.ring()) {
    report.order_source = OrderSource::burau;
    const uint64_t m = matrix_order(burau_matrix(b, q.ring()), order_cap);
    report.burau_order = m;
    if (m > (uint64_t(1) << 62) / report.group_size) {
      throw Error(Err::TooLarge, "period M * |A| exceeds 2^62");
    }
    report.period = m * report.group_size;
  } else {
    report.order_source = OrderSource::detected;
    report.period = detect_period(rows);
  }

  report.periodicity_ok = true;
  for (size_t i = 0; i + report.period < rows.size(); ++i) {
    const bool equal = rows[i].sum == rows[i + report.period].sum;
    rows[i].period_verified = equal;
    if (!equal) report.periodicity_ok = false;
  }

  report.bound_constant = 0.0;
  for (const SequenceRow& row : rows) {
    const bool seen = std::any_of(report.distinct_sums.begin(), report.distinct_sums.end(),
                                  [&](const StateSum& s) { return s == row.sum; });
    if (!seen) {
      report.distinct_sums.push_back(row.sum);
      report.bound_constant =
          std::max(report.bound_constant, defined_norm(free_energy(row.sum)));
    }
  }
  return report;
}

Verdict convergence_check(const SequenceReport& report, int tail, bool include_links) {
  if (tail < 1) {
    throw Error(Err::BadParameters, "tail must be at least 1");
  }
  std::vector<const SequenceRow*> eligible;
  for (const SequenceRow& row : report.rows) {
    if (row.crossing_count < 1) continue;
    if (!include_links && row.components != 1) continue;
    eligible.push_back(&row);
  }
  if (eligible.size() < static_cast<size_t>(tail)) {
    throw Error(Err::InsufficientRows, "convergence tail needs " + std::to_string(tail) +
                                           " rows with crossings, got " +
                                           std::to_string(eligible.size()));
  }
  const size_t start = eligible.size() - static_cast<size_t>(tail);
  for (size_t i = start; i < eligible.size(); ++i) {
    const SequenceRow& row = *eligible[i];
    const double bound =
        report.bound_constant / static_cast<double>(row.crossing_count);
    if (*row.fepc_norm > bound * (1.0 + kRelTol)) return Verdict::fail;
  }
  const double first = *eligible[start]->fepc_norm;
  const double last = *eligible.back()->fepc_norm;
  if (last < first || (last == 0.0 && first == 0.0)) return Verdict::pass;
  return Verdict::fail;
}

}  // namespace hyperknot
