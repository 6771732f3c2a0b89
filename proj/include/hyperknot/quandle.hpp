#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyperknot/ring.hpp"

namespace hyperknot {

/// Outcome of one axiom check. The witness holds element indices and is
/// meaningful only when pass is false:
///   idempotency      -- (a, -1, -1) with a*a != a
///   right invertible -- (b, a, -1): column b misses value a
///   self-distributive-- (a, b, c) with (a*b)*c != (a*c)*(b*c)
struct AxiomCheck {
  bool pass = true;
  std::array<int, 3> witness{-1, -1, -1};
};

struct AxiomReport {
  AxiomCheck idempotency;
  AxiomCheck right_invertible;
  AxiomCheck self_distributive;

  bool pass() const {
    return idempotency.pass && right_invertible.pass && self_distributive.pass;
  }
  std::string describe() const;
};

/// Finite quandle as a verified operation table. op(a, b) = a * b; the
/// inverse table inv_op(a, b) is the unique x with x * b == a, materialized
/// at construction. Elements are indices 0..n-1; for Alexander quandles the
/// index order is the ring's lexicographic element order.
class Quandle {
 public:
  /// Alexander quandle on the ring elements: a * b = T a + (1 - T) b.
  static Quandle alexander(const RingSpecPtr& spec);

  /// Validates shape and axioms; throws MalformedTable or AxiomError.
  /// An attached ring spec marks the table as that ring's Alexander quandle
  /// (used downstream for Burau-based analysis); pass nullptr otherwise.
  static Quandle from_table(std::vector<std::vector<int>> op, RingSpecPtr ring = nullptr);

  /// Shape check throws MalformedTable; axiom outcomes go in the report.
  static AxiomReport check_axioms(const std::vector<std::vector<int>>& op);

  int size() const { return n_; }
  int op(int a, int b) const { return op_[a][b]; }
  int inv_op(int a, int b) const { return inv_op_[a][b]; }
  const std::vector<std::vector<int>>& table() const { return op_; }
  const RingSpecPtr& ring() const { return ring_; }

 private:
  Quandle(std::vector<std::vector<int>> op, RingSpecPtr ring);

  int n_ = 0;
  std::vector<std::vector<int>> op_;
  std::vector<std::vector<int>> inv_op_;
  RingSpecPtr ring_;
};

class AxiomError : public Error {
 public:
  explicit AxiomError(AxiomReport report)
      : Error(Err::AxiomViolation, report.describe()), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

}  // namespace hyperknot
