#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperknot/quandle.hpp"

namespace hyperknot {

/// Finite abelian group Z_{q1} x ... x Z_{qk}, every factor order >= 2.
/// Elements are k-tuples under componentwise addition, handled as
/// mixed-radix indices with the first factor most significant; index order
/// is therefore lexicographic tuple order, the StateSum coordinate order.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<uint64_t> orders);

  const std::vector<uint64_t>& orders() const { return orders_; }
  size_t rank() const { return orders_.size(); }
  uint64_t size() const { return size_; }

  std::vector<uint64_t> decode(uint64_t element) const;
  uint64_t encode(const std::vector<uint64_t>& tuple) const;

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t sub(uint64_t a, uint64_t b) const;

  friend bool operator==(const AbelianGroup& x, const AbelianGroup& y) {
    return x.orders_ == y.orders_;
  }
  friend bool operator!=(const AbelianGroup& x, const AbelianGroup& y) { return !(x == y); }

 private:
  uint64_t checked(uint64_t element) const;

  std::vector<uint64_t> orders_;
  uint64_t size_;
};

/// Square table of group elements: phi[a][b] is the weight a positive
/// crossing with color pair (a, b) contributes, written additively.
class Cocycle {
 public:
  Cocycle(AbelianGroup group, std::vector<std::vector<uint64_t>> phi);

  static Cocycle zero(AbelianGroup group, int n);

  const AbelianGroup& group() const { return group_; }
  int size() const { return static_cast<int>(phi_.size()); }
  uint64_t at(int a, int b) const {
    return phi_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  const std::vector<std::vector<uint64_t>>& table() const { return phi_; }

  friend bool operator==(const Cocycle& x, const Cocycle& y) {
    return x.group_ == y.group_ && x.phi_ == y.phi_;
  }
  friend bool operator!=(const Cocycle& x, const Cocycle& y) { return !(x == y); }

 private:
  AbelianGroup group_;
  std::vector<std::vector<uint64_t>> phi_;
};

/// First failed condition in scan order. b = c = -1 marks a diagonal
/// violation phi[a][a] != 0; otherwise (a, b, c) is the failing triple of
///   phi[a][b] + phi[a*b][c] = phi[a][c] + phi[a*c][b*c].
struct CocycleViolation {
  int a;
  int b;
  int c;

  bool diagonal() const { return b < 0; }
  std::string describe() const;
};

/// Scans diagonal cells, then all triples, both in ascending index order.
std::optional<CocycleViolation> cocycle_check(const Quandle& q, const Cocycle& phi);

/// The coboundary of gamma: phi[a][b] = gamma[a] - gamma[a*b]. The result
/// always passes cocycle_check.
Cocycle coboundary(const Quandle& q, const AbelianGroup& group,
                   const std::vector<uint64_t>& gamma);

struct SearchLimits {
  int max_quandle_size = 6;
  uint64_t max_group_size = 8;
  uint64_t max_solutions = 65536;
};

/// The full solution set of the two cocycle conditions over the group,
/// solved as a homogeneous linear system per cyclic factor. Deduplicated
/// and sorted by flattened table, so the zero cocycle comes first. Throws
/// TooLarge when the instance or the solution set exceeds the limits.
std::vector<Cocycle> search_cocycles(const Quandle& q, const AbelianGroup& group,
                                     const SearchLimits& limits = {});

/// Whether phi is the coboundary of some gamma, decided by scanning all
/// |A|^n maps. Throws SearchSpaceTooLarge past the cap.
bool is_coboundary(const Quandle& q, const Cocycle& phi, uint64_t cap = uint64_t(1) << 20);

}  // namespace hyperknot
