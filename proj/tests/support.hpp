#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperknot/braid.hpp"
#include "hyperknot/cocycle.hpp"
#include "hyperknot/error.hpp"
#include "hyperknot/quandle.hpp"
#include "hyperknot/ring.hpp"

namespace hyperknot_test {

inline hyperknot::RingSpecPtr z3_ring() { return hyperknot::RingSpec::make(3, {1, 1}); }

inline hyperknot::RingSpecPtr gf4_ring() { return hyperknot::RingSpec::make(2, {1, 1, 1}); }

inline hyperknot::RingSpecPtr gf8_ring() { return hyperknot::RingSpec::make(2, {1, 1, 0, 1}); }

// T - 2 over Z_5, so the quotient is Z_5 itself with T acting as 2.
inline hyperknot::RingSpecPtr z5_t2_ring() { return hyperknot::RingSpec::make(5, {3, 1}); }

// (T + 1)^2 over Z_2: T is invertible but the quotient has zero divisors.
inline hyperknot::RingSpecPtr z2_nonfield_ring() { return hyperknot::RingSpec::make(2, {1, 0, 1}); }

inline hyperknot::Quandle dihedral3() { return hyperknot::Quandle::alexander(z3_ring()); }

inline hyperknot::Quandle gf4_quandle() { return hyperknot::Quandle::alexander(gf4_ring()); }

inline std::vector<std::vector<int>> dihedral_table(int n) {
  std::vector<std::vector<int>> op(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) op[a][b] = ((2 * b - a) % n + n) % n;
  return op;
}

// Representative non-coboundary 2-cocycle on the GF(4) quandle with Z_2 values.
inline hyperknot::Cocycle gf4_noncb() {
  return hyperknot::Cocycle(hyperknot::AbelianGroup({2}),
                            {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});
}

inline hyperknot::BraidWord trefoil() { return hyperknot::BraidWord::parse("1 1 1", 2); }

template <typename Fn>
std::optional<hyperknot::Err> thrown_code(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const hyperknot::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace hyperknot_test
