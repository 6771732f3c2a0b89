#pragma once

#include <cstdint>
#include <vector>

namespace hyperknot::internal {

// Every x in (Z_m)^n with A x = rhs (mod m), duplicate-free, m >= 2.
// Solved per prime power of m (Gaussian elimination mod p, then digit
// lifting) and combined by CRT. Throws TooLarge when any intermediate or
// final solution list would exceed max_solutions.
std::vector<std::vector<uint64_t>> solve_linear_mod(const std::vector<std::vector<int64_t>>& a,
                                                    const std::vector<int64_t>& rhs, uint64_t m,
                                                    uint64_t max_solutions);

}  // namespace hyperknot::internal
