#include "modsolve.hpp"

#include <string>
#include <utility>

#include "hyperknot/error.hpp"

namespace hyperknot::internal {

namespace {

uint64_t mod_pos(int64_t v, uint64_t m) {
  int64_t r = v % static_cast<int64_t>(m);
  if (r < 0) r += static_cast<int64_t>(m);
  return static_cast<uint64_t>(r);
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// g = gcd(a, b) and x with a x = g (mod b), for the CRT coefficients.
std::pair<uint64_t, uint64_t> inverse_mod(uint64_t a, uint64_t m) {
  int64_t old_r = static_cast<int64_t>(a % m), r = static_cast<int64_t>(m);
  int64_t old_s = 1, s = 0;
  while (r != 0) {
    int64_t quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  return {static_cast<uint64_t>(old_r), mod_pos(old_s, m)};
}

struct PrimePower {
  uint64_t p;
  uint64_t e;
  uint64_t pe;
};

std::vector<PrimePower> factorize(uint64_t m) {
  std::vector<PrimePower> out;
  for (uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    uint64_t e = 0, pe = 1;
    while (m % p == 0) {
      m /= p;
      ++e;
      pe *= p;
    }
    out.push_back({p, e, pe});
  }
  if (m > 1) out.push_back({m, 1, m});
  return out;
}

void guard(size_t count, uint64_t max_solutions) {
  if (count > max_solutions) {
    throw Error(Err::TooLarge,
                "solution set exceeds " + std::to_string(max_solutions) + " vectors");
  }
}

// All solutions of A x = rhs over GF(p) by reduced row echelon form.
std::vector<std::vector<uint64_t>> solve_prime(const std::vector<std::vector<int64_t>>& a,
                                               const std::vector<int64_t>& rhs, uint64_t p,
                                               uint64_t max_solutions) {
  const size_t rows = a.size();
  const size_t cols = a[0].size();
  std::vector<std::vector<uint64_t>> aug(rows, std::vector<uint64_t>(cols + 1, 0));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) aug[r][c] = mod_pos(a[r][c], p);
    aug[r][cols] = mod_pos(rhs[r], p);
  }

  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t hit = rank;
    while (hit < rows && aug[hit][col] == 0) ++hit;
    if (hit == rows) continue;
    std::swap(aug[hit], aug[rank]);
    const uint64_t inv = inverse_mod(aug[rank][col], p).second;
    for (size_t c = col; c <= cols; ++c) aug[rank][c] = mul_mod(aug[rank][c], inv, p);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      const uint64_t f = aug[r][col];
      for (size_t c = col; c <= cols; ++c) {
        aug[r][c] = (aug[r][c] + p * p - mul_mod(f, aug[rank][c], p)) % p;
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r) {
    if (aug[r][cols] != 0) return {};
  }

  std::vector<size_t> free_cols;
  for (size_t col = 0, pi = 0; col < cols; ++col) {
    if (pi < rank && pivots[pi] == col) {
      ++pi;
    } else {
      free_cols.push_back(col);
    }
  }
  uint64_t count = 1;
  for (size_t i = 0; i < free_cols.size(); ++i) {
    if (count > max_solutions / p) {
      guard(max_solutions + 1, max_solutions);
    }
    count *= p;
  }

  std::vector<std::vector<uint64_t>> out;
  out.reserve(count);
  std::vector<uint64_t> x(cols, 0);
  for (uint64_t k = 0; k < count; ++k) {
    uint64_t rest = k;
    for (size_t f = free_cols.size(); f-- > 0;) {
      x[free_cols[f]] = rest % p;
      rest /= p;
    }
    for (size_t i = 0; i < rank; ++i) {
      uint64_t v = aug[i][cols];
      for (size_t fc : free_cols) {
        v = (v + p - mul_mod(aug[i][fc], x[fc], p)) % p;
      }
      x[pivots[i]] = v;
    }
    out.push_back(x);
  }
  return out;
}

// Solutions mod p^e: lift each mod-p solution digit by digit.
std::vector<std::vector<uint64_t>> solve_prime_power(const std::vector<std::vector<int64_t>>& a,
                                                     const std::vector<int64_t>& rhs, uint64_t p,
                                                     uint64_t e, uint64_t pe,
                                                     uint64_t max_solutions) {
  if (e == 1) return solve_prime(a, rhs, p, max_solutions);
  const size_t rows = a.size();
  const size_t cols = a[0].size();
  const uint64_t pe1 = pe / p;

  std::vector<std::vector<uint64_t>> base = solve_prime(a, rhs, p, max_solutions);
  std::vector<std::vector<uint64_t>> out;
  std::vector<int64_t> reduced_rhs(rows);
  for (const std::vector<uint64_t>& x0 : base) {
    // A x0 = rhs (mod p), so the residual is divisible by p; the quotient
    // is the right-hand side for the remaining digits.
    for (size_t r = 0; r < rows; ++r) {
      unsigned __int128 acc = 0;
      for (size_t c = 0; c < cols; ++c) {
        acc += static_cast<unsigned __int128>(mod_pos(a[r][c], pe)) * x0[c];
      }
      const uint64_t residual = (mod_pos(rhs[r], pe) + pe - static_cast<uint64_t>(acc % pe)) % pe;
      reduced_rhs[r] = static_cast<int64_t>(residual / p);
    }
    std::vector<std::vector<uint64_t>> lifts =
        solve_prime_power(a, reduced_rhs, p, e - 1, pe1, max_solutions);
    for (const std::vector<uint64_t>& z : lifts) {
      guard(out.size() + 1, max_solutions);
      std::vector<uint64_t> x(cols);
      for (size_t c = 0; c < cols; ++c) x[c] = x0[c] + p * z[c];
      out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<uint64_t>> solve_linear_mod(const std::vector<std::vector<int64_t>>& a,
                                                    const std::vector<int64_t>& rhs, uint64_t m,
                                                    uint64_t max_solutions) {
  if (m < 2) {
    throw Error(Err::BadParameters, "modulus must be at least 2");
  }
  if (a.empty() || a.size() != rhs.size()) {
    throw Error(Err::ShapeMismatch, "need a nonempty system with one rhs entry per row");
  }
  const size_t cols = a[0].size();
  for (const std::vector<int64_t>& row : a) {
    if (row.size() != cols) {
      throw Error(Err::ShapeMismatch, "ragged coefficient matrix");
    }
  }

  const std::vector<PrimePower> factors = factorize(m);
  std::vector<std::vector<std::vector<uint64_t>>> parts;
  parts.reserve(factors.size());
  for (const PrimePower& f : factors) {
    parts.push_back(solve_prime_power(a, rhs, f.p, f.e, f.pe, max_solutions));
    if (parts.back().empty()) return {};
  }
  if (factors.size() == 1) return parts[0];

  uint64_t total = 1;
  for (const std::vector<std::vector<uint64_t>>& s : parts) {
    if (s.size() > max_solutions / total) {
      guard(max_solutions + 1, max_solutions);
    }
    total *= s.size();
  }

  // x = sum over factors of part-solution * c_i, with c_i = 1 (mod pe_i)
  // and 0 (mod every other factor).
  std::vector<uint64_t> crt(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    const uint64_t mi = m / factors[i].pe;
    const uint64_t yi = inverse_mod(mi % factors[i].pe, factors[i].pe).second;
    crt[i] = mul_mod(mi, yi, m);
  }

  std::vector<std::vector<uint64_t>> out;
  out.reserve(total);
  std::vector<size_t> pick(factors.size(), 0);
  for (uint64_t k = 0; k < total; ++k) {
    std::vector<uint64_t> x(cols, 0);
    for (size_t i = 0; i < factors.size(); ++i) {
      const std::vector<uint64_t>& s = parts[i][pick[i]];
      for (size_t c = 0; c < cols; ++c) {
        x[c] = (x[c] + mul_mod(s[c], crt[i], m)) % m;
      }
    }
    out.push_back(std::move(x));
    for (size_t i = factors.size(); i-- > 0;) {
      if (++pick[i] < parts[i].size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

}  // namespace hyperknot::internal
