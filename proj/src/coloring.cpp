#include "hyperknot/coloring.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "hyperknot/error.hpp"
#include "parallel.hpp"

namespace hyperknot {

namespace {

constexpr uint64_t kParallelThreshold = uint64_t(1) << 12;

// Lexicographic unranking: first strand most significant.
Coloring unrank(uint64_t k, int strands, int n) {
  Coloring c(static_cast<size_t>(strands), 0);
  for (int pos = strands - 1; pos >= 0; --pos) {
    c[static_cast<size_t>(pos)] = static_cast<int>(k % static_cast<uint64_t>(n));
    k /= static_cast<uint64_t>(n);
  }
  return c;
}

uint64_t checked_pow(int base, int exponent, uint64_t cap, const char* what) {
  uint64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    if (total > cap / static_cast<uint64_t>(base)) {
      throw Error(Err::SearchSpaceTooLarge, std::string(what) + ": " + std::to_string(base) +
                                                "^" + std::to_string(exponent) + " exceeds cap " +
                                                std::to_string(cap));
    }
    total *= static_cast<uint64_t>(base);
  }
  return total;
}

}  // namespace

Propagation propagate_colors(const Quandle& q, const BraidWord& w, const Coloring& top) {
  if (static_cast<int>(top.size()) != w.strands()) {
    throw Error(Err::LengthMismatch, "got " + std::to_string(top.size()) + " colors for " +
                                         std::to_string(w.strands()) + " strands");
  }
  for (int c : top) {
    if (c < 0 || c >= q.size()) {
      throw Error(Err::BadColorIndex,
                  "color " + std::to_string(c) + " outside [0, " + std::to_string(q.size()) + ")");
    }
  }
  Propagation out;
  out.bottom = top;
  out.trace.reserve(w.length());
  for (const BraidLetter& l : w.letters()) {
    int& left = out.bottom[static_cast<size_t>(l.index - 1)];
    int& right = out.bottom[static_cast<size_t>(l.index)];
    const int a = left;
    const int b = right;
    if (l.sign > 0) {
      left = b;
      right = q.op(a, b);
      out.trace.push_back({a, b, +1});
    } else {
      const int c = q.inv_op(b, a);
      left = c;
      right = a;
      out.trace.push_back({c, a, -1});
    }
  }
  return out;
}

bool is_coloring(const Quandle& q, const BraidWord& w, const Coloring& top) {
  return propagate_colors(q, w, top).bottom == top;
}

std::vector<Coloring> enumerate_colorings(const Quandle& q, const BraidWord& w, uint64_t cap) {
  const int n = q.size();
  const int strands = w.strands();
  const uint64_t total = checked_pow(n, strands, cap, "coloring scan");

  std::vector<Coloring> found;
  if (total < kParallelThreshold) {
    for (uint64_t k = 0; k < total; ++k) {
      Coloring c = unrank(k, strands, n);
      if (is_coloring(q, w, c)) found.push_back(std::move(c));
    }
    return found;
  }

  std::vector<std::vector<Coloring>> buckets(internal::worker_count());
  internal::chunked_scan(total, kParallelThreshold,
                         [&](unsigned chunk, uint64_t begin, uint64_t end) {
                           std::vector<Coloring>& out = buckets[chunk];
                           for (uint64_t k = begin; k < end; ++k) {
                             Coloring c = unrank(k, strands, n);
                             if (is_coloring(q, w, c)) out.push_back(std::move(c));
                           }
                         });
  for (std::vector<Coloring>& bucket : buckets) {
    found.insert(found.end(), std::make_move_iterator(bucket.begin()),
                 std::make_move_iterator(bucket.end()));
  }
  return found;
}

std::vector<Coloring> enumerate_colorings_burau(const Quandle& q, const BraidWord& w,
                                                uint64_t cap) {
  const RingSpecPtr& spec = q.ring();
  if (!spec) {
    throw Error(Err::BadParameters, "Burau enumeration needs a quandle built from a ring spec");
  }
  const int strands = w.strands();
  const RingMatrix b = burau_matrix(w, spec);
  const int ring_size = static_cast<int>(spec->size());

  if (spec->is_field()) {
    // Row equation a (B - I) = 0, transposed to equations indexed by the
    // columns of B. Reduced row echelon form, then every free assignment.
    const RingElement zero = spec->zero();
    const RingElement one = spec->one();
    std::vector<std::vector<RingElement>> m(
        static_cast<size_t>(strands), std::vector<RingElement>(static_cast<size_t>(strands), zero));
    for (int c = 0; c < strands; ++c) {
      for (int j = 0; j < strands; ++j) {
        m[static_cast<size_t>(c)][static_cast<size_t>(j)] =
            b.at(j, c) - (j == c ? one : zero);
      }
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < strands && rank < strands; ++col) {
      int found_row = -1;
      for (int r = rank; r < strands; ++r) {
        if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
          found_row = r;
          break;
        }
      }
      if (found_row < 0) continue;
      std::swap(m[static_cast<size_t>(found_row)], m[static_cast<size_t>(rank)]);
      const RingElement inv =
          *spec->inverse(m[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
      for (int c2 = col; c2 < strands; ++c2) {
        m[static_cast<size_t>(rank)][static_cast<size_t>(c2)] =
            m[static_cast<size_t>(rank)][static_cast<size_t>(c2)] * inv;
      }
      for (int r = 0; r < strands; ++r) {
        if (r == rank) continue;
        const RingElement f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
        if (f.is_zero()) continue;
        for (int c2 = col; c2 < strands; ++c2) {
          m[static_cast<size_t>(r)][static_cast<size_t>(c2)] =
              m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -
              f * m[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
        }
      }
      pivot_col.push_back(col);
      ++rank;
    }
    std::vector<int> free_col;
    for (int col = 0, p = 0; col < strands; ++col) {
      if (p < rank && pivot_col[static_cast<size_t>(p)] == col) {
        ++p;
      } else {
        free_col.push_back(col);
      }
    }
    const uint64_t count =
        checked_pow(ring_size, static_cast<int>(free_col.size()), cap, "solution set");
    std::vector<Coloring> out;
    out.reserve(count);
    std::vector<RingElement> a(static_cast<size_t>(strands), zero);
    for (uint64_t k = 0; k < count; ++k) {
      uint64_t rest = k;
      for (size_t f = free_col.size(); f-- > 0;) {
        a[static_cast<size_t>(free_col[f])] =
            spec->from_index(rest % static_cast<uint64_t>(ring_size));
        rest /= static_cast<uint64_t>(ring_size);
      }
      for (int p = 0; p < rank; ++p) {
        RingElement v = zero;
        for (int fc : free_col) {
          v = v + m[static_cast<size_t>(p)][static_cast<size_t>(fc)] * a[static_cast<size_t>(fc)];
        }
        a[static_cast<size_t>(pivot_col[static_cast<size_t>(p)])] = -v;
      }
      Coloring c(static_cast<size_t>(strands));
      for (int j = 0; j < strands; ++j) {
        c[static_cast<size_t>(j)] = static_cast<int>(a[static_cast<size_t>(j)].index());
      }
      out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // General ring: scan every vector against a B = a.
  const uint64_t total = checked_pow(ring_size, strands, cap, "Burau scan");
  std::vector<RingElement> basis;
  basis.reserve(static_cast<size_t>(ring_size));
  for (int i = 0; i < ring_size; ++i) {
    basis.push_back(spec->from_index(static_cast<uint64_t>(i)));
  }
  std::vector<Coloring> out;
  for (uint64_t k = 0; k < total; ++k) {
    Coloring c = unrank(k, strands, ring_size);
    bool fixed = true;
    for (int col = 0; col < strands && fixed; ++col) {
      RingElement v = spec->zero();
      for (int j = 0; j < strands; ++j) {
        v = v + basis[static_cast<size_t>(c[static_cast<size_t>(j)])] * b.at(j, col);
      }
      fixed = v == basis[static_cast<size_t>(c[static_cast<size_t>(col)])];
    }
    if (fixed) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace hyperknot
