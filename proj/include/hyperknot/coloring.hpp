#pragma once

#include <cstdint>
#include <vector>

#include "hyperknot/braid.hpp"
#include "hyperknot/quandle.hpp"

namespace hyperknot {

/// Per-crossing record: the color pair (x, y) the crossing consumes and the
/// crossing sign. For a negative letter the pair is the one at which the
/// equivalent positive crossing would carry colors, so that a letter and its
/// inverse contribute cancelling weights.
struct TraceEntry {
  int x;
  int y;
  int sign;

  friend bool operator==(const TraceEntry& a, const TraceEntry& b) {
    return a.x == b.x && a.y == b.y && a.sign == b.sign;
  }
};

/// Colors at the top ends of the strands, left to right.
using Coloring = std::vector<int>;

struct Propagation {
  Coloring bottom;
  std::vector<TraceEntry> trace;  // one entry per letter, in word order
};

/// Pushes top colors through the word. A positive sigma_i turns the pair
/// (a, b) at positions (i, i+1) into (b, a*b) and records (a, b, +1); its
/// inverse turns (a, b) into (c, a) with c*a = b and records (c, a, -1).
Propagation propagate_colors(const Quandle& q, const BraidWord& w, const Coloring& top);

/// True when the closure identification holds: bottom colors equal top.
bool is_coloring(const Quandle& q, const BraidWord& w, const Coloring& top);

/// All colorings of the closure of w, in lexicographic order with the first
/// strand most significant. Scans q.size()^strands candidates; throws
/// SearchSpaceTooLarge past the cap.
std::vector<Coloring> enumerate_colorings(const Quandle& q, const BraidWord& w,
                                          uint64_t cap = uint64_t(1) << 20);

/// The same set through the Burau fixed-vector equation a B(w) = a. Needs a
/// quandle carrying its ring spec; solves by elimination when the ring is a
/// field and scans all vectors otherwise (cap applies to the scan).
std::vector<Coloring> enumerate_colorings_burau(const Quandle& q, const BraidWord& w,
                                                uint64_t cap = uint64_t(1) << 20);

}  // namespace hyperknot
