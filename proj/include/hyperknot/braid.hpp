#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hyperknot/ring.hpp"

namespace hyperknot {

struct BraidLetter {
  int index;  // generator subscript, 1-based in [1, strands-1]
  int sign;   // +1 or -1

  friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
    return a.index == b.index && a.sign == b.sign;
  }
};

/// A word in the braid group B_N. The empty word is the identity braid;
/// the word length is the crossing count of the closure diagram.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  /// Whitespace-separated signed generator indices, e.g. "1 1 1" or "2 -1".
  static BraidWord parse(std::string_view text, int strands);

  /// The torus word (sigma_{N-1} sigma_{N-2} ... sigma_1)^power.
  static BraidWord torus(int strands, int power);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }

  BraidWord power(int n) const;
  BraidWord inverse() const;
  BraidWord concat(const BraidWord& other) const;

  /// Underlying permutation: perm[j] is the bottom position reached by the
  /// strand entering at top position j (0-based).
  std::vector<int> permutation() const;
  /// Cycle count of the permutation = components of the closure.
  int components() const;

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// Murasugi's crossing number of the (strands, power) torus closure:
/// min{ |N|(|n|-1), |n|(|N|-1) }.
int64_t torus_crossing_number(int strands, int power);

/// Square matrix over a fixed ring spec, row-major.
class RingMatrix {
 public:
  RingMatrix(RingSpecPtr spec, int n);
  static RingMatrix identity(const RingSpecPtr& spec, int n);

  int dim() const { return n_; }
  const RingSpecPtr& spec() const { return spec_; }
  const RingElement& at(int r, int c) const { return cells_[static_cast<size_t>(r) * n_ + c]; }
  RingElement& at(int r, int c) { return cells_[static_cast<size_t>(r) * n_ + c]; }

  RingMatrix operator*(const RingMatrix& rhs) const;
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);
  friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

 private:
  RingSpecPtr spec_;
  int n_;
  std::vector<RingElement> cells_;
};

/// Burau matrix of the word: the ordered product of generator blocks
///   sigma_i     -> [[0, T], [1, 1-T]]        at rows/cols (i, i+1)
///   sigma_i^-1  -> [[(T-1)/T, 1], [1/T, 0]]  at the same position,
/// acting on row color vectors from the left.
RingMatrix burau_matrix(const BraidWord& w, const RingSpecPtr& spec);

/// Least M >= 1 with B^M == I; throws CapExceeded past the cap.
uint64_t matrix_order(const RingMatrix& b, uint64_t cap = 1000000);

}  // namespace hyperknot
