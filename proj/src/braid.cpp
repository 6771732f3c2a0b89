#include "hyperknot/braid.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>

#include "hyperknot/error.hpp"

namespace hyperknot {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) {
    throw Error(Err::BadParameters,
                "braid word needs at least 2 strands, got " + std::to_string(strands_));
  }
  for (size_t i = 0; i < letters_.size(); ++i) {
    const BraidLetter& l = letters_[i];
    if (l.sign != 1 && l.sign != -1) {
      throw Error(Err::BadParameters, "letter sign must be +1 or -1");
    }
    if (l.index < 1 || l.index > strands_ - 1) {
      throw Error(Err::IndexOutOfRange,
                  "generator index " + std::to_string(l.index) + " at position " +
                      std::to_string(i) + " outside [1, " + std::to_string(strands_ - 1) + "]");
    }
  }
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(Err::ParseError, "bad braid letter '" + tok + "'");
    }
    if (value == 0) {
      throw Error(Err::ParseError, "braid letter 0 has no meaning; use signed indices");
    }
    letters.push_back({std::abs(value), value > 0 ? 1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::torus(int strands, int power) {
  if (strands < 2 || power < 0) {
    throw Error(Err::BadParameters, "torus word needs strands >= 2 and power >= 0");
  }
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<size_t>(strands - 1) * power);
  for (int rep = 0; rep < power; ++rep) {
    for (int i = strands - 1; i >= 1; --i) {
      letters.push_back({i, 1});
    }
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::power(int n) const {
  if (n < 0) {
    return inverse().power(-n);
  }
  std::vector<BraidLetter> letters;
  letters.reserve(letters_.size() * static_cast<size_t>(n));
  for (int rep = 0; rep < n; ++rep) {
    letters.insert(letters.end(), letters_.begin(), letters_.end());
  }
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    letters.push_back({it->index, -it->sign});
  }
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  if (other.strands_ != strands_) {
    throw Error(Err::BadParameters, "cannot concatenate words on different strand counts");
  }
  std::vector<BraidLetter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

std::vector<int> BraidWord::permutation() const {
  // Track which strand occupies each position while reading the word top
  // to bottom; crossing sign does not matter for the permutation.
  std::vector<int> at_pos(static_cast<size_t>(strands_));
  std::iota(at_pos.begin(), at_pos.end(), 0);
  for (const BraidLetter& l : letters_) {
    std::swap(at_pos[static_cast<size_t>(l.index - 1)], at_pos[static_cast<size_t>(l.index)]);
  }
  std::vector<int> perm(static_cast<size_t>(strands_));
  for (int pos = 0; pos < strands_; ++pos) {
    perm[static_cast<size_t>(at_pos[static_cast<size_t>(pos)])] = pos;
  }
  return perm;
}

int BraidWord::components() const {
  std::vector<int> perm = permutation();
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = static_cast<size_t>(perm[cur]);
    }
  }
  return cycles;
}

int64_t torus_crossing_number(int strands, int power) {
  if (strands < 2 || power < 1) {
    throw Error(Err::BadParameters, "crossing number needs strands >= 2 and power >= 1");
  }
  int64_t n = strands, m = power;
  return std::min(n * (m - 1), m * (n - 1));
}

RingMatrix::RingMatrix(RingSpecPtr spec, int n) : spec_(std::move(spec)), n_(n) {
  if (!spec_) {
    throw Error(Err::BadParameters, "matrix needs a ring spec");
  }
  if (n_ < 1) {
    throw Error(Err::BadParameters, "matrix dimension must be positive");
  }
  cells_.assign(static_cast<size_t>(n_) * n_, spec_->zero());
}

RingMatrix RingMatrix::identity(const RingSpecPtr& spec, int n) {
  RingMatrix m(spec, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = spec->one();
  }
  return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& rhs) const {
  if (n_ != rhs.n_ || !spec_->same_ring(*rhs.spec_)) {
    throw Error(Err::ShapeMismatch, "matrix product needs equal dimensions over one ring");
  }
  RingMatrix out(spec_, n_);
  for (int r = 0; r < n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      const RingElement& v = at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < n_; ++c) {
        out.at(r, c) = out.at(r, c) + v * rhs.at(k, c);
      }
    }
  }
  return out;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  if (a.n_ != b.n_ || !a.spec_->same_ring(*b.spec_)) return false;
  return a.cells_ == b.cells_;
}

RingMatrix burau_matrix(const BraidWord& w, const RingSpecPtr& spec) {
  const int n = w.strands();
  const RingElement t = spec->t();
  const RingElement t_inv = spec->t_inverse();
  const RingElement one = spec->one();
  RingMatrix product = RingMatrix::identity(spec, n);
  for (const BraidLetter& l : w.letters()) {
    RingMatrix block = RingMatrix::identity(spec, n);
    const int i = l.index - 1;
    if (l.sign > 0) {
      block.at(i, i) = spec->zero();
      block.at(i, i + 1) = t;
      block.at(i + 1, i) = one;
      block.at(i + 1, i + 1) = spec->one_minus_t();
    } else {
      block.at(i, i) = (t - one) * t_inv;
      block.at(i, i + 1) = one;
      block.at(i + 1, i) = t_inv;
      block.at(i + 1, i + 1) = spec->zero();
    }
    product = product * block;
  }
  return product;
}

uint64_t matrix_order(const RingMatrix& b, uint64_t cap) {
  const RingMatrix id = RingMatrix::identity(b.spec(), b.dim());
  RingMatrix acc = b;
  for (uint64_t m = 1; m <= cap; ++m) {
    if (acc == id) return m;
    acc = acc * b;
  }
  throw Error(Err::CapExceeded,
              "matrix order exceeds cap " + std::to_string(cap));
}

}  // namespace hyperknot
