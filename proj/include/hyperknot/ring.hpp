#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hyperknot/error.hpp"

namespace hyperknot {

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

/// Element of Z_p[T]/(h(T)), stored as the canonical representative of
/// degree < deg h: a residue vector with the constant term first. Two
/// elements are equal iff their residue vectors are equal.
class RingElement {
 public:
  RingElement() = default;  // detached element; any arithmetic throws SpecMismatch

  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  const RingSpecPtr& spec() const { return spec_; }
  bool is_zero() const;
  /// Position in the lexicographic element order (constant term most significant).
  uint64_t index() const;

  RingElement pow(uint64_t e) const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

 private:
  friend class RingSpec;
  RingElement(RingSpecPtr spec, std::vector<int64_t> coeffs)
      : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

  RingSpecPtr spec_;
  std::vector<int64_t> coeffs_;
};

/// The finite quotient ring Z_p[T]/(h(T)). Construction requires p prime,
/// h monic of degree >= 1 and h(0) != 0 mod p, so T is a unit and every
/// Laurent expression reduces to a polynomial representative of degree
/// < deg h. Immutable after construction; shared freely.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
 public:
  /// h lists coefficients constant term first; entries are reduced mod p.
  /// Throws NotPrime, DegreeZero, NotMonic, TNotInvertible.
  static RingSpecPtr make(int64_t p, std::vector<int64_t> h);

  int64_t p() const { return p_; }
  const std::vector<int64_t>& h() const { return h_; }
  int degree() const { return static_cast<int>(h_.size()) - 1; }

  /// Cardinality p^deg; throws TooLarge when it exceeds 2^62.
  uint64_t size() const;
  bool size_fits() const { return size_.has_value(); }

  /// True when h is irreducible over Z_p, i.e. the quotient is a field.
  bool is_field() const { return is_field_; }

  RingElement zero() const;
  RingElement one() const;
  RingElement t() const;
  RingElement t_inverse() const;  // u with u * t == one, from the coefficients of h
  RingElement one_minus_t() const;

  /// Canonical element from arbitrary polynomial coefficients (any length,
  /// constant term first): reduces mod p and mod h.
  RingElement element(std::vector<int64_t> coeffs) const;

  RingElement from_index(uint64_t idx) const;
  uint64_t index_of(const RingElement& e) const;

  /// Multiplicative inverse in the field case, computed as a^(size-2) and
  /// verified; nullopt for zero, non-units, and non-field specs.
  std::optional<RingElement> inverse(const RingElement& a) const;

  bool same_ring(const RingSpec& other) const { return p_ == other.p_ && h_ == other.h_; }

 private:
  RingSpec(int64_t p, std::vector<int64_t> h);

  std::vector<int64_t> reduce(std::vector<int64_t> poly) const;
  RingElement wrap(std::vector<int64_t> coeffs) const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);

  int64_t p_ = 0;
  std::vector<int64_t> h_;
  std::optional<uint64_t> size_;
  bool is_field_ = false;
  std::vector<int64_t> t_inv_;
};

}  // namespace hyperknot
