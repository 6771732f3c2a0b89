#include "hyperknot/ring.hpp"

#include <algorithm>
#include <utility>

namespace hyperknot {

namespace {

constexpr int64_t kMaxPrime = (int64_t{1} << 31) - 1;

bool is_prime(int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
  int64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

// Polynomials over Z_p as coefficient vectors, constant term first,
// trailing zeros stripped. Used only by the irreducibility test.
using Poly = std::vector<int64_t>;

void strip(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, int64_t p) {
  int64_t lead_inv = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    int64_t c = a.back() * lead_inv % p;
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    strip(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, int64_t p) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

RingSpec::RingSpec(int64_t p, std::vector<int64_t> h) : p_(p), h_(std::move(h)) {
  // size = p^deg, tracked only while it fits
  unsigned __int128 sz = 1;
  bool fits = true;
  for (int i = 0; i < degree(); ++i) {
    sz *= static_cast<unsigned __int128>(p_);
    if (sz > (static_cast<unsigned __int128>(1) << 62)) {
      fits = false;
      break;
    }
  }
  if (fits) size_ = static_cast<uint64_t>(sz);

  // T^{-1} = -h0^{-1} (h1 + h2 T + ... + h_d T^{d-1}), read off h(T) = 0
  int64_t h0_inv = mod_pow(h_[0], p_ - 2, p_);
  t_inv_.assign(degree(), 0);
  for (int j = 0; j < degree(); ++j)
    t_inv_[j] = (p_ - h0_inv * h_[j + 1] % p_) % p_;

  // Rabin: h irreducible iff T^(p^d) == T mod h and, for every prime r | d,
  // gcd(T^(p^(d/r)) - T, h) = 1. Frobenius powers are built by j-fold x -> x^p,
  // on raw residue vectors of length d.
  const int d = degree();
  if (d == 1) {
    is_field_ = true;
  } else {
    auto mulmod = [&](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
      std::vector<int64_t> conv(2 * d - 1, 0);
      for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j) conv[i + j] = (conv[i + j] + a[i] * b[j]) % p_;
      }
      return reduce(std::move(conv));
    };
    std::vector<int64_t> tvec(d, 0);
    tvec[1] = 1;
    auto frob = [&](int times) {
      std::vector<int64_t> x = tvec;
      for (int i = 0; i < times; ++i) {
        std::vector<int64_t> acc(d, 0);
        acc[0] = 1;
        std::vector<int64_t> base = x;
        int64_t e = p_;
        while (e > 0) {
          if (e & 1) acc = mulmod(acc, base);
          base = mulmod(base, base);
          e >>= 1;
        }
        x = std::move(acc);
      }
      return x;
    };
    bool ok = frob(d) == tvec;
    if (ok) {
      for (int r = 2; r <= d && ok; ++r) {
        if (d % r != 0) continue;
        bool r_prime = true;
        for (int q = 2; q * q <= r; ++q)
          if (r % q == 0) r_prime = false;
        if (!r_prime) continue;
        std::vector<int64_t> diff = frob(d / r);
        diff[1] = ((diff[1] - 1) % p_ + p_) % p_;
        Poly g = poly_gcd(h_, diff, p_);
        ok = g.size() == 1;
      }
    }
    is_field_ = ok;
  }
}

RingSpecPtr RingSpec::make(int64_t p, std::vector<int64_t> h) {
  if (p > kMaxPrime) throw Error(Err::TooLarge, "modulus exceeds 2^31");
  if (!is_prime(p)) throw Error(Err::NotPrime, "p = " + std::to_string(p));
  if (h.size() < 2) throw Error(Err::DegreeZero, "h must have degree >= 1");
  for (auto& c : h) c = (c % p + p) % p;
  if (h.back() != 1)
    throw Error(Err::NotMonic, "leading coefficient " + std::to_string(h.back()));
  if (h.front() == 0)
    throw Error(Err::TNotInvertible, "h(0) = 0 mod p, T is a zero divisor");
  return RingSpecPtr(new RingSpec(p, std::move(h)));
}

uint64_t RingSpec::size() const {
  if (!size_) throw Error(Err::TooLarge, "ring cardinality exceeds 2^62");
  return *size_;
}

std::vector<int64_t> RingSpec::reduce(std::vector<int64_t> poly) const {
  const int d = degree();
  for (auto& c : poly) c = (c % p_ + p_) % p_;
  for (int i = static_cast<int>(poly.size()) - 1; i >= d; --i) {
    int64_t c = poly[i];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j)
      poly[i - d + j] = ((poly[i - d + j] - c * h_[j]) % p_ + p_) % p_;
  }
  poly.resize(d, 0);
  return poly;
}

RingElement RingSpec::wrap(std::vector<int64_t> coeffs) const {
  return RingElement(shared_from_this(), std::move(coeffs));
}

RingElement RingSpec::zero() const { return wrap(std::vector<int64_t>(degree(), 0)); }

RingElement RingSpec::one() const { return element({1}); }

RingElement RingSpec::t() const { return element({0, 1}); }

RingElement RingSpec::t_inverse() const { return wrap(t_inv_); }

RingElement RingSpec::one_minus_t() const { return element({1, -1}); }

RingElement RingSpec::element(std::vector<int64_t> coeffs) const {
  return wrap(reduce(std::move(coeffs)));
}

RingElement RingSpec::from_index(uint64_t idx) const {
  if (idx >= size()) throw Error(Err::IndexOutOfRange, "element index " + std::to_string(idx));
  std::vector<int64_t> c(degree(), 0);
  for (int j = degree() - 1; j >= 0; --j) {
    c[j] = static_cast<int64_t>(idx % static_cast<uint64_t>(p_));
    idx /= static_cast<uint64_t>(p_);
  }
  return wrap(std::move(c));
}

uint64_t RingSpec::index_of(const RingElement& e) const {
  if (!e.spec() || !same_ring(*e.spec()))
    throw Error(Err::SpecMismatch, "element from a different ring");
  uint64_t idx = 0;
  for (int64_t c : e.coeffs()) idx = idx * static_cast<uint64_t>(p_) + static_cast<uint64_t>(c);
  return idx;
}

std::optional<RingElement> RingSpec::inverse(const RingElement& a) const {
  if (!is_field_ || a.is_zero()) return std::nullopt;
  RingElement cand = a.pow(size() - 2);
  if (cand * a == one()) return cand;
  return std::nullopt;
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

uint64_t RingElement::index() const {
  if (!spec_) throw Error(Err::SpecMismatch, "detached element");
  return spec_->index_of(*this);
}

RingElement RingElement::pow(uint64_t e) const {
  if (!spec_) throw Error(Err::SpecMismatch, "detached element");
  RingElement acc = spec_->one();
  RingElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

const RingSpec& common_spec(const RingElement& a, const RingElement& b) {
  if (!a.spec() || !b.spec()) throw Error(Err::SpecMismatch, "detached element");
  if (!a.spec()->same_ring(*b.spec()))
    throw Error(Err::SpecMismatch, "operands from different rings");
  return *a.spec();
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  const RingSpec& s = common_spec(a, b);
  std::vector<int64_t> c(a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b.coeffs_[i]) % s.p();
  return RingElement(a.spec_, std::move(c));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  const RingSpec& s = common_spec(a, b);
  std::vector<int64_t> c(a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] = ((c[i] - b.coeffs_[i]) % s.p() + s.p()) % s.p();
  return RingElement(a.spec_, std::move(c));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  const RingSpec& s = common_spec(a, b);
  const int d = s.degree();
  std::vector<int64_t> conv(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      conv[i + j] = (conv[i + j] + a.coeffs_[i] * b.coeffs_[j]) % s.p();
  }
  return RingElement(a.spec_, s.reduce(std::move(conv)));
}

RingElement operator-(const RingElement& a) {
  if (!a.spec_) throw Error(Err::SpecMismatch, "detached element");
  std::vector<int64_t> c(a.coeffs_);
  for (auto& x : c) x = (a.spec_->p() - x) % a.spec_->p();
  return RingElement(a.spec_, std::move(c));
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (!a.spec_ || !b.spec_) return !a.spec_ && !b.spec_;
  return a.spec_->same_ring(*b.spec_) && a.coeffs_ == b.coeffs_;
}

}  // namespace hyperknot
