#include <cstdint>
#include <vector>

#include "doctest.h"
#include "hyperknot/ring.hpp"
#include "support.hpp"

using hyperknot::Err;
using hyperknot::RingElement;
using hyperknot::RingSpec;
using namespace hyperknot_test;

TEST_CASE("element order is lexicographic with the constant term leading") {
  auto r = gf4_ring();
  CHECK(r->size() == 4);
  CHECK(r->from_index(0) == r->zero());
  CHECK(r->from_index(1) == r->t());
  CHECK(r->from_index(2) == r->one());
  CHECK(r->from_index(3) == r->one() + r->t());
  for (std::uint64_t i = 0; i < r->size(); ++i) CHECK(r->index_of(r->from_index(i)) == i);
}

TEST_CASE("index round trip over a degree three quotient") {
  auto r = gf8_ring();
  CHECK(r->size() == 8);
  for (std::uint64_t i = 0; i < r->size(); ++i) {
    const RingElement x = r->from_index(i);
    CHECK(r->index_of(x) == i);
  }
  // Constant term is the most significant digit of the index.
  CHECK(r->index_of(r->one()) == 4);
  CHECK(r->index_of(r->t()) == 2);
}

TEST_CASE("quadratic quotient arithmetic over GF(4)") {
  auto r = gf4_ring();
  CHECK(r->t() * r->t() == r->one() + r->t());
  CHECK(r->t() * r->t_inverse() == r->one());
  CHECK(r->t_inverse() == r->one() + r->t());
  CHECK(r->one_minus_t() == r->one() + r->t());
  CHECK((r->t() + r->t()).is_zero());
}

TEST_CASE("linear quotient collapses to the base field") {
  auto r = z5_t2_ring();
  CHECK(r->size() == 5);
  CHECK(r->degree() == 1);
  CHECK(r->t() == r->element({2}));
  CHECK(r->t_inverse() == r->element({3}));
  CHECK(r->one_minus_t() == r->element({4}));
  CHECK(r->t() * r->t_inverse() == r->one());
}

TEST_CASE("coefficient vectors reduce modulo p and modulo h") {
  auto r = gf4_ring();
  CHECK(r->element({2, 2}).is_zero());
  CHECK(r->element({0, 0, 1}) == r->one() + r->t());  // T^2 = T + 1
  CHECK(r->element({3, 5}) == r->one() + r->t());
}

TEST_CASE("field detection distinguishes irreducible quotients") {
  CHECK(z3_ring()->is_field());
  CHECK(gf4_ring()->is_field());
  CHECK(gf8_ring()->is_field());
  CHECK(z5_t2_ring()->is_field());
  CHECK_FALSE(z2_nonfield_ring()->is_field());
}

TEST_CASE("inverses exist exactly for units") {
  for (const auto& r : {gf4_ring(), gf8_ring(), z3_ring()}) {
    CHECK_FALSE(r->inverse(r->zero()).has_value());
    for (std::uint64_t i = 1; i < r->size(); ++i) {
      const RingElement x = r->from_index(i);
      const auto inv = r->inverse(x);
      REQUIRE(inv.has_value());
      CHECK(*inv * x == r->one());
    }
  }
}

TEST_CASE("non field ring still inverts T") {
  auto r = z2_nonfield_ring();
  CHECK(r->t() * r->t_inverse() == r->one());
  // T + 1 squares to zero, so it has no inverse.
  CHECK_FALSE(r->inverse(r->one() + r->t()).has_value());
}

TEST_CASE("ring laws hold across the whole of GF(8)") {
  auto r = gf8_ring();
  std::vector<RingElement> all;
  for (std::uint64_t i = 0; i < r->size(); ++i) all.push_back(r->from_index(i));
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == r->zero());
    }
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
}

TEST_CASE("powers follow the multiplicative group order") {
  auto r = gf8_ring();
  for (std::uint64_t i = 1; i < r->size(); ++i) {
    const RingElement x = r->from_index(i);
    CHECK(x.pow(7) == r->one());
    CHECK(x.pow(0) == r->one());
  }
}

TEST_CASE("construction rejects invalid parameters") {
  CHECK(thrown_code([] { RingSpec::make(4, {1, 1}); }) == Err::NotPrime);
  CHECK(thrown_code([] { RingSpec::make(1, {1, 1}); }) == Err::NotPrime);
  CHECK(thrown_code([] { RingSpec::make(3, {1}); }) == Err::DegreeZero);
  CHECK(thrown_code([] { RingSpec::make(3, {}); }) == Err::DegreeZero);
  CHECK(thrown_code([] { RingSpec::make(3, {1, 2}); }) == Err::NotMonic);
  CHECK(thrown_code([] { RingSpec::make(3, {1, 0}); }) == Err::NotMonic);
  CHECK(thrown_code([] { RingSpec::make(3, {0, 1}); }) == Err::TNotInvertible);
  CHECK(thrown_code([] { RingSpec::make(2, {0, 0, 1}); }) == Err::TNotInvertible);
}

TEST_CASE("coefficients outside the prime range are reduced at construction") {
  auto a = RingSpec::make(3, {4, 1});
  auto b = RingSpec::make(3, {1, 1});
  CHECK(a->h() == b->h());
}

TEST_CASE("mixing elements of different rings is rejected") {
  auto r = z3_ring();
  auto s = gf4_ring();
  CHECK(thrown_code([&] { (void)(r->one() + s->one()); }) == Err::SpecMismatch);
  CHECK(thrown_code([&] { (void)(r->one() * s->t()); }) == Err::SpecMismatch);
  CHECK_FALSE(r->same_ring(*s));
}

TEST_CASE("oversized quotients refuse to enumerate") {
  std::vector<std::int64_t> h(64, 0);
  h[0] = 1;
  h[63] = 1;
  auto r = RingSpec::make(2, h);
  CHECK_FALSE(r->size_fits());
  CHECK(thrown_code([&] { r->size(); }) == Err::TooLarge);
}
