#include <vector>

#include "doctest.h"
#include "hyperknot/braid.hpp"
#include "support.hpp"

using hyperknot::BraidLetter;
using hyperknot::BraidWord;
using hyperknot::burau_matrix;
using hyperknot::Err;
using hyperknot::matrix_order;
using hyperknot::RingMatrix;
using hyperknot::torus_crossing_number;
using namespace hyperknot_test;

TEST_CASE("parse accepts signed whitespace separated indices") {
  const BraidWord w = BraidWord::parse(" 1  -2\t1 ", 3);
  const std::vector<BraidLetter> expected{{1, 1}, {2, -1}, {1, 1}};
  CHECK(w.strands() == 3);
  CHECK(w.letters() == expected);
  CHECK(w.length() == 3);
  CHECK(BraidWord::parse("", 2).length() == 0);
}

TEST_CASE("parse rejects malformed words") {
  CHECK(thrown_code([] { BraidWord::parse("1 x", 3); }) == Err::ParseError);
  CHECK(thrown_code([] { BraidWord::parse("0", 3); }) == Err::ParseError);
  CHECK(thrown_code([] { BraidWord::parse("3", 3); }) == Err::IndexOutOfRange);
  CHECK(thrown_code([] { BraidWord::parse("-5", 3); }) == Err::IndexOutOfRange);
  CHECK(thrown_code([] { BraidWord::parse("1", 1); }) == Err::BadParameters);
  CHECK(thrown_code([] { BraidWord(3, {{1, 2}}); }) == Err::BadParameters);
}

TEST_CASE("torus words expand the descending generator run") {
  const std::vector<BraidLetter> gen{{2, 1}, {1, 1}};
  CHECK(BraidWord::torus(3, 1).letters() == gen);
  const std::vector<BraidLetter> squared{{2, 1}, {1, 1}, {2, 1}, {1, 1}};
  CHECK(BraidWord::torus(3, 2).letters() == squared);
  CHECK(BraidWord::torus(2, 3) == trefoil());
  CHECK(BraidWord::torus(4, 0).length() == 0);
}

TEST_CASE("powers concatenate and negative powers invert") {
  const BraidWord w = BraidWord::parse("1 2", 3);
  CHECK(w.power(2) == BraidWord::parse("1 2 1 2", 3));
  CHECK(w.power(0).length() == 0);
  CHECK(w.power(-1) == BraidWord::parse("-2 -1", 3));
  CHECK(w.inverse() == w.power(-1));
  CHECK(w.concat(w.inverse()).length() == 4);
}

TEST_CASE("permutation tracks strand positions") {
  CHECK(BraidWord::parse("1", 3).permutation() == std::vector<int>{1, 0, 2});
  CHECK(trefoil().permutation() == std::vector<int>{1, 0});
  CHECK(BraidWord::parse("1 2", 3).permutation() == std::vector<int>{2, 0, 1});
  CHECK(BraidWord::parse("1 -1", 3).permutation() == std::vector<int>{0, 1, 2});
}

TEST_CASE("closure component counts") {
  CHECK(trefoil().components() == 1);
  CHECK(BraidWord::torus(2, 2).components() == 2);
  CHECK(BraidWord::torus(3, 2).components() == 1);
  CHECK(BraidWord::torus(3, 3).components() == 3);
  CHECK(BraidWord(4).components() == 4);
}

TEST_CASE("torus crossing numbers") {
  CHECK(torus_crossing_number(2, 1) == 0);
  CHECK(torus_crossing_number(2, 3) == 3);
  CHECK(torus_crossing_number(3, 4) == 8);
  CHECK(torus_crossing_number(3, 2) == 3);
  CHECK(torus_crossing_number(2, 25) == 25);
  CHECK(torus_crossing_number(3, 16) == 32);
}

TEST_CASE("generator matrix over the dihedral ring") {
  auto spec = z3_ring();
  const RingMatrix b = burau_matrix(BraidWord::parse("1", 2), spec);
  CHECK(b.at(0, 0).is_zero());
  CHECK(b.at(0, 1) == spec->t());
  CHECK(b.at(1, 0) == spec->one());
  CHECK(b.at(1, 1) == spec->one_minus_t());
  CHECK(matrix_order(b) == 3);
}

TEST_CASE("matrix orders over GF(4)") {
  auto spec = gf4_ring();
  CHECK(matrix_order(burau_matrix(BraidWord::parse("1", 2), spec)) == 3);
  CHECK(matrix_order(burau_matrix(BraidWord::torus(3, 1), spec)) == 6);
  CHECK(matrix_order(RingMatrix::identity(spec, 3)) == 1);
}

TEST_CASE("matrix order respects the cap") {
  CHECK(thrown_code([] {
          matrix_order(burau_matrix(BraidWord::parse("1", 2), z3_ring()), 2);
        }) == Err::CapExceeded);
}

TEST_CASE("empty and cancelling words map to the identity matrix") {
  auto spec = gf4_ring();
  const RingMatrix id = RingMatrix::identity(spec, 3);
  CHECK(burau_matrix(BraidWord(3), spec) == id);
  for (const char* text : {"1 -1", "-2 2", "1 2 -2 -1"}) {
    CHECK(burau_matrix(BraidWord::parse(text, 3), spec) == id);
  }
}

TEST_CASE("the matrix map is a homomorphism") {
  auto spec = gf4_ring();
  const std::vector<const char*> words{"1", "-2", "1 2 1", "2 -1 3", "-3 -3 2 1"};
  for (const char* a : words)
    for (const char* b : words) {
      const BraidWord wa = BraidWord::parse(a, 4);
      const BraidWord wb = BraidWord::parse(b, 4);
      CHECK(burau_matrix(wa.concat(wb), spec) == burau_matrix(wa, spec) * burau_matrix(wb, spec));
    }
}

TEST_CASE("matrix multiplication demands matching shape and ring") {
  auto spec = gf4_ring();
  const RingMatrix a = RingMatrix::identity(spec, 2);
  const RingMatrix b = RingMatrix::identity(spec, 3);
  CHECK(thrown_code([&] { (void)(a * b); }) == Err::ShapeMismatch);
  const RingMatrix c = RingMatrix::identity(z3_ring(), 2);
  CHECK(thrown_code([&] { (void)(a * c); }) == Err::ShapeMismatch);
}
