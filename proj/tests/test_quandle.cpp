#include <array>
#include <vector>

#include "doctest.h"
#include "hyperknot/quandle.hpp"
#include "support.hpp"

using hyperknot::AxiomError;
using hyperknot::AxiomReport;
using hyperknot::Err;
using hyperknot::Quandle;
using namespace hyperknot_test;

TEST_CASE("dihedral three table matches a 2b minus a") {
  const Quandle q = dihedral3();
  const std::vector<std::vector<int>> expected{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  CHECK(q.size() == 3);
  CHECK(q.table() == expected);
  CHECK(q.ring() != nullptr);
}

TEST_CASE("GF(4) quandle table") {
  const Quandle q = gf4_quandle();
  const std::vector<std::vector<int>> expected{
      {0, 2, 3, 1}, {3, 1, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}};
  CHECK(q.size() == 4);
  CHECK(q.table() == expected);
}

TEST_CASE("linear quotient over Z_2 yields the trivial quandle") {
  auto ring = hyperknot::RingSpec::make(2, {1, 1});
  const Quandle q = Quandle::alexander(ring);
  const std::vector<std::vector<int>> expected{{0, 0}, {1, 1}};
  CHECK(q.table() == expected);
  CHECK(Quandle::check_axioms(expected).pass());
}

TEST_CASE("axioms hold for generated tables") {
  for (const Quandle& q : {dihedral3(), gf4_quandle()}) {
    const AxiomReport report = Quandle::check_axioms(q.table());
    CHECK(report.pass());
    CHECK(report.idempotency.pass);
    CHECK(report.right_invertible.pass);
    CHECK(report.self_distributive.pass);
  }
}

TEST_CASE("inverse operation solves c star b equals y") {
  for (const Quandle& q : {dihedral3(), gf4_quandle()}) {
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b) {
        CHECK(q.inv_op(q.op(a, b), b) == a);
        CHECK(q.op(q.inv_op(a, b), b) == a);
      }
  }
}

TEST_CASE("right invertibility violation is witnessed") {
  const std::vector<std::vector<int>> op{{0, 0}, {0, 1}};
  const AxiomReport report = Quandle::check_axioms(op);
  CHECK_FALSE(report.pass());
  CHECK(report.idempotency.pass);
  CHECK_FALSE(report.right_invertible.pass);
  // Column 0 never takes the value 1.
  CHECK(report.right_invertible.witness == std::array<int, 3>{0, 1, -1});
  CHECK_FALSE(report.describe().empty());
}

TEST_CASE("idempotency violation is witnessed") {
  std::vector<std::vector<int>> op = dihedral3().table();
  op[0][0] = 1;
  op[2][0] = 0;  // keep column 0 a permutation
  const AxiomReport report = Quandle::check_axioms(op);
  CHECK_FALSE(report.pass());
  CHECK_FALSE(report.idempotency.pass);
  CHECK(report.idempotency.witness == std::array<int, 3>{0, -1, -1});
}

TEST_CASE("self distributivity violation is witnessed") {
  // Latin columns and a fixed diagonal, but (0*1)*0 != (0*0)*(1*0).
  const std::vector<std::vector<int>> op{{0, 0, 1}, {2, 1, 0}, {1, 2, 2}};
  const AxiomReport report = Quandle::check_axioms(op);
  CHECK(report.idempotency.pass);
  CHECK(report.right_invertible.pass);
  CHECK_FALSE(report.self_distributive.pass);
  CHECK(report.self_distributive.witness == std::array<int, 3>{0, 1, 0});
}

TEST_CASE("from_table rejects malformed input") {
  CHECK(thrown_code([] { Quandle::from_table({}); }) == Err::MalformedTable);
  CHECK(thrown_code([] { Quandle::from_table({{0, 1}, {1}}); }) == Err::MalformedTable);
  CHECK(thrown_code([] { Quandle::from_table({{0, 2}, {1, 1}}); }) == Err::MalformedTable);
  CHECK(thrown_code([] { Quandle::from_table({{0, -1}, {1, 1}}); }) == Err::MalformedTable);
}

TEST_CASE("from_table surfaces the axiom report on violation") {
  try {
    Quandle::from_table({{0, 0}, {0, 1}});
    FAIL("expected an axiom error");
  } catch (const AxiomError& e) {
    CHECK(e.code() == Err::AxiomViolation);
    CHECK_FALSE(e.report().right_invertible.pass);
  }
}

TEST_CASE("dihedral tables of any size pass from_table") {
  const Quandle q = Quandle::from_table(dihedral_table(10));
  CHECK(q.size() == 10);
  CHECK(q.ring() == nullptr);
  CHECK(q.op(0, 1) == 2);
  CHECK(q.inv_op(2, 1) == 0);
}

TEST_CASE("one element quandle is valid") {
  const Quandle q = Quandle::from_table({{0}});
  CHECK(q.size() == 1);
  CHECK(q.op(0, 0) == 0);
}
