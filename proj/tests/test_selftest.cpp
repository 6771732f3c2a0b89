#include <set>
#include <string>

#include "doctest.h"
#include "hyperknot/selftest.hpp"

using hyperknot::run_selftest;
using hyperknot::SelftestConfig;
using hyperknot::SelftestResult;

TEST_CASE("the randomized suite passes on a small budget") {
  SelftestConfig config;
  config.seed = 0;
  config.words = 5;
  config.triviality_words = 5;
  const SelftestResult result = run_selftest(config);
  CHECK(result.pass());
  CHECK(result.total_failures() == 0);
  // 5 closure moves x 5 setups, 2 oracle runs, 2 triviality runs, 5 cohomology runs.
  CHECK(result.properties.size() == 34);
  for (const auto& p : result.properties) {
    CHECK(p.cases >= 5);
    CHECK(p.failures == 0);
    CHECK(p.first_failure.empty());
  }
}

TEST_CASE("property names cover every configured family") {
  SelftestConfig config;
  config.words = 3;
  config.triviality_words = 3;
  const SelftestResult result = run_selftest(config);
  std::set<std::string> names;
  for (const auto& p : result.properties) names.insert(p.name);
  CHECK(names.size() == result.properties.size());
  CHECK(names.count("braid_relation[dihedral3+Z3/zero]") == 1);
  CHECK(names.count("stabilization[gf4+Z2/noncoboundary]") == 1);
  CHECK(names.count("r2_insertion[gf4+Z2/coboundary]") == 1);
  CHECK(names.count("coloring_oracle[dihedral3]") == 1);
  CHECK(names.count("coloring_oracle[gf4]") == 1);
  CHECK(names.count("coboundary_trivial[dihedral3+Z3]") == 1);
  CHECK(names.count("coboundary_trivial[gf4+Z2]") == 1);
  CHECK(names.count("cohomologous_equal[gf4+Z2/noncoboundary]") == 1);
}

TEST_CASE("identical seeds reproduce identical results") {
  SelftestConfig config;
  config.seed = 42;
  config.words = 4;
  config.triviality_words = 4;
  const SelftestResult a = run_selftest(config);
  const SelftestResult b = run_selftest(config);
  REQUIRE(a.properties.size() == b.properties.size());
  for (size_t i = 0; i < a.properties.size(); ++i) {
    CHECK(a.properties[i].name == b.properties[i].name);
    CHECK(a.properties[i].cases == b.properties[i].cases);
    CHECK(a.properties[i].failures == b.properties[i].failures);
  }
  CHECK(a.total_cases() == b.total_cases());
}

TEST_CASE("other seeds pass as well") {
  SelftestConfig config;
  config.seed = 7;
  config.words = 4;
  config.triviality_words = 4;
  CHECK(run_selftest(config).pass());
}
