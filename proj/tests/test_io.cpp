#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyperknot/io.hpp"
#include "hyperknot/sequence.hpp"
#include "support.hpp"

using hyperknot::AbelianGroup;
using hyperknot::analyze_sequence;
using hyperknot::BraidWord;
using hyperknot::Cocycle;
using hyperknot::CrossingMode;
using hyperknot::Err;
using hyperknot::format_double;
using hyperknot::Json;
using hyperknot::Quandle;
using hyperknot::SequenceReport;
using hyperknot::StateSum;
using namespace hyperknot_test;

namespace {

SequenceReport sigma1_report() {
  return analyze_sequence(BraidWord::torus(2, 1), dihedral3(),
                          Cocycle::zero(AbelianGroup({3}), 3), 12, CrossingMode::murasugi);
}

}  // namespace

TEST_CASE("ring documents round trip") {
  const Json doc = hyperknot::ring_to_json(*z3_ring());
  CHECK(doc["p"] == 3);
  CHECK(doc["h"] == Json::array({1, 1}));
  CHECK(hyperknot::ring_from_json(doc)->same_ring(*z3_ring()));
}

TEST_CASE("quandle documents carry and verify their ring") {
  const Json doc = hyperknot::quandle_to_json(dihedral3());
  CHECK(doc["n"] == 3);
  CHECK(doc["op"] == Json(dihedral3().table()));
  REQUIRE(doc.contains("ring"));
  const Quandle q = hyperknot::quandle_from_json(doc);
  CHECK(q.table() == dihedral3().table());
  CHECK(q.ring() != nullptr);
}

TEST_CASE("table only quandle documents load without a ring") {
  Json doc;
  doc["n"] = 10;
  doc["op"] = dihedral_table(10);
  const Quandle q = hyperknot::quandle_from_json(doc);
  CHECK(q.size() == 10);
  CHECK(q.ring() == nullptr);
}

TEST_CASE("a declared ring must reproduce the stored table") {
  Json doc = hyperknot::quandle_to_json(dihedral3());
  doc["op"] = std::vector<std::vector<int>>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
  CHECK(thrown_code([&] { hyperknot::quandle_from_json(doc); }) == Err::MalformedDocument);
}

TEST_CASE("axiom violations surface when loading a quandle") {
  Json doc;
  doc["n"] = 2;
  doc["op"] = std::vector<std::vector<int>>{{0, 0}, {0, 1}};
  // The raw table is still retrievable for diagnostic checking.
  CHECK(hyperknot::quandle_table_from_json(doc) ==
        std::vector<std::vector<int>>{{0, 0}, {0, 1}});
  CHECK(thrown_code([&] { hyperknot::quandle_from_json(doc); }) == Err::AxiomViolation);
}

TEST_CASE("malformed quandle documents are rejected") {
  CHECK(thrown_code([] { hyperknot::quandle_from_json(Json::object()); }) ==
        Err::MalformedDocument);
  Json doc;
  doc["n"] = 2;
  doc["op"] = std::vector<std::vector<int>>{{0}, {0, 1}};
  CHECK(thrown_code([&] { hyperknot::quandle_from_json(doc); }) == Err::MalformedDocument);
  doc["op"] = "nope";
  CHECK(thrown_code([&] { hyperknot::quandle_from_json(doc); }) == Err::MalformedDocument);
}

TEST_CASE("cocycle documents round trip with tuple entries") {
  const Json doc = hyperknot::cocycle_to_json(gf4_noncb());
  CHECK(doc["orders"] == Json::array({2}));
  CHECK(doc["phi"][1][2] == Json::array({1}));
  CHECK(doc["phi"][0][0] == Json::array({0}));
  CHECK(hyperknot::cocycle_from_json(doc) == gf4_noncb());
}

TEST_CASE("group documents round trip") {
  const AbelianGroup g({2, 3});
  CHECK(hyperknot::group_from_json(hyperknot::group_to_json(g)) == g);
  Json doc;
  doc["orders"] = std::vector<int>{};
  CHECK(thrown_code([&] { hyperknot::group_from_json(doc); }) == Err::BadParameters);
  CHECK(thrown_code([] { hyperknot::group_from_json(Json::object()); }) ==
        Err::MalformedDocument);
}

TEST_CASE("state sum documents expose orders and counts") {
  const Json doc = hyperknot::statesum_to_json(StateSum{AbelianGroup({3}), {9, 0, 0}});
  CHECK(doc["orders"] == Json::array({3}));
  CHECK(doc["counts"] == Json::array({9, 0, 0}));
}

TEST_CASE("free energy documents use null for undefined coordinates") {
  const Json doc = hyperknot::free_energy_to_json({std::log(9.0), std::nullopt});
  REQUIRE(doc.size() == 2);
  CHECK(doc[0].get<double>() == doctest::Approx(std::log(9.0)).epsilon(1e-12));
  CHECK(doc[1].is_null());
}

TEST_CASE("braid documents round trip") {
  const BraidWord w = BraidWord::parse("1 -2", 3);
  const Json doc = hyperknot::braid_to_json(w);
  CHECK(doc["strands"] == 3);
  CHECK(doc["letters"] == Json::array({Json::array({1, 1}), Json::array({2, -1})}));
  CHECK(hyperknot::braid_from_json(doc) == w);
}

TEST_CASE("report documents expose the run parameters") {
  const Json doc = hyperknot::report_to_json(sigma1_report());
  CHECK(doc["crossing_mode"] == "murasugi");
  CHECK(doc["order_source"] == "burau");
  CHECK(doc["m"] == 3);
  CHECK(doc["group_size"] == 3);
  CHECK(doc["period"] == 9);
  CHECK(doc["orders"] == Json::array({3}));
  CHECK(doc["periodicity_ok"] == true);
  REQUIRE(doc["rows"].size() == 12);
  const Json& first = doc["rows"][0];
  CHECK(first["n"] == 1);
  CHECK(first["components"] == 1);
  CHECK(first["crossing_count"] == 0);
  CHECK(first["counts"] == Json::array({3, 0, 0}));
  CHECK(first["fepc_norm"].is_null());
  CHECK(first["period_verified"] == true);
  CHECK(doc["distinct_sums"].size() == 2);
  CHECK(doc["distinct_sums"][0]["counts"] == Json::array({3, 0, 0}));
}

TEST_CASE("csv output freezes the documented layout") {
  const std::string text = hyperknot::report_to_csv(sigma1_report(), {"convergence=PASS tail=8 include_links=1"});
  const size_t first_break = text.find('\n');
  REQUIRE(first_break != std::string::npos);
  CHECK(text.substr(0, first_break) ==
        "# m=3 group_size=3 period=9 order_source=burau crossing_mode=murasugi"
        " distinct_sums=2 bound_constant=2.19722457734 periodicity_ok=1");
  CHECK(text.find("\n# convergence=PASS tail=8 include_links=1\n") != std::string::npos);
  CHECK(text.find("\nn,components,crossing_count,crossing_mode,counts,fepc_norm,period_verified\n") !=
        std::string::npos);
  CHECK(text.find("\n1,1,0,murasugi,3;0;0,,1\n") != std::string::npos);
  CHECK(text.find("\n2,2,2,murasugi,3;0;0,0.549306144334,1\n") != std::string::npos);
  // Rows past n_max - period carry no periodicity cell.
  CHECK(text.find("\n12,2,12,murasugi,9;0;0,0.183102048111,\n") != std::string::npos);
}

TEST_CASE("csv marks detected periods") {
  const Quandle q = Quandle::from_table(dihedral3().table());
  const SequenceReport r = analyze_sequence(BraidWord::torus(2, 1), q,
                                            Cocycle::zero(AbelianGroup({3}), 3), 6,
                                            CrossingMode::murasugi);
  const std::string text = hyperknot::report_to_csv(r);
  CHECK(text.rfind("# m=none", 0) == 0);
  CHECK(text.find(" order_source=detected ") != std::string::npos);
}

TEST_CASE("doubles print with twelve significant digits") {
  CHECK(format_double(std::log(9.0)) == "2.19722457734");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("text files round trip and parse failures are flagged") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "hyperknot_io_test.json";
  hyperknot::save_text_file(path.string(), "{\"p\": 3, \"h\": [1, 1]}\n");
  const Json doc = hyperknot::load_json_file(path.string());
  CHECK(doc["p"] == 3);
  hyperknot::save_text_file(path.string(), "not json at all {\n");
  CHECK(thrown_code([&] { hyperknot::load_json_file(path.string()); }) == Err::MalformedDocument);
  fs::remove(path);
  CHECK(thrown_code([&] { hyperknot::load_json_file(path.string()); }) == Err::MalformedDocument);
}
