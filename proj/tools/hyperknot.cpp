#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperknot/coloring.hpp"
#include "hyperknot/error.hpp"
#include "hyperknot/io.hpp"
#include "hyperknot/selftest.hpp"
#include "hyperknot/sequence.hpp"
#include "hyperknot/statesum.hpp"

namespace hk = hyperknot;

namespace {

int exit_code_for(const hk::Error& e) {
  switch (e.code()) {
    case hk::Err::TooLarge:
    case hk::Err::SearchSpaceTooLarge:
    case hk::Err::CapExceeded:
      return 3;
    default:
      return 1;
  }
}

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw hk::Error(hk::Err::ParseError, "bad integer '" + tok + "' in list");
    }
  }
  if (out.empty()) {
    throw hk::Error(hk::Err::ParseError, "expected a comma-separated integer list");
  }
  return out;
}

std::string dump(const hk::Json& doc) { return doc.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    hk::save_text_file(out_path, text);
  }
}

hk::Json axiom_to_json(const hk::AxiomCheck& check) {
  hk::Json doc{{"pass", check.pass}};
  if (!check.pass) doc["witness"] = check.witness;
  return doc;
}

int run_quandle_make(int64_t p, const std::string& h_text, const std::string& out_path) {
  const hk::RingSpecPtr ring = hk::RingSpec::make(p, parse_int_list(h_text));
  emit(dump(hk::quandle_to_json(hk::Quandle::alexander(ring))), out_path);
  return 0;
}

int run_quandle_check(const std::string& table_path) {
  const hk::Json doc = hk::load_json_file(table_path);
  const hk::AxiomReport report = hk::Quandle::check_axioms(hk::quandle_table_from_json(doc));
  hk::Json out{{"pass", report.pass()},
               {"idempotency", axiom_to_json(report.idempotency)},
               {"right_invertible", axiom_to_json(report.right_invertible)},
               {"self_distributive", axiom_to_json(report.self_distributive)},
               {"detail", report.describe()}};
  emit(dump(out), "");
  return report.pass() ? 0 : 2;
}

int run_cocycle_search(const std::string& quandle_path, const std::string& orders_text,
                       int select, const std::string& out_path) {
  const hk::Quandle q = hk::quandle_from_json(hk::load_json_file(quandle_path));
  std::vector<uint64_t> orders;
  for (int64_t v : parse_int_list(orders_text)) {
    if (v < 0) throw hk::Error(hk::Err::ParseError, "orders must be nonnegative");
    orders.push_back(static_cast<uint64_t>(v));
  }
  const std::vector<hk::Cocycle> found = hk::search_cocycles(q, hk::AbelianGroup(orders));
  std::vector<hk::Json> docs;
  docs.reserve(found.size());
  for (const hk::Cocycle& phi : found) {
    hk::Json doc = hk::cocycle_to_json(phi);
    doc["coboundary"] = hk::is_coboundary(q, phi);
    docs.push_back(std::move(doc));
  }
  if (select >= 0) {
    if (static_cast<size_t>(select) >= docs.size()) {
      throw hk::Error(hk::Err::IndexOutOfRange,
                      "--select " + std::to_string(select) + " but the search found " +
                          std::to_string(docs.size()) + " cocycles");
    }
    emit(dump(docs[static_cast<size_t>(select)]), out_path);
    return 0;
  }
  hk::Json list = hk::Json::array();
  for (hk::Json& doc : docs) list.push_back(std::move(doc));
  emit(dump(hk::Json{{"count", found.size()}, {"cocycles", std::move(list)}}), out_path);
  return 0;
}

int run_cocycle_check(const std::string& quandle_path, const std::string& phi_path) {
  const hk::Quandle q = hk::quandle_from_json(hk::load_json_file(quandle_path));
  const hk::Cocycle phi = hk::cocycle_from_json(hk::load_json_file(phi_path));
  const std::optional<hk::CocycleViolation> violation = hk::cocycle_check(q, phi);
  if (!violation) {
    emit(dump(hk::Json{{"pass", true}}), "");
    return 0;
  }
  emit(dump(hk::Json{{"pass", false},
                     {"violation", {{"a", violation->a}, {"b", violation->b}, {"c", violation->c}}},
                     {"detail", violation->describe()}}),
       "");
  return 2;
}

int run_invariant(const std::string& braid_text, int strands, const std::string& quandle_path,
                  const std::string& cocycle_path) {
  const hk::BraidWord w = hk::BraidWord::parse(braid_text, strands);
  const hk::Quandle q = hk::quandle_from_json(hk::load_json_file(quandle_path));
  const hk::Cocycle phi = hk::cocycle_from_json(hk::load_json_file(cocycle_path));
  const hk::StateSum z = hk::cjkls_state_sum(q, w, phi);
  hk::Json doc = hk::statesum_to_json(z);
  doc["free_energy"] = hk::free_energy_to_json(hk::free_energy(z));
  doc["components"] = w.components();
  emit(dump(doc), "");
  return 0;
}

struct SequenceArgs {
  int torus_n = 0;
  std::string braid_text;
  int strands = 0;
  int n_max = 0;
  std::string quandle_path;
  std::string cocycle_path;
  std::string crossing;
  std::string format = "csv";
  int tail = 8;
  bool exclude_links = false;
  uint64_t order_cap = 1000000;
  std::string out_path;
};

int run_sequence(const SequenceArgs& args) {
  if ((args.torus_n > 0) == !args.braid_text.empty()) {
    throw hk::Error(hk::Err::BadParameters, "pass exactly one of --torus or --braid");
  }
  const hk::BraidWord base = args.torus_n > 0
                                 ? hk::BraidWord::torus(args.torus_n, 1)
                                 : hk::BraidWord::parse(args.braid_text, args.strands);
  hk::CrossingMode mode;
  if (args.crossing.empty()) {
    mode = args.torus_n > 0 ? hk::CrossingMode::murasugi : hk::CrossingMode::diagram;
  } else {
    mode = args.crossing == "murasugi" ? hk::CrossingMode::murasugi : hk::CrossingMode::diagram;
  }
  const hk::Quandle q = hk::quandle_from_json(hk::load_json_file(args.quandle_path));
  const hk::Cocycle phi = hk::cocycle_from_json(hk::load_json_file(args.cocycle_path));
  const hk::SequenceReport report =
      hk::analyze_sequence(base, q, phi, args.n_max, mode, args.order_cap);
  const hk::Verdict verdict = hk::convergence_check(report, args.tail, !args.exclude_links);
  const std::string verdict_text = verdict == hk::Verdict::pass ? "PASS" : "FAIL";

  if (args.format == "json") {
    hk::Json doc = hk::report_to_json(report);
    doc["convergence"] = verdict_text;
    doc["tail"] = args.tail;
    doc["include_links"] = !args.exclude_links;
    emit(dump(doc), args.out_path);
  } else {
    std::ostringstream extra;
    extra << "convergence=" << verdict_text << " tail=" << args.tail
          << " include_links=" << (args.exclude_links ? 0 : 1);
    emit(hk::report_to_csv(report, {extra.str()}), args.out_path);
  }
  if (!report.periodicity_ok) return 2;
  return verdict == hk::Verdict::pass ? 0 : 4;
}

int run_selftest_cmd(uint64_t seed, int words, int triviality_words) {
  hk::SelftestConfig config;
  config.seed = seed;
  config.words = words;
  config.triviality_words = triviality_words;
  const hk::SelftestResult result = hk::run_selftest(config);
  std::ostringstream out;
  for (const hk::PropertyResult& pr : result.properties) {
    out << pr.name << ": cases=" << pr.cases << " failures=" << pr.failures;
    if (pr.failures > 0) out << " first_failure=(" << pr.first_failure << ")";
    out << "\n";
  }
  out << "selftest: " << (result.pass() ? "PASS" : "FAIL")
      << " properties=" << result.properties.size() << " cases=" << result.total_cases()
      << " failures=" << result.total_failures() << "\n";
  emit(out.str(), "");
  return result.pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle colorings, cocycle state sums, and braid-power sequences"};
  app.require_subcommand(1);

  CLI::App* quandle = app.add_subcommand("quandle", "Build or check quandle tables");
  quandle->require_subcommand(1);
  CLI::App* qmake = quandle->add_subcommand("make", "Alexander quandle over Z_p[T]/(h)");
  qmake->set_help_flag("--help", "print help and exit");  // frees -h/--h for the polynomial
  int64_t make_p = 0;
  std::string make_h, make_out;
  qmake->add_option("--p", make_p, "prime modulus")->required();
  qmake->add_option("--h", make_h, "monic h coefficients, constant first, comma separated")
      ->required();
  qmake->add_option("--out", make_out, "write to a file instead of stdout");
  CLI::App* qcheck = quandle->add_subcommand("check", "Check the quandle axioms of a table");
  std::string check_table;
  qcheck->add_option("--table", check_table, "quandle JSON file")->required();

  CLI::App* cocycle = app.add_subcommand("cocycle", "Search or check 2-cocycles");
  cocycle->require_subcommand(1);
  CLI::App* csearch = cocycle->add_subcommand("search", "All cocycles over a coefficient group");
  std::string search_quandle, search_orders, search_out;
  int search_select = -1;
  csearch->add_option("--quandle", search_quandle, "quandle JSON file")->required();
  csearch->add_option("--orders", search_orders, "cyclic factor orders, comma separated")
      ->required();
  csearch->add_option("--select", search_select, "print only the cocycle at this index");
  csearch->add_option("--out", search_out, "write to a file instead of stdout");
  CLI::App* ccheck = cocycle->add_subcommand("check", "Check the two cocycle conditions");
  std::string ccheck_quandle, ccheck_phi;
  ccheck->add_option("--quandle", ccheck_quandle, "quandle JSON file")->required();
  ccheck->add_option("--phi", ccheck_phi, "cocycle JSON file")->required();

  CLI::App* invariant = app.add_subcommand("invariant", "State sum of one braid closure");
  std::string inv_braid, inv_quandle, inv_cocycle;
  int inv_strands = 0;
  invariant->add_option("--braid", inv_braid, "signed generator indices, e.g. \"1 1 1\"")
      ->required();
  invariant->add_option("--strands", inv_strands, "strand count")->required();
  invariant->add_option("--quandle", inv_quandle, "quandle JSON file")->required();
  invariant->add_option("--cocycle", inv_cocycle, "cocycle JSON file")->required();

  CLI::App* sequence = app.add_subcommand("sequence", "Braid-power sequence report");
  SequenceArgs seq;
  sequence->add_option("--torus", seq.torus_n, "torus strand count; the base word is its generator");
  sequence->add_option("--braid", seq.braid_text, "base word, signed generator indices");
  sequence->add_option("--strands", seq.strands, "strand count for --braid");
  sequence->add_option("--n-max", seq.n_max, "largest power")->required();
  sequence->add_option("--quandle", seq.quandle_path, "quandle JSON file")->required();
  sequence->add_option("--cocycle", seq.cocycle_path, "cocycle JSON file")->required();
  sequence->add_option("--crossing", seq.crossing, "crossing count mode")
      ->check(CLI::IsMember({"murasugi", "diagram"}));
  sequence->add_option("--format", seq.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sequence->add_option("--tail", seq.tail, "rows in the convergence tail");
  sequence->add_flag("--exclude-links", seq.exclude_links,
                     "convergence tail skips multi-component closures");
  sequence->add_option("--order-cap", seq.order_cap, "Burau matrix order cap");
  sequence->add_option("--out", seq.out_path, "write to a file instead of stdout");

  CLI::App* selftest = app.add_subcommand("selftest", "Seeded randomized property suite");
  uint64_t st_seed = 0;
  int st_words = 200;
  int st_triviality = 100;
  selftest->add_option("--seed", st_seed, "random seed");
  selftest->add_option("--words", st_words, "cases per equivalence property");
  selftest->add_option("--triviality-words", st_triviality, "cases per triviality property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (qmake->parsed()) return run_quandle_make(make_p, make_h, make_out);
    if (qcheck->parsed()) return run_quandle_check(check_table);
    if (csearch->parsed())
      return run_cocycle_search(search_quandle, search_orders, search_select, search_out);
    if (ccheck->parsed()) return run_cocycle_check(ccheck_quandle, ccheck_phi);
    if (invariant->parsed())
      return run_invariant(inv_braid, inv_strands, inv_quandle, inv_cocycle);
    if (sequence->parsed()) return run_sequence(seq);
    if (selftest->parsed()) return run_selftest_cmd(st_seed, st_words, st_triviality);
  } catch (const hk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
