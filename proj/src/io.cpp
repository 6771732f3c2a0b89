#include "hyperknot/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hyperknot/error.hpp"

namespace hyperknot {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Err::MalformedDocument, what);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) malformed("expected an object with key '" + std::string(key) + "'");
  auto it = doc.find(key);
  if (it == doc.end()) malformed("missing key '" + std::string(key) + "'");
  return *it;
}

int64_t as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return v.get<int64_t>();
}

std::vector<int64_t> as_int_array(const Json& v, const char* what) {
  if (!v.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<int64_t> out;
  out.reserve(v.size());
  for (const Json& e : v) out.push_back(as_int(e, what));
  return out;
}

}  // namespace

Json ring_to_json(const RingSpec& spec) {
  return Json{{"p", spec.p()}, {"h", spec.h()}};
}

RingSpecPtr ring_from_json(const Json& doc) {
  const int64_t p = as_int(field(doc, "p"), "p");
  return RingSpec::make(p, as_int_array(field(doc, "h"), "h"));
}

Json quandle_to_json(const Quandle& q) {
  Json doc{{"n", q.size()}, {"op", q.table()}};
  if (q.ring()) doc["ring"] = ring_to_json(*q.ring());
  return doc;
}

std::vector<std::vector<int>> quandle_table_from_json(const Json& doc) {
  const int64_t n = as_int(field(doc, "n"), "n");
  const Json& op_doc = field(doc, "op");
  if (!op_doc.is_array()) malformed("op must be an array of rows");
  std::vector<std::vector<int>> op;
  op.reserve(op_doc.size());
  for (const Json& row_doc : op_doc) {
    std::vector<int> row;
    for (int64_t v : as_int_array(row_doc, "op row")) {
      if (v < 0 || v >= n) malformed("op entry " + std::to_string(v) + " outside [0, n)");
      row.push_back(static_cast<int>(v));
    }
    if (static_cast<int64_t>(row.size()) != n) malformed("op rows must have n entries");
    op.push_back(std::move(row));
  }
  if (n != static_cast<int64_t>(op.size())) {
    malformed("n = " + std::to_string(n) + " does not match " + std::to_string(op.size()) +
              " table rows");
  }
  return op;
}

Quandle quandle_from_json(const Json& doc) {
  std::vector<std::vector<int>> op = quandle_table_from_json(doc);
  if (doc.contains("ring")) {
    const Quandle q = Quandle::alexander(ring_from_json(doc.at("ring")));
    if (q.table() != op) malformed("declared ring does not reproduce the stored table");
    return q;
  }
  return Quandle::from_table(op);
}

Json group_to_json(const AbelianGroup& group) { return Json{{"orders", group.orders()}}; }

AbelianGroup group_from_json(const Json& doc) {
  std::vector<uint64_t> orders;
  for (int64_t v : as_int_array(field(doc, "orders"), "orders")) {
    if (v < 0) malformed("orders must be nonnegative");
    orders.push_back(static_cast<uint64_t>(v));
  }
  return AbelianGroup(std::move(orders));
}

Json cocycle_to_json(const Cocycle& phi) {
  const AbelianGroup& g = phi.group();
  Json table = Json::array();
  for (int a = 0; a < phi.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < phi.size(); ++b) {
      row.push_back(g.decode(phi.at(a, b)));
    }
    table.push_back(std::move(row));
  }
  return Json{{"orders", g.orders()}, {"phi", std::move(table)}};
}

Cocycle cocycle_from_json(const Json& doc) {
  AbelianGroup group = group_from_json(doc);
  const Json& table_doc = field(doc, "phi");
  if (!table_doc.is_array()) malformed("phi must be an array of rows");
  std::vector<std::vector<uint64_t>> phi;
  phi.reserve(table_doc.size());
  for (const Json& row_doc : table_doc) {
    if (!row_doc.is_array()) malformed("phi rows must be arrays");
    std::vector<uint64_t> row;
    row.reserve(row_doc.size());
    for (const Json& cell : row_doc) {
      std::vector<uint64_t> tuple;
      for (int64_t v : as_int_array(cell, "phi entry")) {
        if (v < 0) malformed("phi entries must be nonnegative");
        tuple.push_back(static_cast<uint64_t>(v));
      }
      row.push_back(group.encode(tuple));
    }
    phi.push_back(std::move(row));
  }
  return Cocycle(std::move(group), std::move(phi));
}

Json statesum_to_json(const StateSum& z) {
  return Json{{"orders", z.group.orders()}, {"counts", z.counts}};
}

Json free_energy_to_json(const FreeEnergy& f) {
  Json out = Json::array();
  for (const std::optional<double>& v : f) {
    if (v) {
      out.push_back(*v);
    } else {
      out.push_back(nullptr);
    }
  }
  return out;
}

Json braid_to_json(const BraidWord& w) {
  Json letters = Json::array();
  for (const BraidLetter& l : w.letters()) {
    letters.push_back(Json::array({l.index, l.sign}));
  }
  return Json{{"strands", w.strands()}, {"letters", std::move(letters)}};
}

BraidWord braid_from_json(const Json& doc) {
  const int strands = static_cast<int>(as_int(field(doc, "strands"), "strands"));
  const Json& letters_doc = field(doc, "letters");
  if (!letters_doc.is_array()) malformed("letters must be an array");
  std::vector<BraidLetter> letters;
  letters.reserve(letters_doc.size());
  for (const Json& pair : letters_doc) {
    const std::vector<int64_t> entry = as_int_array(pair, "letter");
    if (entry.size() != 2) malformed("letters must be [index, sign] pairs");
    letters.push_back({static_cast<int>(entry[0]), static_cast<int>(entry[1])});
  }
  return BraidWord(strands, std::move(letters));
}

namespace {

const char* mode_name(CrossingMode mode) {
  return mode == CrossingMode::murasugi ? "murasugi" : "diagram";
}

const char* source_name(OrderSource source) {
  return source == OrderSource::burau ? "burau" : "detected";
}

Json row_to_json(const SequenceRow& row) {
  Json doc{{"n", row.n},
           {"components", row.components},
           {"word_length", row.word_length},
           {"crossing_count", row.crossing_count},
           {"counts", row.sum.counts}};
  doc["fepc_norm"] = row.fepc_norm ? Json(*row.fepc_norm) : Json(nullptr);
  doc["period_verified"] = row.period_verified ? Json(*row.period_verified) : Json(nullptr);
  return doc;
}

}  // namespace

Json report_to_json(const SequenceReport& report) {
  Json doc;
  doc["crossing_mode"] = mode_name(report.crossing_mode);
  doc["order_source"] = source_name(report.order_source);
  doc["m"] = report.burau_order ? Json(*report.burau_order) : Json(nullptr);
  doc["group_size"] = report.group_size;
  doc["period"] = report.period;
  doc["orders"] = report.rows.empty() ? Json::array() : Json(report.rows[0].sum.group.orders());
  doc["bound_constant"] = report.bound_constant;
  doc["periodicity_ok"] = report.periodicity_ok;
  Json distinct = Json::array();
  for (const StateSum& z : report.distinct_sums) distinct.push_back(statesum_to_json(z));
  doc["distinct_sums"] = std::move(distinct);
  Json rows = Json::array();
  for (const SequenceRow& row : report.rows) rows.push_back(row_to_json(row));
  doc["rows"] = std::move(rows);
  return doc;
}

std::string report_to_csv(const SequenceReport& report,
                          const std::vector<std::string>& extra_headers) {
  std::ostringstream out;
  out << "# m=" << (report.burau_order ? std::to_string(*report.burau_order) : "none")
      << " group_size=" << report.group_size << " period=" << report.period
      << " order_source=" << source_name(report.order_source)
      << " crossing_mode=" << mode_name(report.crossing_mode)
      << " distinct_sums=" << report.distinct_sums.size()
      << " bound_constant=" << format_double(report.bound_constant)
      << " periodicity_ok=" << (report.periodicity_ok ? 1 : 0) << "\n";
  for (const std::string& line : extra_headers) {
    out << "# " << line << "\n";
  }
  out << "n,components,crossing_count,crossing_mode,counts,fepc_norm,period_verified\n";
  for (const SequenceRow& row : report.rows) {
    out << row.n << "," << row.components << "," << row.crossing_count << ","
        << mode_name(report.crossing_mode) << ",";
    for (size_t g = 0; g < row.sum.counts.size(); ++g) {
      if (g > 0) out << ";";
      out << row.sum.counts[g];
    }
    out << ",";
    if (row.fepc_norm) out << format_double(*row.fepc_norm);
    out << ",";
    if (row.period_verified) out << (*row.period_verified ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed("'" + path + "' is not valid JSON: " + e.what());
  }
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) malformed("cannot write '" + path + "'");
  out << text;
  if (!out) malformed("write to '" + path + "' failed");
}

}  // namespace hyperknot
