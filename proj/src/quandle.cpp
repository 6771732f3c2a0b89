#include "hyperknot/quandle.hpp"

#include <utility>

namespace hyperknot {

std::string AxiomReport::describe() const {
  if (pass()) return "all axioms hold";
  std::string s;
  auto add = [&s](const std::string& part) {
    if (!s.empty()) s += "; ";
    s += part;
  };
  if (!idempotency.pass)
    add("idempotency fails at a=" + std::to_string(idempotency.witness[0]));
  if (!right_invertible.pass)
    add("column " + std::to_string(right_invertible.witness[0]) + " never yields " +
        std::to_string(right_invertible.witness[1]));
  if (!self_distributive.pass)
    add("self-distributivity fails at (" + std::to_string(self_distributive.witness[0]) + "," +
        std::to_string(self_distributive.witness[1]) + "," +
        std::to_string(self_distributive.witness[2]) + ")");
  return s;
}

AxiomReport Quandle::check_axioms(const std::vector<std::vector<int>>& op) {
  const int n = static_cast<int>(op.size());
  if (n == 0) throw Error(Err::MalformedTable, "empty table");
  for (const auto& row : op) {
    if (static_cast<int>(row.size()) != n)
      throw Error(Err::MalformedTable, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(Err::MalformedTable, "entry out of range");
  }

  AxiomReport report;
  for (int a = 0; a < n; ++a) {
    if (op[a][a] != a) {
      report.idempotency = {false, {a, -1, -1}};
      break;
    }
  }
  for (int b = 0; b < n && report.right_invertible.pass; ++b) {
    std::vector<char> hit(n, 0);
    for (int a = 0; a < n; ++a) hit[op[a][b]] = 1;
    for (int v = 0; v < n; ++v) {
      if (!hit[v]) {
        report.right_invertible = {false, {b, v, -1}};
        break;
      }
    }
  }
  for (int a = 0; a < n && report.self_distributive.pass; ++a)
    for (int b = 0; b < n && report.self_distributive.pass; ++b)
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[op[a][c]][op[b][c]]) {
          report.self_distributive = {false, {a, b, c}};
          break;
        }
  return report;
}

Quandle::Quandle(std::vector<std::vector<int>> op, RingSpecPtr ring)
    : n_(static_cast<int>(op.size())), op_(std::move(op)), ring_(std::move(ring)) {
  inv_op_.assign(n_, std::vector<int>(n_, -1));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) inv_op_[op_[a][b]][b] = a;
}

Quandle Quandle::from_table(std::vector<std::vector<int>> op, RingSpecPtr ring) {
  AxiomReport report = check_axioms(op);
  if (!report.pass()) throw AxiomError(std::move(report));
  return Quandle(std::move(op), std::move(ring));
}

Quandle Quandle::alexander(const RingSpecPtr& spec) {
  const uint64_t n64 = spec->size();
  if (n64 > (uint64_t{1} << 20)) throw Error(Err::TooLarge, "quandle would have 2^20+ elements");
  const int n = static_cast<int>(n64);

  std::vector<RingElement> elems;
  elems.reserve(n);
  for (int i = 0; i < n; ++i) elems.push_back(spec->from_index(i));

  const RingElement t = spec->t();
  const RingElement omt = spec->one_minus_t();
  std::vector<std::vector<int>> op(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    RingElement ta = t * elems[a];
    for (int b = 0; b < n; ++b)
      op[a][b] = static_cast<int>((ta + omt * elems[b]).index());
  }
  return from_table(std::move(op), spec);
}

}  // namespace hyperknot
