#include "hyperknot/cocycle.hpp"

#include <algorithm>
#include <string>

#include "hyperknot/error.hpp"
#include "modsolve.hpp"

namespace hyperknot {

namespace {

constexpr uint64_t kMaxGroupSize = uint64_t(1) << 62;

}  // namespace

AbelianGroup::AbelianGroup(std::vector<uint64_t> orders) : orders_(std::move(orders)), size_(1) {
  if (orders_.empty()) {
    throw Error(Err::BadParameters, "group needs at least one cyclic factor");
  }
  for (uint64_t q : orders_) {
    if (q < 2) {
      throw Error(Err::BadParameters, "cyclic factor orders must be at least 2");
    }
    if (size_ > kMaxGroupSize / q) {
      throw Error(Err::TooLarge, "group order exceeds 2^62");
    }
    size_ *= q;
  }
}

uint64_t AbelianGroup::checked(uint64_t element) const {
  if (element >= size_) {
    throw Error(Err::IndexOutOfRange, "group element index " + std::to_string(element) +
                                          " outside [0, " + std::to_string(size_) + ")");
  }
  return element;
}

std::vector<uint64_t> AbelianGroup::decode(uint64_t element) const {
  checked(element);
  std::vector<uint64_t> tuple(orders_.size());
  for (size_t j = orders_.size(); j-- > 0;) {
    tuple[j] = element % orders_[j];
    element /= orders_[j];
  }
  return tuple;
}

uint64_t AbelianGroup::encode(const std::vector<uint64_t>& tuple) const {
  if (tuple.size() != orders_.size()) {
    throw Error(Err::ShapeMismatch, "tuple has " + std::to_string(tuple.size()) +
                                        " entries for rank " + std::to_string(orders_.size()));
  }
  uint64_t element = 0;
  for (size_t j = 0; j < orders_.size(); ++j) {
    if (tuple[j] >= orders_[j]) {
      throw Error(Err::IndexOutOfRange, "tuple entry " + std::to_string(tuple[j]) +
                                            " outside factor order " + std::to_string(orders_[j]));
    }
    element = element * orders_[j] + tuple[j];
  }
  return element;
}

uint64_t AbelianGroup::add(uint64_t a, uint64_t b) const {
  checked(a);
  checked(b);
  uint64_t out = 0;
  uint64_t scale = 1;
  // Componentwise sum, walking digits from the least significant factor.
  for (size_t j = orders_.size(); j-- > 0;) {
    const uint64_t q = orders_[j];
    out += ((a % q + b % q) % q) * scale;
    a /= q;
    b /= q;
    scale *= q;
  }
  return out;
}

uint64_t AbelianGroup::neg(uint64_t a) const {
  checked(a);
  uint64_t out = 0;
  uint64_t scale = 1;
  for (size_t j = orders_.size(); j-- > 0;) {
    const uint64_t q = orders_[j];
    out += ((q - a % q) % q) * scale;
    a /= q;
    scale *= q;
  }
  return out;
}

uint64_t AbelianGroup::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

Cocycle::Cocycle(AbelianGroup group, std::vector<std::vector<uint64_t>> phi)
    : group_(std::move(group)), phi_(std::move(phi)) {
  const size_t n = phi_.size();
  if (n == 0) {
    throw Error(Err::ShapeMismatch, "cocycle table is empty");
  }
  for (const std::vector<uint64_t>& row : phi_) {
    if (row.size() != n) {
      throw Error(Err::ShapeMismatch, "cocycle table is not square");
    }
    for (uint64_t v : row) {
      if (v >= group_.size()) {
        throw Error(Err::IndexOutOfRange,
                    "cocycle entry " + std::to_string(v) + " outside the group");
      }
    }
  }
}

Cocycle Cocycle::zero(AbelianGroup group, int n) {
  if (n < 1) {
    throw Error(Err::ShapeMismatch, "cocycle table needs a positive size");
  }
  std::vector<std::vector<uint64_t>> phi(static_cast<size_t>(n),
                                         std::vector<uint64_t>(static_cast<size_t>(n), 0));
  return Cocycle(std::move(group), std::move(phi));
}

std::string CocycleViolation::describe() const {
  if (diagonal()) {
    return "diagonal violation: phi[" + std::to_string(a) + "][" + std::to_string(a) +
           "] is not zero";
  }
  return "cocycle condition fails at (a, b, c) = (" + std::to_string(a) + ", " +
         std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::optional<CocycleViolation> cocycle_check(const Quandle& q, const Cocycle& phi) {
  const int n = q.size();
  if (phi.size() != n) {
    throw Error(Err::ShapeMismatch, "cocycle table size " + std::to_string(phi.size()) +
                                        " does not match quandle size " + std::to_string(n));
  }
  for (int a = 0; a < n; ++a) {
    if (phi.at(a, a) != 0) return CocycleViolation{a, -1, -1};
  }
  const AbelianGroup& g = phi.group();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const uint64_t lhs = g.add(phi.at(a, b), phi.at(q.op(a, b), c));
        const uint64_t rhs = g.add(phi.at(a, c), phi.at(q.op(a, c), q.op(b, c)));
        if (lhs != rhs) return CocycleViolation{a, b, c};
      }
    }
  }
  return std::nullopt;
}

Cocycle coboundary(const Quandle& q, const AbelianGroup& group,
                   const std::vector<uint64_t>& gamma) {
  const int n = q.size();
  if (static_cast<int>(gamma.size()) != n) {
    throw Error(Err::ShapeMismatch, "gamma has " + std::to_string(gamma.size()) +
                                        " values for quandle size " + std::to_string(n));
  }
  std::vector<std::vector<uint64_t>> phi(static_cast<size_t>(n),
                                         std::vector<uint64_t>(static_cast<size_t>(n), 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      phi[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          group.sub(gamma[static_cast<size_t>(a)], gamma[static_cast<size_t>(q.op(a, b))]);
    }
  }
  return Cocycle(group, std::move(phi));
}

std::vector<Cocycle> search_cocycles(const Quandle& q, const AbelianGroup& group,
                                     const SearchLimits& limits) {
  const int n = q.size();
  if (n > limits.max_quandle_size) {
    throw Error(Err::TooLarge, "search limited to quandles of size " +
                                   std::to_string(limits.max_quandle_size) + ", got " +
                                   std::to_string(n));
  }
  if (group.size() > limits.max_group_size) {
    throw Error(Err::TooLarge, "search limited to groups of order " +
                                   std::to_string(limits.max_group_size) + ", got " +
                                   std::to_string(group.size()));
  }

  // Unknowns are the table cells, row-major; conditions are Z-linear and
  // act componentwise, so each cyclic factor is an independent system.
  const size_t vars = static_cast<size_t>(n) * static_cast<size_t>(n);
  const auto var = [n](int a, int b) {
    return static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b);
  };
  std::vector<std::vector<int64_t>> system;
  for (int a = 0; a < n; ++a) {
    std::vector<int64_t> row(vars, 0);
    row[var(a, a)] = 1;
    system.push_back(std::move(row));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        std::vector<int64_t> row(vars, 0);
        row[var(a, b)] += 1;
        row[var(q.op(a, b), c)] += 1;
        row[var(a, c)] -= 1;
        row[var(q.op(a, c), q.op(b, c))] -= 1;
        system.push_back(std::move(row));
      }
    }
  }
  const std::vector<int64_t> rhs(system.size(), 0);

  std::vector<std::vector<std::vector<uint64_t>>> parts;
  parts.reserve(group.rank());
  uint64_t total = 1;
  for (uint64_t order : group.orders()) {
    parts.push_back(internal::solve_linear_mod(system, rhs, order, limits.max_solutions));
    if (parts.back().size() > limits.max_solutions / total) {
      throw Error(Err::TooLarge, "cocycle solution set exceeds " +
                                     std::to_string(limits.max_solutions) + " tables");
    }
    total *= parts.back().size();
  }

  std::vector<std::vector<std::vector<uint64_t>>> tables;
  tables.reserve(total);
  std::vector<size_t> pick(parts.size(), 0);
  std::vector<uint64_t> tuple(group.rank());
  for (uint64_t k = 0; k < total; ++k) {
    std::vector<std::vector<uint64_t>> phi(static_cast<size_t>(n),
                                           std::vector<uint64_t>(static_cast<size_t>(n), 0));
    for (size_t v = 0; v < vars; ++v) {
      for (size_t j = 0; j < parts.size(); ++j) {
        tuple[j] = parts[j][pick[j]][v];
      }
      phi[v / static_cast<size_t>(n)][v % static_cast<size_t>(n)] = group.encode(tuple);
    }
    tables.push_back(std::move(phi));
    for (size_t j = parts.size(); j-- > 0;) {
      if (++pick[j] < parts[j].size()) break;
      pick[j] = 0;
    }
  }

  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());

  std::vector<Cocycle> out;
  out.reserve(tables.size());
  for (std::vector<std::vector<uint64_t>>& t : tables) {
    out.emplace_back(group, std::move(t));
  }
  return out;
}

bool is_coboundary(const Quandle& q, const Cocycle& phi, uint64_t cap) {
  const int n = q.size();
  if (phi.size() != n) {
    throw Error(Err::ShapeMismatch, "cocycle table size does not match the quandle");
  }
  const AbelianGroup& g = phi.group();
  const uint64_t s = g.size();
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / s) {
      throw Error(Err::SearchSpaceTooLarge, "coboundary scan " + std::to_string(s) + "^" +
                                                std::to_string(n) + " exceeds cap " +
                                                std::to_string(cap));
    }
    total *= s;
  }

  std::vector<uint64_t> gamma(static_cast<size_t>(n), 0);
  for (uint64_t k = 0; k < total; ++k) {
    uint64_t rest = k;
    for (size_t j = static_cast<size_t>(n); j-- > 0;) {
      gamma[j] = rest % s;
      rest /= s;
    }
    bool match = true;
    for (int a = 0; a < n && match; ++a) {
      for (int b = 0; b < n && match; ++b) {
        match = g.sub(gamma[static_cast<size_t>(a)], gamma[static_cast<size_t>(q.op(a, b))]) ==
                phi.at(a, b);
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace hyperknot
