#include "hyperknot/statesum.hpp"

#include <cmath>
#include <string>

#include "hyperknot/error.hpp"

namespace hyperknot {

StateSum cjkls_state_sum(const Quandle& q, const BraidWord& w, const Cocycle& phi, uint64_t cap) {
  if (phi.size() != q.size()) {
    throw Error(Err::ShapeMismatch, "cocycle table size " + std::to_string(phi.size()) +
                                        " does not match quandle size " + std::to_string(q.size()));
  }
  const AbelianGroup& g = phi.group();
  StateSum z{g, std::vector<uint64_t>(g.size(), 0)};
  for (const Coloring& top : enumerate_colorings(q, w, cap)) {
    const Propagation run = propagate_colors(q, w, top);
    uint64_t weight = 0;
    for (const TraceEntry& t : run.trace) {
      const uint64_t cell = phi.at(t.x, t.y);
      weight = g.add(weight, t.sign > 0 ? cell : g.neg(cell));
    }
    ++z.counts[weight];
  }
  return z;
}

FreeEnergy free_energy(const StateSum& z) {
  FreeEnergy f(z.counts.size());
  for (size_t g = 0; g < z.counts.size(); ++g) {
    if (z.counts[g] > 0) {
      f[g] = std::log(static_cast<double>(z.counts[g]));
    }
  }
  return f;
}

FreeEnergy free_energy_per_crossing(const FreeEnergy& f, uint64_t crossings) {
  if (crossings == 0) {
    throw Error(Err::ZeroCrossings, "free energy per crossing needs a positive crossing count");
  }
  FreeEnergy out(f.size());
  for (size_t g = 0; g < f.size(); ++g) {
    if (f[g]) out[g] = *f[g] / static_cast<double>(crossings);
  }
  return out;
}

double defined_norm(const FreeEnergy& f) {
  double sum = 0.0;
  for (const std::optional<double>& v : f) {
    if (v) sum += *v * *v;
  }
  return std::sqrt(sum);
}

}  // namespace hyperknot
