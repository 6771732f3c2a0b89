#include "hyperknot/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "hyperknot/coloring.hpp"
#include "hyperknot/statesum.hpp"

namespace hyperknot {

namespace {

// mt19937_64 with explicit modulo keeps draws identical across standard
// library implementations; the slight modulo bias is irrelevant here.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  uint64_t below(uint64_t bound) { return rng_() % bound; }
  int sign() { return below(2) == 0 ? 1 : -1; }

  BraidWord word(int strands, int max_len) {
    const int len = static_cast<int>(below(static_cast<uint64_t>(max_len) + 1));
    std::vector<BraidLetter> letters;
    letters.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
      letters.push_back(
          {1 + static_cast<int>(below(static_cast<uint64_t>(strands - 1))), sign()});
    }
    return BraidWord(strands, std::move(letters));
  }

  // Resamples until the closure is a knot; 1-component words are common,
  // so this terminates quickly.
  BraidWord knot_word(int strands, int max_len) {
    for (;;) {
      BraidWord w = word(strands, max_len);
      if (w.components() == 1) return w;
    }
  }

 private:
  std::mt19937_64 rng_;
};

std::string word_text(const BraidWord& w) {
  std::ostringstream out;
  out << "strands=" << w.strands() << " word=";
  for (size_t i = 0; i < w.letters().size(); ++i) {
    if (i > 0) out << " ";
    out << w.letters()[i].index * w.letters()[i].sign;
  }
  return out.str();
}

BraidWord insert_letters(const BraidWord& w, size_t pos, const std::vector<BraidLetter>& block) {
  std::vector<BraidLetter> letters = w.letters();
  letters.insert(letters.begin() + static_cast<ptrdiff_t>(pos), block.begin(), block.end());
  return BraidWord(w.strands(), std::move(letters));
}

Cocycle add_cocycles(const Cocycle& x, const Cocycle& y) {
  const AbelianGroup& g = x.group();
  std::vector<std::vector<uint64_t>> t = x.table();
  for (int a = 0; a < x.size(); ++a) {
    for (int b = 0; b < x.size(); ++b) {
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          g.add(t[static_cast<size_t>(a)][static_cast<size_t>(b)], y.at(a, b));
    }
  }
  return Cocycle(g, std::move(t));
}

struct Setup {
  std::string name;
  Quandle q;
  Cocycle phi;
};

std::vector<Setup> make_setups() {
  const Quandle dihedral3 = Quandle::alexander(RingSpec::make(3, {1, 1}));
  const Quandle gf4 = Quandle::alexander(RingSpec::make(2, {1, 1, 1}));
  const AbelianGroup z3({3});
  const AbelianGroup z2({2});

  std::vector<Setup> setups;
  setups.push_back({"dihedral3+Z3/zero", dihedral3, Cocycle::zero(z3, 3)});
  setups.push_back({"dihedral3+Z3/coboundary", dihedral3, coboundary(dihedral3, z3, {0, 1, 2})});
  setups.push_back({"gf4+Z2/zero", gf4, Cocycle::zero(z2, 4)});
  setups.push_back({"gf4+Z2/coboundary", gf4, coboundary(gf4, z2, {0, 1, 1, 0})});
  setups.push_back({"gf4+Z2/noncoboundary", gf4,
                    Cocycle(z2, {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}})});
  return setups;
}

using PairMaker = std::function<std::pair<BraidWord, BraidWord>(Sampler&)>;

std::pair<BraidWord, BraidWord> braid_relation_pair(Sampler& rng) {
  const int n = 3 + static_cast<int>(rng.below(2));
  const BraidWord base = rng.word(n, 8);
  const int i = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - 2)));
  const size_t pos = rng.below(base.length() + 1);
  return {insert_letters(base, pos, {{i, 1}, {i + 1, 1}, {i, 1}}),
          insert_letters(base, pos, {{i + 1, 1}, {i, 1}, {i + 1, 1}})};
}

std::pair<BraidWord, BraidWord> far_commutation_pair(Sampler& rng) {
  const BraidWord base = rng.word(4, 8);
  const size_t pos = rng.below(base.length() + 1);
  const int s1 = rng.sign();
  const int s3 = rng.sign();
  return {insert_letters(base, pos, {{1, s1}, {3, s3}}),
          insert_letters(base, pos, {{3, s3}, {1, s1}})};
}

std::pair<BraidWord, BraidWord> conjugation_pair(Sampler& rng) {
  const int n = 2 + static_cast<int>(rng.below(3));
  const BraidWord w = rng.word(n, 8);
  const BraidLetter g{1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - 1))), rng.sign()};
  const BraidWord conj =
      BraidWord(n, {g}).concat(w).concat(BraidWord(n, {{g.index, -g.sign}}));
  return {w, conj};
}

std::pair<BraidWord, BraidWord> stabilization_pair(Sampler& rng) {
  const int n = 2 + static_cast<int>(rng.below(3));
  const BraidWord w = rng.word(n, 8);
  std::vector<BraidLetter> letters = w.letters();
  letters.push_back({n, rng.sign()});
  return {w, BraidWord(n + 1, std::move(letters))};
}

std::pair<BraidWord, BraidWord> r2_pair(Sampler& rng) {
  const int n = 2 + static_cast<int>(rng.below(3));
  const BraidWord w = rng.word(n, 8);
  const int i = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
  const int s = rng.sign();
  const size_t pos = rng.below(w.length() + 1);
  return {w, insert_letters(w, pos, {{i, s}, {i, -s}})};
}

PropertyResult run_pairs(const std::string& name, const Setup& s, int cases, uint64_t seed,
                         const PairMaker& make) {
  Sampler rng(seed);
  PropertyResult pr;
  pr.name = name + "[" + s.name + "]";
  for (int i = 0; i < cases; ++i) {
    const std::pair<BraidWord, BraidWord> pair = make(rng);
    ++pr.cases;
    if (cjkls_state_sum(s.q, pair.first, s.phi) != cjkls_state_sum(s.q, pair.second, s.phi)) {
      ++pr.failures;
      if (pr.first_failure.empty()) {
        pr.first_failure = word_text(pair.first) + " vs " + word_text(pair.second);
      }
    }
  }
  return pr;
}

PropertyResult run_oracle(const std::string& quandle_name, const Quandle& q, int cases,
                          uint64_t seed) {
  Sampler rng(seed);
  PropertyResult pr;
  pr.name = "coloring_oracle[" + quandle_name + "]";
  for (int i = 0; i < cases; ++i) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const BraidWord w = rng.word(n, 8);
    ++pr.cases;
    if (enumerate_colorings(q, w) != enumerate_colorings_burau(q, w)) {
      ++pr.failures;
      if (pr.first_failure.empty()) pr.first_failure = word_text(w);
    }
  }
  return pr;
}

PropertyResult run_triviality(const std::string& name, const Quandle& q,
                              const AbelianGroup& group, int cases, uint64_t seed) {
  Sampler rng(seed);
  PropertyResult pr;
  pr.name = "coboundary_trivial[" + name + "]";
  for (int i = 0; i < cases; ++i) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const BraidWord w = rng.knot_word(n, 8);
    std::vector<uint64_t> gamma(static_cast<size_t>(q.size()));
    for (uint64_t& v : gamma) v = rng.below(group.size());
    const StateSum z = cjkls_state_sum(q, w, coboundary(q, group, gamma));
    const uint64_t colorings = enumerate_colorings(q, w).size();
    ++pr.cases;
    bool trivial = z.counts[0] == colorings;
    for (size_t g = 1; g < z.counts.size() && trivial; ++g) trivial = z.counts[g] == 0;
    if (!trivial) {
      ++pr.failures;
      if (pr.first_failure.empty()) pr.first_failure = word_text(w);
    }
  }
  return pr;
}

PropertyResult run_cohomologous(const Setup& s, int cases, uint64_t seed) {
  Sampler rng(seed);
  PropertyResult pr;
  pr.name = "cohomologous_equal[" + s.name + "]";
  const AbelianGroup& group = s.phi.group();
  for (int i = 0; i < cases; ++i) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const BraidWord w = rng.knot_word(n, 8);
    std::vector<uint64_t> gamma(static_cast<size_t>(s.q.size()));
    for (uint64_t& v : gamma) v = rng.below(group.size());
    const Cocycle shifted = add_cocycles(s.phi, coboundary(s.q, group, gamma));
    ++pr.cases;
    if (cjkls_state_sum(s.q, w, s.phi) != cjkls_state_sum(s.q, w, shifted)) {
      ++pr.failures;
      if (pr.first_failure.empty()) pr.first_failure = word_text(w);
    }
  }
  return pr;
}

}  // namespace

bool SelftestResult::pass() const {
  for (const PropertyResult& pr : properties) {
    if (pr.failures > 0) return false;
  }
  return true;
}

int SelftestResult::total_cases() const {
  int sum = 0;
  for (const PropertyResult& pr : properties) sum += pr.cases;
  return sum;
}

int SelftestResult::total_failures() const {
  int sum = 0;
  for (const PropertyResult& pr : properties) sum += pr.failures;
  return sum;
}

SelftestResult run_selftest(const SelftestConfig& config) {
  const std::vector<Setup> setups = make_setups();
  const std::vector<std::pair<std::string, PairMaker>> moves = {
      {"braid_relation", braid_relation_pair},
      {"far_commutation", far_commutation_pair},
      {"conjugation", conjugation_pair},
      {"stabilization", stabilization_pair},
      {"r2_insertion", r2_pair},
  };

  SelftestResult result;
  uint64_t salt = 1;
  for (const Setup& s : setups) {
    for (const std::pair<std::string, PairMaker>& move : moves) {
      result.properties.push_back(
          run_pairs(move.first, s, config.words, config.seed * 1000003 + salt++, move.second));
    }
  }
  result.properties.push_back(
      run_oracle("dihedral3", setups[0].q, config.words, config.seed * 1000003 + salt++));
  result.properties.push_back(
      run_oracle("gf4", setups[2].q, config.words, config.seed * 1000003 + salt++));
  result.properties.push_back(run_triviality("dihedral3+Z3", setups[0].q,
                                             setups[0].phi.group(), config.triviality_words,
                                             config.seed * 1000003 + salt++));
  result.properties.push_back(run_triviality("gf4+Z2", setups[2].q, setups[2].phi.group(),
                                             config.triviality_words,
                                             config.seed * 1000003 + salt++));
  for (const Setup& s : setups) {
    result.properties.push_back(
        run_cohomologous(s, config.words, config.seed * 1000003 + salt++));
  }
  return result;
}

}  // namespace hyperknot
