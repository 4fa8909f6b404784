#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rmc/bforms.hpp"
#include "rmc/nfa.hpp"
#include "rmc/ops.hpp"

namespace rmc::testing {

// Deterministically seeded generator for the randomized property suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(engine_); }
  bool chance(double p) { return std::uniform_real_distribution<double>()(engine_) < p; }

  Nfa nfa(const Alphabet& alphabet, int max_states = 5, double arc_density = 0.25) {
    int n = 1 + below(max_states);
    Nfa out(alphabet, n);
    for (int s = 0; s < n; ++s) {
      if (chance(0.4)) out.add_initial(s);
      if (chance(0.4)) out.add_accepting(s);
      for (Symbol x = 0; x < alphabet.size(); ++x)
        for (int t = 0; t < n; ++t)
          if (chance(arc_density)) out.add_arc(s, x, t);
    }
    if (out.initial().empty()) out.add_initial(below(n));
    out.normalize();
    return out;
  }

  Transducer transducer(const Alphabet& pairs, int max_states = 4, double arc_density = 0.15) {
    Nfa base = nfa(pairs, max_states, arc_density);
    Transducer out(pairs, base.state_count());
    for (int s : base.initial()) out.add_initial(s);
    for (int s : base.accepting()) out.add_accepting(s);
    for (int s = 0; s < base.state_count(); ++s)
      for (const Arc& arc : base.arcs(s)) out.add_arc(s, arc.symbol, arc.target);
    out.normalize();
    return out;
  }

  Word word(const Alphabet& alphabet, int max_len = 5) {
    Word out;
    int len = below(max_len + 1);
    for (int i = 0; i < len; ++i) out.push_back(below(static_cast<int>(alphabet.size())));
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

// All words over `alphabet` of length exactly `len`.
inline std::vector<Word> all_words_of_length(const Alphabet& alphabet, int len) {
  std::vector<Word> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(alphabet.size()));
    for (const Word& w : out)
      for (Symbol x = 0; x < alphabet.size(); ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

inline Word to_word(const Alphabet& alphabet, const std::string& letters) {
  Word out;
  for (char c : letters) {
    auto s = alphabet.index(std::string(1, c));
    if (!s) throw std::runtime_error("unknown letter in test word");
    out.push_back(*s);
  }
  return out;
}

// Bitmask of the single-character letters in `letters`.
inline std::uint32_t letter_mask(const Alphabet& alphabet, const std::string& letters) {
  std::uint32_t mask = 0;
  for (Symbol s : to_word(alphabet, letters)) mask |= 1u << s;
  return mask;
}

// tests_by_pos[j][i] spells row i's letter test at position j.
inline PowerWord make_powerword(const Alphabet& sigma, int bound,
                                const std::vector<std::vector<std::string>>& tests_by_pos) {
  PowerWord phi{sigma, bound, {}};
  for (const auto& tuple : tests_by_pos) {
    std::vector<std::uint32_t> rows;
    rows.reserve(tuple.size());
    for (const auto& test : tuple) rows.push_back(letter_mask(sigma, test));
    phi.letters.push_back(std::move(rows));
  }
  return phi;
}

inline bool contains_powerword(const std::vector<PowerWord>& set, const PowerWord& phi) {
  return std::find(set.begin(), set.end(), phi) != set.end();
}

}  // namespace rmc::testing
