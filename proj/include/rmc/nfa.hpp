#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "rmc/alphabet.hpp"

namespace rmc {

struct Arc {
  Symbol symbol;
  int target;
  auto operator<=>(const Arc&) const = default;
};

// Nondeterministic finite automaton with per-state sorted arc lists.
// Arc lists stay sparse because pair/power alphabets can be huge.
class Nfa {
 public:
  Nfa() = default;
  Nfa(Alphabet alphabet, int state_count);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] int state_count() const noexcept { return state_count_; }

  int add_state();
  void add_initial(int state);
  void add_accepting(int state);
  void add_arc(int from, Symbol symbol, int to);

  // Sorts and dedupes arcs and state sets. Builders call this once after
  // construction; all further mutation must re-normalize.
  void normalize();

  [[nodiscard]] const std::vector<int>& initial() const noexcept { return initial_; }
  [[nodiscard]] const std::vector<int>& accepting() const noexcept { return accepting_; }
  [[nodiscard]] bool is_initial(int state) const;
  [[nodiscard]] bool is_accepting(int state) const;

  [[nodiscard]] const std::vector<Arc>& arcs(int state) const { return arcs_[state]; }
  // Arcs from `state` labeled `symbol` (binary search on the sorted list).
  [[nodiscard]] std::span<const Arc> arcs(int state, Symbol symbol) const;
  [[nodiscard]] std::size_t arc_count() const noexcept;

  [[nodiscard]] bool accepts(const Word& word) const;

 private:
  Alphabet alphabet_;
  int state_count_ = 0;
  std::vector<int> initial_;    // sorted, unique
  std::vector<int> accepting_;  // sorted, unique
  std::vector<char> initial_mask_, accepting_mask_;
  std::vector<std::vector<Arc>> arcs_;
};

// Deterministic complete automaton; the transition table is dense, so a Dfa
// is only materialized over alphabets of moderate size.
class Dfa {
 public:
  Dfa() = default;
  Dfa(Alphabet alphabet, int state_count, int initial_state);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] int state_count() const noexcept { return state_count_; }
  [[nodiscard]] int initial_state() const noexcept { return initial_state_; }

  void set_accepting(int state, bool value = true);
  void set_next(int state, Symbol symbol, int target);

  [[nodiscard]] bool is_accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }
  [[nodiscard]] int next(int state, Symbol symbol) const {
    assert(symbol >= 0 && symbol < alphabet_.size());
    return next_[static_cast<std::size_t>(state)][static_cast<std::size_t>(symbol)];
  }

  [[nodiscard]] bool accepts(const Word& word) const;
  [[nodiscard]] int accepting_count() const;

 private:
  Alphabet alphabet_;
  int state_count_ = 0;
  int initial_state_ = 0;
  std::vector<char> accepting_;
  std::vector<std::vector<int>> next_;
};

// A transducer is an Nfa whose alphabet is a pair alphabet; arcs carry
// left/right letter pairs and the recognized relation is length-preserving.
class Transducer : public Nfa {
 public:
  Transducer() = default;
  Transducer(Alphabet pair_alphabet, int state_count);

  [[nodiscard]] Alphabet left_alphabet() const { return alphabet().left(); }
  [[nodiscard]] Alphabet right_alphabet() const { return alphabet().right(); }

  void add_pair_arc(int from, Symbol l, Symbol r, int to) {
    add_arc(from, alphabet().pair_symbol(l, r), to);
  }

  [[nodiscard]] bool accepts_pair(const Word& l, const Word& r) const;
};

}  // namespace rmc
