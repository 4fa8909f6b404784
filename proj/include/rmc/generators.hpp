#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rmc/rts.hpp"

namespace rmc {

// Bounded token-drop chain: sources hold a single 1 within the first
// `bound` positions, targets clear it, everything after the window is free.
// Initial words are all zeros; the bundled unsafe set "one" holds every word
// containing a 1.
[[nodiscard]] Rts generate_ladder(int bound);

// Unbounded variant: the single-1 window may sit anywhere, followed by one
// free pair at the very end of the word.
[[nodiscard]] Rts generate_ladder_unbounded();

// One-tape machine with a fixed tape length; rules move left or right only.
struct TmSpec {
  int tape_cells = 2;
  std::vector<std::string> tape_symbols;  // index 0 is the blank
  std::vector<std::string> state_names;   // index 0 is the start state
  std::set<int> halting;                  // states without rules; they stutter

  struct Rule {
    int next_state;
    int write;
    int move;  // +1 right, -1 left
  };
  std::map<std::pair<int, int>, Rule> rules;  // (state, read) -> rule
};

// Word shape: one page per computation prefix, "^" before each page, pages
// hold the machine configuration (state letter immediately left of the head)
// or "_" for cells not yet written. Each step writes one "_" cell from the
// four-letter window one page earlier. The initial language allows any
// number of blank pages, so every configuration length is represented.
//
// The bundled unsafe set "halted" holds the fully written words that contain
// a halting state letter.
//
// Validates the machine by simulating at least `pages` steps (further until
// it halts or revisits a configuration); ValidationError if the head ever
// leaves the tape.
[[nodiscard]] Rts generate_tm_rts(const TmSpec& tm, int pages);

}  // namespace rmc
