#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rmc/nfa.hpp"

namespace rmc {

// Regular transition system: a finite alphabet, a regular set of initial
// words, and a length-preserving step relation. Unsafe sets are named
// regular languages bundled with the model; order follows the source file.
struct Rts {
  Alphabet alphabet;
  Nfa initial;
  Transducer step;
  std::vector<std::pair<std::string, Nfa>> unsafe;

  [[nodiscard]] const Nfa* find_unsafe(const std::string& name) const {
    for (const auto& [key, nfa] : unsafe)
      if (key == name) return &nfa;
    return nullptr;
  }
};

// A clause-tuple automaton offered as evidence that a model is safe: its
// language must be inductive, hold initially, and exclude the unsafe set.
struct Certificate {
  int bound = 1;
  Nfa automaton;  // over Alphabet::power(model alphabet, bound)
};

}  // namespace rmc
