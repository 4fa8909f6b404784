#pragma once

#include <set>
#include <utility>
#include <vector>

#include "rmc/rts.hpp"

namespace rmc {

// Exhaustive length slices for oracle-grade checks. All of these walk the
// automaton path tree directly and throw BudgetExceeded once the number of
// visited search nodes (plus emitted results) passes `budget`.

// Every word of exactly `len` letters accepted by `a`, sorted.
[[nodiscard]] std::vector<Word> language_at_length(const Nfa& a, int len, std::size_t budget);

// Every source/target pair of the step relation at `len`, sorted.
[[nodiscard]] std::vector<std::pair<Word, Word>> transitions_at_length(const Rts& model, int len,
                                                                       std::size_t budget);

// One-step successors of a single word.
[[nodiscard]] std::set<Word> word_successors(const Rts& model, const Word& source,
                                             std::size_t budget);

// Fixpoint of successor application starting from the initial slice.
[[nodiscard]] std::set<Word> reach_at_length(const Rts& model, int len, std::size_t budget);

}  // namespace rmc
