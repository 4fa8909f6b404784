#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rmc/alphabet.hpp"
#include "rmc/nfa.hpp"
#include "rmc/rts.hpp"

namespace rmc {

// A clause-tuple formula written as a word over the clause alphabet
// (2^Sigma)^bound. Row i across the letters is one clause: a disjunction of
// positive letter tests, with letters[j][i] holding the test at position j
// as a bitmask over sigma. A word of the same length satisfies the formula
// iff every row tests true at some position; a row that is empty at every
// position denotes false.
struct PowerWord {
  Alphabet sigma;
  int bound = 1;
  std::vector<std::vector<std::uint32_t>> letters;

  bool operator==(const PowerWord&) const = default;
};

// The formula as a word over Alphabet::power(sigma, bound), and back.
[[nodiscard]] Word powerword_symbols(const PowerWord& phi);
[[nodiscard]] PowerWord powerword_from_symbols(const Alphabet& sigma, int bound,
                                               const Word& symbols);

// True iff every clause row of phi tests true somewhere along w. Lengths
// must match; words of other lengths satisfy every formula vacuously, and
// callers that need that convention handle it themselves.
[[nodiscard]] bool satisfies(const Word& w, const PowerWord& phi);

// Clause rows of power letter `letter` whose test contains `a`, as a bitmask
// over rows. The single arithmetic step every fused pipeline is built from.
[[nodiscard]] std::uint32_t satisfied_rows(const Alphabet& gamma, Symbol letter, Symbol a);

// A clause alphabet together with a complete deterministic transducer that
// reads <configuration letter, clause letter> pairs and accepts exactly the
// satisfying pairs. Pipeline code relies on determinism and completeness.
struct Interpretation {
  Alphabet gamma;
  Transducer v;
};

// The canonical interpreter for `bound` clause rows over `sigma`: states are
// the sets of rows already satisfied, giving 2^bound states, with the unique
// maximal row update per letter pair. Throws BudgetExceeded when the
// transition table would exceed arc_budget arcs.
[[nodiscard]] Interpretation satisfaction_interpreter(const Alphabet& sigma, int bound,
                                                      std::size_t arc_budget = std::size_t{1}
                                                                               << 25);

// All length-len formulas over (2^Sigma)^bound that no length-len step can
// falsify: satisfies(u, phi) implies satisfies(w, phi) for every transition
// u ~> w. Steps preserve length and other lengths are vacuous, so only
// length-len transitions matter. Budget caps both the formula count and the
// transition enumeration.
[[nodiscard]] std::vector<PowerWord> inductive_powerwords_at_length(const Rts& r, int bound,
                                                                    int len, std::size_t budget);

}  // namespace rmc
