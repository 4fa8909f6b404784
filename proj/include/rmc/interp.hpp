#pragma once

#include <cstddef>

#include "rmc/bforms.hpp"
#include "rmc/rts.hpp"
#include "rmc/verdict.hpp"

namespace rmc {

// NFA over the clause alphabet accepting exactly the formulas some step
// falsifies: the inverse interpreter, the step, and the complemented
// interpreter run in lockstep on equal formula letters, then the formula
// side is kept. States are (row set, step state, row set) triples, so there
// are at most n_step * states(v)^2 of them.
[[nodiscard]] Nfa non_inductive_formulas(const Rts& r, const Interpretation& interp,
                                         std::size_t budget);

// Complement DFA over the clause alphabet: exactly the unbreakable formulas.
[[nodiscard]] Dfa inductive_formulas_dfa(const Rts& r, const Interpretation& interp,
                                         std::size_t budget);

// Transducer accepting <u, w> iff some unbreakable formula holds on u and
// fails on w. No step chain u ~>* w is ever separable this way, and no word
// is separable from itself.
[[nodiscard]] Transducer separable_pairs(const Rts& r, const Interpretation& interp,
                                         std::size_t budget);

// The abstraction: w is accepted iff some initial configuration of the same
// length is not separable from w. The language contains every reachable
// configuration and is closed under steps. Built lazily with antichains of
// formula-prefix obligations instead of via separable_pairs, which keeps the
// subset construction of the breakable-formula automaton implicit.
[[nodiscard]] Nfa hull_nfa(const Rts& r, const Interpretation& interp, std::size_t budget);

// Safety through the hull with `bound` clause rows (1 to 3): SAFE when the
// hull avoids `unsafe`; otherwise the shortest hull word inside `unsafe` is
// the witness. Hull words need not be reachable, so a hit is inconclusive,
// never a proof of unsafety.
[[nodiscard]] Check check_safety_hull(const Rts& r, const Nfa& unsafe, int bound,
                                      std::size_t budget);

// Checks a shipped invariant certificate in three stages: (a) every
// certificate formula is unbreakable, (b) every initial configuration
// satisfies every certificate formula of its length, (c) every unsafe
// configuration falsifies some certificate formula. Stages run in that
// fixed order and the first failure is reported with a witness. The
// products are driven by the certificate's own arcs, so the clause alphabet
// is never enumerated.
[[nodiscard]] Check check_certificate(const Rts& r, const Nfa& unsafe, const Certificate& c,
                                      std::size_t budget);

}  // namespace rmc
