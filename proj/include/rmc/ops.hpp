#pragma once

#include <cstddef>
#include <optional>

#include "rmc/nfa.hpp"

namespace rmc {

// Subset construction. States are explored breadth-first from the initial
// subset with symbols ascending, which fixes the output numbering; the empty
// subset becomes an ordinary dead state. Throws BudgetExceeded when more than
// `state_budget` subsets would be interned.
[[nodiscard]] Dfa determinize(const Nfa& a, std::size_t state_budget);

// Complement of a complete DFA: flip acceptance.
[[nodiscard]] Dfa complement(Dfa a);

[[nodiscard]] Nfa to_nfa(const Dfa& a);

// Restriction to states lying on some initial-to-accepting path. The
// language is unchanged; join products shrink a lot, and determinizing a
// trimmed automaton keeps dead branches out of the subsets.
[[nodiscard]] Nfa trim(const Nfa& a);

// Product over reachable state pairs; operands must share an alphabet.
[[nodiscard]] Nfa intersect(const Nfa& a, const Nfa& b);

// Disjoint union.
[[nodiscard]] Nfa union_nfa(const Nfa& a, const Nfa& b);

// Relation composition: a over X*Y, b over Y*Z gives a join over X*Z.
[[nodiscard]] Transducer join(const Transducer& a, const Transducer& b);

// Image of `language` under the relation: result over the right alphabet.
[[nodiscard]] Nfa post_image(const Nfa& language, const Transducer& relation);

// Preimage of `language` under the relation: result over the left alphabet.
[[nodiscard]] Nfa pre_image(const Transducer& relation, const Nfa& language);

// side 1 keeps left letters, side 2 keeps right letters.
[[nodiscard]] Nfa project(const Transducer& relation, int side);

[[nodiscard]] Transducer inverse(const Transducer& relation);

// Reinterpret an NFA over a pair alphabet as a transducer.
[[nodiscard]] Transducer as_transducer(const Nfa& a);

// Empty iff the result is absent; otherwise the shortest accepted word,
// ties broken toward smaller symbol indices at the earliest position.
[[nodiscard]] std::optional<Word> is_empty_with_witness(const Nfa& a);

// Canonical minimal DFA: reachable restriction, partition refinement, then
// breadth-first renumbering with symbols ascending.
[[nodiscard]] Dfa minimize(const Dfa& a);

// Language equality via the product of the two determinizations.
[[nodiscard]] bool equivalent(const Nfa& a, const Nfa& b, std::size_t state_budget);

// Small builders shared by the pipeline and the model catalog.
[[nodiscard]] Transducer identity_transducer(const Alphabet& alphabet);
// Identity relation restricted to the language of `a`.
[[nodiscard]] Transducer diagonal(const Dfa& a);
[[nodiscard]] Nfa all_words(const Alphabet& alphabet);
[[nodiscard]] Nfa word_nfa(const Alphabet& alphabet, const Word& word);
// Words containing `factor` as a contiguous infix.
[[nodiscard]] Nfa factor_nfa(const Alphabet& alphabet, const Word& factor);
// Words containing `letters` as a not necessarily contiguous subsequence.
[[nodiscard]] Nfa subsequence_nfa(const Alphabet& alphabet, const Word& letters);
[[nodiscard]] Nfa length_at_least(const Alphabet& alphabet, int k);
[[nodiscard]] Nfa length_multiple_of(const Alphabet& alphabet, int m);

}  // namespace rmc
