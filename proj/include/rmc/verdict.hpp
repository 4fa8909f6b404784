#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "rmc/alphabet.hpp"

namespace rmc {

// SAFE means the query proved the property. INCONCLUSIVE means the
// abstraction or certificate failed with a witness; the witness need not be
// reachable, so it is never a proof of unsafety. BUDGET and ERROR mark
// resource exhaustion and bad input.
enum class Verdict { safe, inconclusive, budget, error };

[[nodiscard]] constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::safe: return "SAFE";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    case Verdict::budget: return "BUDGET";
    case Verdict::error: return "ERROR";
  }
  return "ERROR";
}

// Outcome of one safety or certificate query. `witness` is set exactly for
// inconclusive outcomes and spells its letters in `witness_alphabet`.
struct Check {
  Verdict verdict = Verdict::error;
  std::optional<Word> witness;
  Alphabet witness_alphabet;
  std::size_t explored_states = 0;
  std::string detail;
};

}  // namespace rmc
