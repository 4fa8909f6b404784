#include "rmc/bforms.hpp"

#include <utility>

#include "rmc/enumerate.hpp"
#include "rmc/errors.hpp"

namespace rmc {

Word powerword_symbols(const PowerWord& phi) {
  Alphabet gamma = Alphabet::power(phi.sigma, phi.bound);
  Word out;
  out.reserve(phi.letters.size());
  for (const auto& rows : phi.letters) out.push_back(gamma.power_symbol(rows));
  return out;
}

PowerWord powerword_from_symbols(const Alphabet& sigma, int bound, const Word& symbols) {
  Alphabet gamma = Alphabet::power(sigma, bound);
  PowerWord phi{sigma, bound, {}};
  phi.letters.reserve(symbols.size());
  for (Symbol g : symbols) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(bound));
    for (int i = 0; i < bound; ++i) rows[static_cast<std::size_t>(i)] = gamma.row_mask(g, i);
    phi.letters.push_back(std::move(rows));
  }
  return phi;
}

bool satisfies(const Word& w, const PowerWord& phi) {
  if (w.size() != phi.letters.size())
    throw LengthMismatch("satisfies: word length " + std::to_string(w.size()) +
                         " differs from formula length " + std::to_string(phi.letters.size()));
  for (int i = 0; i < phi.bound; ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < w.size() && !hit; ++j)
      hit = (phi.letters[j][static_cast<std::size_t>(i)] >> w[j]) & 1u;
    if (!hit) return false;
  }
  return true;
}

std::uint32_t satisfied_rows(const Alphabet& gamma, Symbol letter, Symbol a) {
  std::uint32_t hit = 0;
  const int bound = gamma.bound();
  for (int i = 0; i < bound; ++i)
    if ((gamma.row_mask(letter, i) >> a) & 1u) hit |= 1u << i;
  return hit;
}

Interpretation satisfaction_interpreter(const Alphabet& sigma, int bound,
                                        std::size_t arc_budget) {
  if (bound < 1) throw ValidationError("satisfaction_interpreter: bound must be positive");
  Alphabet gamma = Alphabet::power(sigma, bound);
  const auto states = std::int64_t{1} << bound;
  const unsigned __int128 arcs = static_cast<unsigned __int128>(states) *
                                 static_cast<unsigned __int128>(sigma.size()) *
                                 static_cast<unsigned __int128>(gamma.size());
  if (arcs > arc_budget) throw BudgetExceeded("satisfaction_interpreter", arc_budget);

  Transducer v(Alphabet::pair(sigma, gamma), static_cast<int>(states));
  v.add_initial(0);
  v.add_accepting(static_cast<int>(states) - 1);
  for (int s = 0; s < states; ++s)
    for (Symbol a = 0; a < sigma.size(); ++a)
      for (Symbol g = 0; g < gamma.size(); ++g)
        v.add_pair_arc(s, a, g, s | static_cast<int>(satisfied_rows(gamma, g, a)));
  v.normalize();
  return {std::move(gamma), std::move(v)};
}

std::vector<PowerWord> inductive_powerwords_at_length(const Rts& r, int bound, int len,
                                                      std::size_t budget) {
  if (bound < 1) throw ValidationError("inductive_powerwords_at_length: bound must be positive");
  Alphabet gamma = Alphabet::power(r.alphabet, bound);
  unsigned __int128 total = 1;
  for (int j = 0; j < len; ++j) {
    total *= static_cast<unsigned __int128>(gamma.size());
    if (total > budget) throw BudgetExceeded("inductive_powerwords_at_length", budget);
  }

  const auto transitions = transitions_at_length(r, len, budget);

  std::vector<PowerWord> out;
  Word symbols(static_cast<std::size_t>(len), 0);
  for (;;) {
    PowerWord phi = powerword_from_symbols(r.alphabet, bound, symbols);
    bool inductive = true;
    for (const auto& [u, w] : transitions) {
      if (satisfies(u, phi) && !satisfies(w, phi)) {
        inductive = false;
        break;
      }
    }
    if (inductive) out.push_back(std::move(phi));

    int j = len - 1;
    while (j >= 0 && symbols[static_cast<std::size_t>(j)] == gamma.size() - 1) {
      symbols[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++symbols[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace rmc
