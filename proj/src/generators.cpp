#include "rmc/generators.hpp"

#include <algorithm>
#include <optional>

#include "rmc/errors.hpp"
#include "rmc/ops.hpp"

namespace rmc {

namespace {

Nfa zeros_language(const Alphabet& sigma) {
  Nfa init(sigma, 1);
  init.add_initial(0);
  init.add_accepting(0);
  init.add_arc(0, *sigma.index("0"), 0);
  init.normalize();
  return init;
}

}  // namespace

Rts generate_ladder(int bound) {
  if (bound < 1) throw ValidationError("ladder bound must be positive");
  Alphabet sigma({"0", "1"});
  Alphabet pairs = Alphabet::pair(sigma, sigma);
  const Symbol z = 0, o = 1;

  // States: bound unprimed (zeros seen so far), then bound primed (window
  // consumed including the 1); the last primed state loops on every pair.
  Transducer step(pairs, 2 * bound);
  auto unprimed = [](int i) { return i; };
  auto primed = [&](int j) { return bound + j - 1; };
  step.add_initial(unprimed(0));
  step.add_accepting(primed(bound));
  for (int i = 0; i + 1 <= bound - 1; ++i)
    step.add_pair_arc(unprimed(i), z, z, unprimed(i + 1));
  for (int i = 0; i <= bound - 1; ++i) step.add_pair_arc(unprimed(i), o, z, primed(i + 1));
  for (int j = 1; j + 1 <= bound; ++j) step.add_pair_arc(primed(j), z, z, primed(j + 1));
  for (Symbol a = 0; a < 2; ++a)
    for (Symbol b = 0; b < 2; ++b) step.add_pair_arc(primed(bound), a, b, primed(bound));
  step.normalize();

  Rts model;
  model.alphabet = sigma;
  model.initial = zeros_language(sigma);
  model.step = std::move(step);
  model.unsafe.emplace_back("one", factor_nfa(sigma, {o}));
  return model;
}

Rts generate_ladder_unbounded() {
  Alphabet sigma({"0", "1"});
  Alphabet pairs = Alphabet::pair(sigma, sigma);
  const Symbol z = 0, o = 1;

  // Window anywhere, exactly one trailing free pair.
  Transducer step(pairs, 3);
  step.add_initial(0);
  step.add_accepting(2);
  step.add_pair_arc(0, z, z, 0);
  step.add_pair_arc(0, o, z, 1);
  step.add_pair_arc(1, z, z, 1);
  for (Symbol a = 0; a < 2; ++a)
    for (Symbol b = 0; b < 2; ++b) step.add_pair_arc(1, a, b, 2);
  step.normalize();

  Rts model;
  model.alphabet = sigma;
  model.initial = zeros_language(sigma);
  model.step = std::move(step);
  model.unsafe.emplace_back("one", factor_nfa(sigma, {o}));
  return model;
}

namespace {

// Alphabet layout for machine words: marker, placeholder, tape, states.
struct TmAlphabet {
  Alphabet sigma;
  Symbol marker;       // "^"
  Symbol placeholder;  // "_"
  Symbol tape_base;
  Symbol state_base;
  int tape_count;
  int state_count;

  [[nodiscard]] bool is_tape(Symbol s) const {
    return s >= tape_base && s < tape_base + tape_count;
  }
  [[nodiscard]] bool is_state(Symbol s) const {
    return s >= state_base && s < state_base + state_count;
  }
  [[nodiscard]] int tape_of(Symbol s) const { return static_cast<int>(s - tape_base); }
  [[nodiscard]] int state_of(Symbol s) const { return static_cast<int>(s - state_base); }
};

TmAlphabet make_tm_alphabet(const TmSpec& tm) {
  std::vector<std::string> names{"^", "_"};
  for (const std::string& s : tm.tape_symbols) names.push_back(s);
  for (const std::string& s : tm.state_names) names.push_back(s);
  TmAlphabet out{Alphabet(std::move(names)),
                 0,
                 1,
                 2,
                 2 + static_cast<Symbol>(tm.tape_symbols.size()),
                 static_cast<int>(tm.tape_symbols.size()),
                 static_cast<int>(tm.state_names.size())};
  return out;
}

void validate_tm(const TmSpec& tm, int pages) {
  if (tm.tape_cells < 1) throw ValidationError("machine needs at least one tape cell");
  if (tm.tape_symbols.empty() || tm.state_names.empty())
    throw ValidationError("machine needs tape symbols and states");
  for (const auto& [key, rule] : tm.rules) {
    auto [state, read] = key;
    if (state < 0 || state >= static_cast<int>(tm.state_names.size()) || read < 0 ||
        read >= static_cast<int>(tm.tape_symbols.size()))
      throw ValidationError("rule indexes an unknown state or tape symbol");
    if (tm.halting.contains(state)) throw ValidationError("halting state has an outgoing rule");
    if (rule.next_state < 0 || rule.next_state >= static_cast<int>(tm.state_names.size()) ||
        rule.write < 0 || rule.write >= static_cast<int>(tm.tape_symbols.size()) ||
        (rule.move != 1 && rule.move != -1))
      throw ValidationError("rule has an out-of-range result");
  }

  // Deterministic simulation: the head must stay on the tape for at least
  // `pages` steps; a halt or a repeated configuration settles all later ones.
  struct Config {
    int state, head;
    std::vector<int> tape;
    auto operator<=>(const Config&) const = default;
  };
  Config c{0, 0, std::vector<int>(static_cast<std::size_t>(tm.tape_cells), 0)};
  std::set<Config> seen;
  constexpr int kSimulationCap = 200000;
  for (int step = 0; step < std::max(pages, kSimulationCap); ++step) {
    if (tm.halting.contains(c.state)) return;
    if (!seen.insert(c).second) return;
    auto it = tm.rules.find({c.state, c.tape[static_cast<std::size_t>(c.head)]});
    if (it == tm.rules.end()) return;  // no rule: treated as a halt
    c.tape[static_cast<std::size_t>(c.head)] = it->second.write;
    c.head += it->second.move;
    c.state = it->second.next_state;
    if (c.head < 0 || c.head >= tm.tape_cells)
      throw ValidationError("machine head moves off the tape at step " + std::to_string(step + 1));
  }
}

// Output letter for the window (w1,w2,w3,w4) around position of w2, or
// absent when the window does not determine it.
std::optional<Symbol> window_output(const TmSpec& tm, const TmAlphabet& al, Symbol w1, Symbol w2,
                                    Symbol w3, Symbol w4) {
  if (w2 == al.marker) return std::nullopt;  // page boundaries are pre-seeded, never rewritten
  if (w1 == al.placeholder || w2 == al.placeholder || w3 == al.placeholder) return std::nullopt;
  const bool s1 = al.is_state(w1), s2 = al.is_state(w2), s3 = al.is_state(w3);
  if (s1 + s2 + s3 > 1) return std::nullopt;  // malformed: two heads nearby

  auto rule_for = [&](Symbol state_letter, Symbol read_letter) -> std::optional<TmSpec::Rule> {
    auto it = tm.rules.find({al.state_of(state_letter), al.tape_of(read_letter)});
    if (it == tm.rules.end()) return std::nullopt;  // halting: configuration stutters
    return it->second;
  };

  if (s2) {
    // Head letter itself: on a left move the letter left of it slides in.
    if (!al.is_tape(w3)) return std::nullopt;  // head needs a cell to read
    auto rule = rule_for(w2, w3);
    if (!rule) return w2;
    if (rule->move == 1) return al.tape_base + rule->write;
    if (!al.is_tape(w1)) return std::nullopt;  // left move at the page start falls off
    return w1;
  }
  if (s1) {
    // Cell under the head: rewritten, or replaced by the state on a right move.
    if (!al.is_tape(w2)) return std::nullopt;
    auto rule = rule_for(w1, w2);
    if (!rule) return w2;
    if (rule->move == -1) return al.tape_base + rule->write;
    if (w3 == al.marker) return std::nullopt;  // right move at the page end falls off
    return al.state_base + rule->next_state;
  }
  if (s3) {
    // Cell left of the head: taken by the state on a left move.
    if (!al.is_tape(w4)) return std::nullopt;  // includes placeholder and marker
    auto rule = rule_for(w3, w4);
    if (!rule) return w2;
    return rule->move == -1 ? al.state_base + rule->next_state : std::make_optional(w2);
  }
  return w2;  // no head in sight: plain copy
}

}  // namespace

Rts generate_tm_rts(const TmSpec& tm, int pages) {
  validate_tm(tm, pages);
  TmAlphabet al = make_tm_alphabet(tm);
  const Alphabet& sigma = al.sigma;
  Alphabet pair_alpha = Alphabet::pair(sigma, sigma);
  const int n = tm.tape_cells + 1;  // letters per page, excluding the marker

  // step: copy, remember a four-letter window, count down to the matching
  // cell one page later, write it, copy the rest.
  Transducer step(pair_alpha, 0);
  const int copy_pre = step.add_state();
  const int copy_post = step.add_state();
  step.add_initial(copy_pre);
  step.add_accepting(copy_post);
  for (Symbol x = 0; x < sigma.size(); ++x) {
    step.add_pair_arc(copy_pre, x, x, copy_pre);
    step.add_pair_arc(copy_post, x, x, copy_post);
  }

  // Collect the defined windows first so only live prefixes grow states.
  struct WindowRule {
    Symbol w1, w2, w3, w4, out;
  };
  std::vector<WindowRule> rules;
  for (Symbol w1 = 0; w1 < sigma.size(); ++w1)
    for (Symbol w2 = 0; w2 < sigma.size(); ++w2)
      for (Symbol w3 = 0; w3 < sigma.size(); ++w3)
        for (Symbol w4 = 0; w4 < sigma.size(); ++w4)
          if (auto d = window_output(tm, al, w1, w2, w3, w4)) rules.push_back({w1, w2, w3, w4, *d});

  std::map<std::vector<Symbol>, int> window_states;  // live partial windows, size 1..3
  std::map<std::pair<Symbol, int>, int> countdown_states;
  auto window_state = [&](std::vector<Symbol> w) {
    auto [it, fresh] = window_states.try_emplace(std::move(w), -1);
    if (fresh) it->second = step.add_state();
    return it->second;
  };
  auto countdown_state = [&](Symbol d, int k) {
    auto [it, fresh] = countdown_states.try_emplace({d, k}, -1);
    if (fresh) it->second = step.add_state();
    return it->second;
  };
  for (const WindowRule& r : rules) {
    int s1 = window_state({r.w1});
    int s2 = window_state({r.w1, r.w2});
    int s3 = window_state({r.w1, r.w2, r.w3});
    step.add_pair_arc(copy_pre, r.w1, r.w1, s1);
    step.add_pair_arc(s1, r.w2, r.w2, s2);
    step.add_pair_arc(s2, r.w3, r.w3, s3);
    // After w4 the cursor is two letters past w2; its twin cell sits n+1
    // further on, so n-2 plain copies remain before the write.
    step.add_pair_arc(s3, r.w4, r.w4, countdown_state(r.out, n - 2));
  }
  std::vector<Symbol> written;
  for (const auto& [key, state] : countdown_states) written.push_back(key.first);
  for (Symbol d : written) {
    for (int k = n - 2; k >= 1; --k) {
      int from = countdown_state(d, k);
      int to = countdown_state(d, k - 1);
      for (Symbol x = 0; x < sigma.size(); ++x) step.add_pair_arc(from, x, x, to);
    }
    step.add_pair_arc(countdown_state(d, 0), al.placeholder, d, copy_post);
  }
  step.normalize();

  // initial: ^ q0 blank^(tape_cells) then any number of ^ _^n pages.
  Nfa init(sigma, 2 * (n + 1));
  init.add_initial(0);
  init.add_arc(0, al.marker, 1);
  init.add_arc(1, al.state_base, 2);
  for (int i = 2; i <= n; ++i) init.add_arc(i, al.tape_base, i + 1);
  init.add_accepting(n + 1);
  const int loop = n + 2;
  init.add_arc(n + 1, al.marker, loop);
  for (int i = 0; i + 1 < n; ++i) init.add_arc(loop + i, al.placeholder, loop + i + 1);
  init.add_arc(loop + n - 1, al.placeholder, n + 1);
  init.normalize();

  Rts model;
  model.alphabet = sigma;
  model.initial = std::move(init);
  model.step = std::move(step);

  // halted: fully written words that contain a halting state letter.
  Nfa halted(sigma, 2);
  halted.add_initial(0);
  halted.add_accepting(1);
  for (Symbol x = 0; x < sigma.size(); ++x) {
    if (x == al.placeholder) continue;
    halted.add_arc(0, x, 0);
    halted.add_arc(1, x, 1);
  }
  for (int h : tm.halting) halted.add_arc(0, al.state_base + h, 1);
  halted.normalize();
  model.unsafe.emplace_back("halted", std::move(halted));
  return model;
}

}  // namespace rmc
