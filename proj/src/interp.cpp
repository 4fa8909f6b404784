#include "rmc/interp.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "rmc/errors.hpp"
#include "rmc/io.hpp"
#include "rmc/ops.hpp"

namespace rmc {

namespace {

// Complement of a complete deterministic transducer: flip acceptance.
Transducer flip_accepting(const Transducer& t) {
  Transducer out(t.alphabet(), t.state_count());
  for (int s : t.initial()) out.add_initial(s);
  for (int s = 0; s < t.state_count(); ++s) {
    if (!t.is_accepting(s)) out.add_accepting(s);
    for (const Arc& arc : t.arcs(s)) out.add_arc(s, arc.symbol, arc.target);
  }
  out.normalize();
  return out;
}

}  // namespace

Nfa non_inductive_formulas(const Rts& r, const Interpretation& interp, std::size_t budget) {
  const Transducer& v = interp.v;
  const Transducer& t = r.step;
  if (v.alphabet().kind() != Alphabet::Kind::pair || v.alphabet().left() != r.alphabet ||
      v.alphabet().right() != interp.gamma)
    throw AlphabetMismatch("non_inductive_formulas: interpreter does not fit the model");

  const Alphabet& gamma = interp.gamma;
  const Alphabet& vp = v.alphabet();
  Nfa out(gamma, 0);
  std::map<std::array<int, 3>, int> ids;
  std::vector<std::array<int, 3>> nodes;
  std::deque<int> queue;
  std::size_t cost = 0;

  // A formula is breakable iff some run satisfies it on the step's source
  // (left row set full), follows an accepted step, and fails it on the
  // target (right row set not full).
  auto intern = [&](int sv1, int qt, int sv2) {
    auto [it, fresh] = ids.try_emplace(std::array<int, 3>{sv1, qt, sv2},
                                       static_cast<int>(nodes.size()));
    if (fresh) {
      if (++cost > budget) throw BudgetExceeded("non_inductive_formulas", budget);
      nodes.push_back({sv1, qt, sv2});
      int s = out.add_state();
      if (v.is_accepting(sv1) && t.is_accepting(qt) && !v.is_accepting(sv2)) out.add_accepting(s);
      queue.push_back(it->second);
    }
    return it->second;
  };

  for (int v0 : v.initial())
    for (int t0 : t.initial()) out.add_initial(intern(v0, t0, v0));

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    auto [sv1, qt, sv2] = nodes[static_cast<std::size_t>(id)];
    for (Symbol g = 0; g < gamma.size(); ++g)
      for (const Arc& step_arc : t.arcs(qt)) {
        auto [a, c] = t.alphabet().split(step_arc.symbol);
        for (const Arc& left : v.arcs(sv1, vp.pair_symbol(a, g)))
          for (const Arc& right : v.arcs(sv2, vp.pair_symbol(c, g))) {
            if (++cost > budget) throw BudgetExceeded("non_inductive_formulas", budget);
            out.add_arc(id, g, intern(left.target, step_arc.target, right.target));
          }
      }
  }
  out.normalize();
  return out;
}

Dfa inductive_formulas_dfa(const Rts& r, const Interpretation& interp, std::size_t budget) {
  // Minimizing keeps the later pair construction from inheriting the raw
  // subset blow-up of the determinization.
  return minimize(complement(determinize(trim(non_inductive_formulas(r, interp, budget)), budget)));
}

Transducer separable_pairs(const Rts& r, const Interpretation& interp, std::size_t budget) {
  Dfa inductive = inductive_formulas_dfa(r, interp, budget);
  Transducer same_formula = diagonal(inductive);
  Transducer fails_on_right = flip_accepting(inverse(interp.v));
  return as_transducer(trim(join(join(interp.v, same_formula), fails_on_right)));
}

namespace {

// One separability thread inside a hull state: the rows of the tracked
// formula already hit by the initial-side word (sv1) and by the abstracted
// word (sv2), plus the exact subset of breakable-formula states reached by
// the formula prefix, packed as a fixed-stride bitmask in a shared pool.
struct Thread {
  std::uint32_t sv1 = 0;
  std::uint32_t sv2 = 0;
  std::uint32_t d = 0;  // index into the mask pool
};

// Pool of interned state-set masks, all with the same word stride.
class MaskPool {
 public:
  explicit MaskPool(int words) : words_(static_cast<std::size_t>(words)) {}

  std::uint32_t intern(const std::uint64_t* mask) {
    key_.assign(mask, mask + words_);
    auto [it, fresh] = id_.try_emplace(key_, static_cast<std::uint32_t>(id_.size()));
    if (fresh) store_.insert(store_.end(), key_.begin(), key_.end());
    return it->second;
  }

  [[nodiscard]] const std::uint64_t* get(std::uint32_t id) const {
    return store_.data() + static_cast<std::size_t>(id) * words_;
  }
  [[nodiscard]] std::size_t words() const { return words_; }

  [[nodiscard]] bool subset(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t* pa = get(a);
    const std::uint64_t* pb = get(b);
    for (std::size_t i = 0; i < words_; ++i)
      if (pa[i] & ~pb[i]) return false;
    return true;
  }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (std::uint64_t w : v) h = (h ^ w) * 1099511628211ull;
      return h;
    }
  };
  std::size_t words_;
  std::vector<std::uint64_t> key_;
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, Hash> id_;
  std::vector<std::uint64_t> store_;
};

}  // namespace

Nfa hull_nfa(const Rts& r, const Interpretation& interp, std::size_t budget) {
  // Image of the initial language under the complement of the separability
  // relation, built directly over the breakable-formula NFA. A hull state
  // pairs an initial-automaton state with an antichain of threads, one per
  // live formula prefix; a thread is dropped whenever another thread accepts
  // in every future where it does (sv1 above, formula subset below, sv2
  // below), which is what keeps the frontier small enough for the two-row
  // and three-row interpreters.
  const Nfa ni = trim(non_inductive_formulas(r, interp, budget));
  const Nfa& init = r.initial;
  const Alphabet& sigma = r.alphabet;
  const Alphabet& gamma = interp.gamma;
  const int n = ni.state_count();
  const int words = n == 0 ? 1 : (n + 63) / 64;
  const std::uint32_t full = (1u << gamma.bound()) - 1;

  // One transition-mask row per (formula letter, source state).
  const std::size_t gsize = static_cast<std::size_t>(gamma.size());
  std::vector<std::uint64_t> step(gsize * static_cast<std::size_t>(n) *
                                      static_cast<std::size_t>(words),
                                  0);
  for (int s = 0; s < n; ++s)
    for (const Arc& arc : ni.arcs(s)) {
      std::uint64_t* row =
          step.data() + (static_cast<std::size_t>(arc.symbol) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(s)) *
                            static_cast<std::size_t>(words);
      row[static_cast<std::size_t>(arc.target) / 64] |=
          1ull << (static_cast<std::size_t>(arc.target) % 64);
    }

  // Row-hit table: which formula rows letter `a` satisfies under letter `g`.
  const std::size_t ssize = static_cast<std::size_t>(sigma.size());
  std::vector<std::uint32_t> hits(ssize * gsize);
  for (Symbol a = 0; a < sigma.size(); ++a)
    for (Symbol g = 0; g < gamma.size(); ++g)
      hits[static_cast<std::size_t>(a) * gsize + static_cast<std::size_t>(g)] =
          satisfied_rows(gamma, g, a);

  MaskPool pool(words);
  std::vector<std::uint64_t> scratch(static_cast<std::size_t>(words));
  std::vector<std::uint64_t> acc_mask(static_cast<std::size_t>(words), 0);
  for (int s : ni.accepting())
    acc_mask[static_cast<std::size_t>(s) / 64] |= 1ull << (static_cast<std::size_t>(s) % 64);

  // Direct simulation preorder on breakable-formula states: t simulates s
  // when t is accepting wherever s is and every move of s is matched by a
  // move of t into a simulating state. Dropping simulated states from a
  // subset keeps its residual language, so threads shrink and the coverage
  // test fires more often. Skipped when the refinement would cost more than
  // it saves; an identity preorder is always sound.
  const std::size_t wsz = static_cast<std::size_t>(words);
  std::vector<std::uint64_t> simmask(static_cast<std::size_t>(n) * wsz, 0);
  std::vector<std::uint64_t> drop_mask(static_cast<std::size_t>(n) * wsz, 0);
  const bool use_sim =
      n > 0 && static_cast<std::size_t>(n) * ni.arc_count() * wsz <= (std::size_t{1} << 29);
  if (use_sim) {
    for (int s = 0; s < n; ++s) {
      std::uint64_t* row = simmask.data() + static_cast<std::size_t>(s) * wsz;
      const bool sacc = ni.is_accepting(s);
      for (int t = 0; t < n; ++t)
        if (!sacc || ni.is_accepting(t))
          row[static_cast<std::size_t>(t) / 64] |= 1ull << (static_cast<std::size_t>(t) % 64);
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int s = 0; s < n; ++s) {
        std::uint64_t* row = simmask.data() + static_cast<std::size_t>(s) * wsz;
        for (int word = 0; word < words; ++word) {
          std::uint64_t bits = row[static_cast<std::size_t>(word)];
          while (bits) {
            const int t = word * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            if (t == s) continue;
            bool matched = true;
            for (const Arc& arc : ni.arcs(s)) {
              const std::uint64_t* trow =
                  step.data() +
                  (static_cast<std::size_t>(arc.symbol) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(t)) *
                      wsz;
              const std::uint64_t* srow =
                  simmask.data() + static_cast<std::size_t>(arc.target) * wsz;
              std::uint64_t inter = 0;
              for (std::size_t i = 0; i < wsz; ++i) inter |= trow[i] & srow[i];
              if (!inter) {
                matched = false;
                break;
              }
            }
            if (!matched) {
              row[static_cast<std::size_t>(word)] &= ~(1ull << (static_cast<std::size_t>(t) % 64));
              changed = true;
            }
          }
        }
      }
    }
    // A state is dropped for a strictly greater one, or for an equivalent
    // one with a larger index; the strictness keeps every drop chain ending
    // in a kept state.
    for (int s = 0; s < n; ++s) {
      const std::uint64_t* row = simmask.data() + static_cast<std::size_t>(s) * wsz;
      std::uint64_t* drop = drop_mask.data() + static_cast<std::size_t>(s) * wsz;
      for (int word = 0; word < words; ++word) {
        std::uint64_t bits = row[static_cast<std::size_t>(word)];
        while (bits) {
          const int t = word * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (t == s) continue;
          const std::uint64_t* back = simmask.data() + static_cast<std::size_t>(t) * wsz;
          const bool mutual = (back[static_cast<std::size_t>(s) / 64] >>
                               (static_cast<std::size_t>(s) % 64)) &
                              1u;
          if (!mutual || t > s)
            drop[static_cast<std::size_t>(word)] |= 1ull << (static_cast<std::size_t>(t) % 64);
        }
      }
    }
  }

  // Drops are decided against the untouched subset: every drop chain then
  // ends in a kept simulation-maximal state.
  std::vector<std::uint64_t> snapshot(wsz);
  auto reduce_mask = [&](std::uint64_t* mask) {
    if (!use_sim) return;
    std::copy(mask, mask + wsz, snapshot.begin());
    for (int word = 0; word < words; ++word) {
      std::uint64_t bits = snapshot[static_cast<std::size_t>(word)];
      while (bits) {
        const int s = word * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* drop = drop_mask.data() + static_cast<std::size_t>(s) * wsz;
        std::uint64_t hit = 0;
        for (std::size_t i = 0; i < wsz; ++i) hit |= snapshot[i] & drop[i];
        if (hit)
          mask[static_cast<std::size_t>(word)] &= ~(1ull << (static_cast<std::size_t>(s) % 64));
      }
    }
  };

  auto breakable = [&](std::uint32_t d) {
    const std::uint64_t* mask = pool.get(d);
    for (std::size_t i = 0; i < static_cast<std::size_t>(words); ++i)
      if (mask[i] & acc_mask[i]) return true;
    return false;
  };

  // Antichain state interning: threads sorted for a canonical key.
  auto thread_less = [](const Thread& a, const Thread& b) {
    return std::tie(a.sv1, a.sv2, a.d) < std::tie(b.sv1, b.sv2, b.d);
  };
  struct ChainHash {
    std::size_t operator()(const std::pair<int, std::vector<Thread>>& key) const noexcept {
      std::size_t h = static_cast<std::size_t>(key.first) * 1099511628211ull;
      for (const Thread& t : key.second) {
        h = (h ^ t.sv1) * 1099511628211ull;
        h = (h ^ t.sv2) * 1099511628211ull;
        h = (h ^ t.d) * 1099511628211ull;
      }
      return h;
    }
  };
  struct ChainEq {
    bool operator()(const std::pair<int, std::vector<Thread>>& a,
                    const std::pair<int, std::vector<Thread>>& b) const noexcept {
      return a.first == b.first && a.second.size() == b.second.size() &&
             std::equal(a.second.begin(), a.second.end(), b.second.begin(),
                        [](const Thread& x, const Thread& y) {
                          return x.sv1 == y.sv1 && x.sv2 == y.sv2 && x.d == y.d;
                        });
    }
  };

  Nfa out(sigma, 0);
  std::unordered_map<std::pair<int, std::vector<Thread>>, int, ChainHash, ChainEq> id;
  std::deque<std::pair<const std::pair<int, std::vector<Thread>>*, int>> queue;
  std::size_t cost = 0;
  auto intern = [&](int qi, std::vector<Thread> chain) {
    auto [it, fresh] = id.try_emplace({qi, std::move(chain)}, out.state_count());
    if (fresh) {
      cost += 1 + it->first.second.size();
      if (cost > budget) throw BudgetExceeded("hull_nfa", budget);
      out.add_state();
      queue.push_back({&it->first, it->second});
    }
    return it->second;
  };

  // Formula-subset successors per pool entry, one lazy row per entry.
  std::vector<std::vector<std::uint32_t>> dsucc;
  auto successors_of = [&](std::uint32_t d) -> const std::vector<std::uint32_t>& {
    if (dsucc.size() <= d) dsucc.resize(static_cast<std::size_t>(d) + 1);
    auto& row = dsucc[d];
    if (row.empty()) {
      row.reserve(gsize);
      // Interning grows the pool, so work from a copy of the source mask.
      const std::vector<std::uint64_t> mask(pool.get(d), pool.get(d) + words);
      for (Symbol g = 0; g < gamma.size(); ++g) {
        std::fill(scratch.begin(), scratch.end(), 0);
        const std::uint64_t* rows = step.data() + static_cast<std::size_t>(g) *
                                                      static_cast<std::size_t>(n) *
                                                      static_cast<std::size_t>(words);
        for (int word = 0; word < words; ++word) {
          std::uint64_t bits = mask[static_cast<std::size_t>(word)];
          while (bits) {
            const int s = word * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            const std::uint64_t* srow =
                rows + static_cast<std::size_t>(s) * static_cast<std::size_t>(words);
            for (int i = 0; i < words; ++i) scratch[static_cast<std::size_t>(i)] |= srow[i];
          }
        }
        reduce_mask(scratch.data());
        row.push_back(pool.intern(scratch.data()));
      }
    }
    return row;
  };

  // `t1` accepts in every future where `t2` does: more rows hit on the
  // initial side, fewer breakable-formula states, fewer rows hit on the
  // abstracted side. The subset test falls back to the simulation preorder,
  // which keeps residual-language inclusion when the masks are incomparable.
  auto sim_subset = [&](std::uint32_t a, std::uint32_t b) {
    if (!use_sim) return false;
    const std::uint64_t* pa = pool.get(a);
    const std::uint64_t* pb = pool.get(b);
    for (int word = 0; word < words; ++word) {
      std::uint64_t bits = pa[static_cast<std::size_t>(word)];
      while (bits) {
        const int s = word * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* row = simmask.data() + static_cast<std::size_t>(s) * wsz;
        std::uint64_t hit = 0;
        for (std::size_t i = 0; i < wsz; ++i) hit |= pb[i] & row[i];
        if (!hit) return false;
      }
    }
    return true;
  };
  auto covers = [&](const Thread& t1, const Thread& t2) {
    return (t1.sv1 & t2.sv1) == t2.sv1 && (t2.sv2 & t1.sv2) == t1.sv2 &&
           (t1.d == t2.d || pool.subset(t1.d, t2.d) || sim_subset(t1.d, t2.d));
  };

  // Memoized one-thread expansion for a (subset, model letter, read letter)
  // triple, already antichain-reduced. Reducing before the row-hit masks are
  // merged in is sound: coverage between two offsets survives any shared
  // prefix rows.
  std::unordered_map<std::uint64_t, std::vector<Thread>> expansions;
  auto expansion_of = [&](std::uint32_t d, Symbol a, Symbol c) -> const std::vector<Thread>& {
    const std::uint64_t key = (static_cast<std::uint64_t>(d) << 16) |
                              (static_cast<std::uint64_t>(a) << 8) | static_cast<std::uint64_t>(c);
    auto [it, fresh] = expansions.try_emplace(key);
    if (fresh) {
      const auto& drow = successors_of(d);
      const std::uint32_t* h1 = hits.data() + static_cast<std::size_t>(a) * gsize;
      const std::uint32_t* h2 = hits.data() + static_cast<std::size_t>(c) * gsize;
      std::vector<Thread>& list = it->second;
      for (Symbol g = 0; g < gamma.size(); ++g) {
        const Thread cand{h1[static_cast<std::size_t>(g)], h2[static_cast<std::size_t>(g)],
                          drow[static_cast<std::size_t>(g)]};
        if (cand.sv2 == full) continue;
        bool dominated = false;
        for (const Thread& kept : list)
          if (covers(kept, cand)) {
            dominated = true;
            break;
          }
        if (!dominated) {
          std::erase_if(list, [&](const Thread& kept) { return covers(cand, kept); });
          list.push_back(cand);
        }
      }
    }
    return it->second;
  };

  std::fill(scratch.begin(), scratch.end(), 0);
  for (int s : ni.initial())
    scratch[static_cast<std::size_t>(s) / 64] |= 1ull << (static_cast<std::size_t>(s) % 64);
  reduce_mask(scratch.data());
  std::vector<Thread> start = {Thread{0, 0, pool.intern(scratch.data())}};
  for (int qi : init.initial()) out.add_initial(intern(qi, start));

  std::vector<Thread> raw;
  while (!queue.empty()) {
    const auto& [qi, chain] = *queue.front().first;
    const int from = queue.front().second;
    queue.pop_front();
    if (init.is_accepting(qi)) {
      bool separable = false;
      for (const Thread& t : chain)
        if (t.sv1 == full && t.sv2 != full && !breakable(t.d)) {
          separable = true;
          break;
        }
      if (!separable) out.add_accepting(from);
    }
    for (const Arc& ia : init.arcs(qi)) {
      for (Symbol c = 0; c < sigma.size(); ++c) {
        raw.clear();
        for (const Thread& t : chain)
          for (const Thread& e : expansion_of(t.d, ia.symbol, c)) {
            const std::uint32_t sv2 = t.sv2 | e.sv2;
            if (sv2 == full) continue;  // the abstracted word satisfies this prefix for good
            raw.push_back(Thread{t.sv1 | e.sv1, sv2, e.d});
          }
        cost += raw.size();
        if (cost > budget) throw BudgetExceeded("hull_nfa", budget);
        // Antichain reduction: drop every thread another one covers.
        std::sort(raw.begin(), raw.end(), thread_less);
        raw.erase(std::unique(raw.begin(), raw.end(),
                              [](const Thread& a, const Thread& b) {
                                return a.sv1 == b.sv1 && a.sv2 == b.sv2 && a.d == b.d;
                              }),
                  raw.end());
        std::vector<Thread> reduced;
        for (const Thread& cand : raw) {
          bool dominated = false;
          for (const Thread& kept : reduced)
            if (covers(kept, cand)) {
              dominated = true;
              break;
            }
          if (!dominated) {
            std::erase_if(reduced, [&](const Thread& kept) { return covers(cand, kept); });
            reduced.push_back(cand);
          }
        }
        std::sort(reduced.begin(), reduced.end(), thread_less);
        out.add_arc(from, c, intern(ia.target, std::move(reduced)));
      }
    }
  }
  out.normalize();
  return out;
}

Check check_safety_hull(const Rts& r, const Nfa& unsafe, int bound, std::size_t budget) {
  if (bound < 1 || bound > 3)
    throw ValidationError("check_safety_hull: bound must be 1, 2, or 3");
  if (unsafe.alphabet() != r.alphabet)
    throw AlphabetMismatch("check_safety_hull: unsafe set alphabet does not match the model");

  Interpretation interp = satisfaction_interpreter(r.alphabet, bound, budget);
  Nfa hull = hull_nfa(r, interp, budget);
  Nfa overlap = intersect(hull, unsafe);

  Check out;
  out.witness_alphabet = r.alphabet;
  out.explored_states =
      static_cast<std::size_t>(hull.state_count()) + static_cast<std::size_t>(overlap.state_count());
  if (auto witness = is_empty_with_witness(overlap)) {
    out.verdict = Verdict::inconclusive;
    out.witness = std::move(*witness);
    out.detail = "abstraction overlaps the unsafe set";
  } else {
    out.verdict = Verdict::safe;
    out.detail = "abstraction avoids the unsafe set";
  }
  return out;
}

Check check_certificate(const Rts& r, const Nfa& unsafe, const Certificate& c,
                        std::size_t budget) {
  Alphabet gamma = Alphabet::power(r.alphabet, c.bound);
  if (c.automaton.alphabet() != gamma)
    throw AlphabetMismatch("check_certificate: certificate alphabet does not match the model");
  if (unsafe.alphabet() != r.alphabet)
    throw AlphabetMismatch("check_certificate: unsafe set alphabet does not match the model");

  const Nfa& cert = c.automaton;
  const Transducer& t = r.step;
  const Nfa& init = r.initial;
  const int full = (1 << c.bound) - 1;
  std::size_t cost = 0;
  auto spend = [&] {
    if (++cost > budget) throw BudgetExceeded("check_certificate", budget);
  };

  Check out;
  out.verdict = Verdict::safe;

  // (a) Unbreakability of every certificate formula: search the product of
  // the certificate, the interpreter on the step's source, the step, and
  // the complemented interpreter on its target.
  {
    std::map<std::array<int, 4>, int> ids;
    std::vector<std::array<int, 4>> nodes;
    std::vector<int> parent;
    std::vector<std::array<Symbol, 3>> via;  // formula letter, source letter, target letter
    std::deque<int> queue;
    int found = -1;

    auto intern = [&](std::array<int, 4> key, int from, std::array<Symbol, 3> letters) {
      auto [it, fresh] = ids.try_emplace(key, static_cast<int>(nodes.size()));
      if (fresh) {
        spend();
        nodes.push_back(key);
        parent.push_back(from);
        via.push_back(letters);
        queue.push_back(it->second);
        if (cert.is_accepting(key[0]) && key[1] == full && t.is_accepting(key[2]) &&
            key[3] != full && found < 0)
          found = it->second;
      }
      return it->second;
    };

    for (int c0 : cert.initial())
      for (int t0 : t.initial()) intern({c0, 0, t0, 0}, -1, {-1, -1, -1});

    while (!queue.empty() && found < 0) {
      int id = queue.front();
      queue.pop_front();
      auto [qc, sv1, qt, sv2] = nodes[static_cast<std::size_t>(id)];
      for (const Arc& cert_arc : cert.arcs(qc))
        for (const Arc& step_arc : t.arcs(qt)) {
          auto [a, b] = t.alphabet().split(step_arc.symbol);
          int nv1 = sv1 | static_cast<int>(satisfied_rows(gamma, cert_arc.symbol, a));
          int nv2 = sv2 | static_cast<int>(satisfied_rows(gamma, cert_arc.symbol, b));
          intern({cert_arc.target, nv1, step_arc.target, nv2}, id,
                 {cert_arc.symbol, a, b});
          if (found >= 0) break;
        }
    }

    if (found >= 0) {
      Word formula, source, target;
      for (int id = found; parent[static_cast<std::size_t>(id)] >= 0 || via[static_cast<std::size_t>(id)][0] >= 0;
           id = parent[static_cast<std::size_t>(id)]) {
        formula.push_back(via[static_cast<std::size_t>(id)][0]);
        source.push_back(via[static_cast<std::size_t>(id)][1]);
        target.push_back(via[static_cast<std::size_t>(id)][2]);
      }
      std::reverse(formula.begin(), formula.end());
      std::reverse(source.begin(), source.end());
      std::reverse(target.begin(), target.end());
      out.verdict = Verdict::inconclusive;
      out.witness = formula;
      out.witness_alphabet = gamma;
      out.detail = "inductiveness failed: formula " + format_word(gamma, formula) +
                   " breaks on the step " + format_word(r.alphabet, source) + " -> " +
                   format_word(r.alphabet, target);
      out.explored_states = cost;
      return out;
    }
  }

  // (b) Initial coverage: no initial configuration may falsify a
  // certificate formula of its length.
  {
    std::map<std::array<int, 3>, int> ids;
    std::vector<std::array<int, 3>> nodes;
    std::vector<int> parent;
    std::vector<std::array<Symbol, 2>> via;  // source letter, formula letter
    std::deque<int> queue;
    int found = -1;

    auto intern = [&](std::array<int, 3> key, int from, std::array<Symbol, 2> letters) {
      auto [it, fresh] = ids.try_emplace(key, static_cast<int>(nodes.size()));
      if (fresh) {
        spend();
        nodes.push_back(key);
        parent.push_back(from);
        via.push_back(letters);
        queue.push_back(it->second);
        if (init.is_accepting(key[0]) && key[1] != full && cert.is_accepting(key[2]) && found < 0)
          found = it->second;
      }
      return it->second;
    };

    for (int i0 : init.initial())
      for (int c0 : cert.initial()) intern({i0, 0, c0}, -1, {-1, -1});

    while (!queue.empty() && found < 0) {
      int id = queue.front();
      queue.pop_front();
      auto [qi, sv, qc] = nodes[static_cast<std::size_t>(id)];
      for (const Arc& init_arc : init.arcs(qi))
        for (const Arc& cert_arc : cert.arcs(qc)) {
          int nv = sv | static_cast<int>(satisfied_rows(gamma, cert_arc.symbol, init_arc.symbol));
          intern({init_arc.target, nv, cert_arc.target}, id, {init_arc.symbol, cert_arc.symbol});
          if (found >= 0) break;
        }
    }

    if (found >= 0) {
      Word configuration, formula;
      for (int id = found; parent[static_cast<std::size_t>(id)] >= 0 || via[static_cast<std::size_t>(id)][0] >= 0;
           id = parent[static_cast<std::size_t>(id)]) {
        configuration.push_back(via[static_cast<std::size_t>(id)][0]);
        formula.push_back(via[static_cast<std::size_t>(id)][1]);
      }
      std::reverse(configuration.begin(), configuration.end());
      std::reverse(formula.begin(), formula.end());
      out.verdict = Verdict::inconclusive;
      out.witness = configuration;
      out.witness_alphabet = r.alphabet;
      out.detail = "invariance failed: initial configuration " +
                   format_word(r.alphabet, configuration) + " falsifies certificate formula " +
                   format_word(gamma, formula);
      out.explored_states = cost;
      return out;
    }
  }

  // (c) Exclusion: every unsafe configuration must falsify some certificate
  // formula of its length. The certificate side is tracked as the
  // deterministic set of (row set, certificate state) runs.
  {
    using Run = std::pair<int, int>;  // satisfied-row set, certificate state
    std::map<std::vector<Run>, int> run_ids;
    std::vector<std::vector<Run>> run_sets;
    auto intern_runs = [&](std::vector<Run> runs) {
      std::sort(runs.begin(), runs.end());
      runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
      auto [it, fresh] = run_ids.try_emplace(std::move(runs), static_cast<int>(run_sets.size()));
      if (fresh) run_sets.push_back(it->first);
      return it->second;
    };
    auto excluded = [&](const std::vector<Run>& runs) {
      for (const auto& [sv, qc] : runs)
        if (sv != full && cert.is_accepting(qc)) return true;
      return false;
    };

    std::map<std::array<int, 2>, int> ids;
    std::vector<std::array<int, 2>> nodes;
    std::vector<int> parent;
    std::vector<Symbol> via;
    std::deque<int> queue;
    int found = -1;

    auto intern = [&](std::array<int, 2> key, int from, Symbol letter) {
      auto [it, fresh] = ids.try_emplace(key, static_cast<int>(nodes.size()));
      if (fresh) {
        spend();
        nodes.push_back(key);
        parent.push_back(from);
        via.push_back(letter);
        queue.push_back(it->second);
        if (unsafe.is_accepting(key[0]) &&
            !excluded(run_sets[static_cast<std::size_t>(key[1])]) && found < 0)
          found = it->second;
      }
      return it->second;
    };

    std::vector<Run> start;
    for (int c0 : cert.initial()) start.emplace_back(0, c0);
    int start_id = intern_runs(std::move(start));
    for (int u0 : unsafe.initial()) intern({u0, start_id}, -1, -1);

    while (!queue.empty() && found < 0) {
      int id = queue.front();
      queue.pop_front();
      auto [qu, rid] = nodes[static_cast<std::size_t>(id)];
      const std::vector<Run> runs = run_sets[static_cast<std::size_t>(rid)];
      Symbol last = -1;
      int next_rid = -1;
      for (const Arc& unsafe_arc : unsafe.arcs(qu)) {
        if (unsafe_arc.symbol != last) {
          last = unsafe_arc.symbol;
          std::vector<Run> next;
          for (const auto& [sv, qc] : runs)
            for (const Arc& cert_arc : cert.arcs(qc))
              next.emplace_back(
                  sv | static_cast<int>(satisfied_rows(gamma, cert_arc.symbol, last)),
                  cert_arc.target);
          next_rid = intern_runs(std::move(next));
        }
        intern({unsafe_arc.target, next_rid}, id, last);
        if (found >= 0) break;
      }
    }

    if (found >= 0) {
      Word configuration;
      for (int id = found; parent[static_cast<std::size_t>(id)] >= 0 || via[static_cast<std::size_t>(id)] >= 0;
           id = parent[static_cast<std::size_t>(id)]) {
        configuration.push_back(via[static_cast<std::size_t>(id)]);
      }
      std::reverse(configuration.begin(), configuration.end());
      out.verdict = Verdict::inconclusive;
      out.witness = configuration;
      out.witness_alphabet = r.alphabet;
      out.detail = "exclusion failed: unsafe configuration " +
                   format_word(r.alphabet, configuration) +
                   " satisfies every certificate formula of its length";
      out.explored_states = cost;
      return out;
    }
  }

  out.detail = "certificate is unbreakable, holds initially, and excludes the unsafe set";
  out.explored_states = cost;
  return out;
}

}  // namespace rmc
