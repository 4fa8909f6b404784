#include "rmc/ops.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

#include "rmc/errors.hpp"

namespace rmc {

namespace {

// Dense DFA rows refuse absurd alphabets; the symbolic pipeline never needs
// them above this size.
constexpr std::int64_t kMaxDenseAlphabet = 1 << 22;

void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* op) {
  if (a != b) throw AlphabetMismatch(std::string(op) + ": operand alphabets differ");
}

// Reachable state pairs of a synchronized product, arcs paired per symbol.
// `accept` decides acceptance from the two component flags.
template <typename Accept>
Nfa product(const Nfa& a, const Nfa& b, Accept accept) {
  Nfa out(a.alphabet(), 0);
  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> queue;
  auto intern = [&](int s, int t) {
    auto [it, fresh] = id.try_emplace({s, t}, out.state_count());
    if (fresh) {
      out.add_state();
      queue.push_back({s, t});
    }
    return it->second;
  };
  for (int s : a.initial())
    for (int t : b.initial()) out.add_initial(intern(s, t));
  while (!queue.empty()) {
    auto [s, t] = queue.front();
    queue.pop_front();
    int from = id.at({s, t});
    if (accept(a.is_accepting(s), b.is_accepting(t))) out.add_accepting(from);
    const auto& as = a.arcs(s);
    const auto& bs = b.arcs(t);
    std::size_t i = 0, j = 0;
    while (i < as.size() && j < bs.size()) {
      if (as[i].symbol < bs[j].symbol) {
        ++i;
      } else if (bs[j].symbol < as[i].symbol) {
        ++j;
      } else {
        Symbol sym = as[i].symbol;
        std::size_t i2 = i, j2 = j;
        while (i2 < as.size() && as[i2].symbol == sym) ++i2;
        while (j2 < bs.size() && bs[j2].symbol == sym) ++j2;
        for (std::size_t x = i; x < i2; ++x)
          for (std::size_t y = j; y < j2; ++y)
            out.add_arc(from, sym, intern(as[x].target, bs[y].target));
        i = i2;
        j = j2;
      }
    }
  }
  out.normalize();
  return out;
}

// FNV-style combine; subsets are sorted, so equal sets hash equally.
struct SubsetHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Subsets of NFAs with at most kMaskWords*64 states ride in fixed bitmasks,
// which keeps the subset construction fast on the hot pipeline automata.
constexpr int kMaskWords = 4;
using SubsetMask = std::array<std::uint64_t, kMaskWords>;

struct MaskHash {
  std::size_t operator()(const SubsetMask& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : m) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

Dfa determinize_masked(const Nfa& a, std::size_t state_budget) {
  const std::size_t sigma = static_cast<std::size_t>(a.alphabet().size());

  SubsetMask accepting{};
  for (int s : a.accepting())
    accepting[static_cast<std::size_t>(s) / 64] |= 1ull << (static_cast<std::size_t>(s) % 64);

  std::unordered_map<SubsetMask, int, MaskHash> id;
  std::vector<SubsetMask> subsets;
  std::deque<int> queue;
  auto intern = [&](const SubsetMask& subset) {
    auto [it, fresh] = id.try_emplace(subset, static_cast<int>(subsets.size()));
    if (fresh) {
      if (subsets.size() >= state_budget) throw BudgetExceeded("determinize", state_budget);
      subsets.push_back(subset);
      queue.push_back(it->second);
    }
    return it->second;
  };

  SubsetMask start{};
  for (int s : a.initial())
    start[static_cast<std::size_t>(s) / 64] |= 1ull << (static_cast<std::size_t>(s) % 64);
  intern(start);

  std::vector<std::vector<int>> rows;
  std::vector<char> acc;
  std::vector<SubsetMask> buckets(sigma);
  std::vector<Symbol> touched;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    const SubsetMask subset = subsets[static_cast<std::size_t>(q)];
    bool is_acc = false;
    touched.clear();
    for (int word = 0; word < kMaskWords; ++word) {
      if (subset[static_cast<std::size_t>(word)] & accepting[static_cast<std::size_t>(word)])
        is_acc = true;
      std::uint64_t bits = subset[static_cast<std::size_t>(word)];
      while (bits) {
        const int s = word * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        for (const Arc& arc : a.arcs(s)) {
          auto& bucket = buckets[static_cast<std::size_t>(arc.symbol)];
          if (bucket == SubsetMask{}) touched.push_back(arc.symbol);
          bucket[static_cast<std::size_t>(arc.target) / 64] |=
              1ull << (static_cast<std::size_t>(arc.target) % 64);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    if (rows.size() <= static_cast<std::size_t>(q)) {
      rows.resize(static_cast<std::size_t>(q) + 1);
      acc.resize(static_cast<std::size_t>(q) + 1);
    }
    acc[static_cast<std::size_t>(q)] = is_acc ? 1 : 0;
    auto& row = rows[static_cast<std::size_t>(q)];
    row.assign(sigma, -1);
    for (Symbol sym : touched) {
      auto& bucket = buckets[static_cast<std::size_t>(sym)];
      row[static_cast<std::size_t>(sym)] = intern(bucket);
      bucket = SubsetMask{};
    }
  }

  const int dead = intern(SubsetMask{});
  if (rows.size() < subsets.size()) {
    rows.resize(subsets.size());
    acc.resize(subsets.size());
  }
  if (rows[static_cast<std::size_t>(dead)].empty())
    rows[static_cast<std::size_t>(dead)].assign(sigma, dead);

  Dfa out(a.alphabet(), static_cast<int>(subsets.size()), 0);
  for (int q = 0; q < out.state_count(); ++q) {
    if (acc[static_cast<std::size_t>(q)]) out.set_accepting(q);
    const auto& row = rows[static_cast<std::size_t>(q)];
    for (std::size_t x = 0; x < sigma; ++x)
      out.set_next(q, static_cast<Symbol>(x), row[x] < 0 ? dead : row[x]);
  }
  return out;
}

}  // namespace

Dfa determinize(const Nfa& a, std::size_t state_budget) {
  if (a.alphabet().size() > kMaxDenseAlphabet)
    throw ValidationError("determinize: alphabet too large for a dense DFA");
  if (a.state_count() <= kMaskWords * 64) return determinize_masked(a, state_budget);
  const std::size_t sigma = static_cast<std::size_t>(a.alphabet().size());

  std::unordered_map<std::vector<int>, int, SubsetHash> id;
  std::vector<const std::vector<int>*> subsets;  // keys stay put in the node map
  std::deque<int> queue;
  auto intern = [&](std::vector<int> subset) {
    auto [it, fresh] = id.try_emplace(std::move(subset), static_cast<int>(subsets.size()));
    if (fresh) {
      if (subsets.size() >= state_budget) throw BudgetExceeded("determinize", state_budget);
      subsets.push_back(&it->first);
      queue.push_back(it->second);
    }
    return it->second;
  };

  std::vector<int> start = a.initial();
  intern(start);
  // rows[q][x] filled as subsets are popped; the dead subset loops to itself.
  std::vector<std::vector<int>> rows;
  std::vector<char> acc;
  // Reusable per-symbol buckets; `touched` lists the dirty ones.
  std::vector<std::vector<int>> buckets(sigma);
  std::vector<Symbol> touched;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    const std::vector<int>& subset = *subsets[static_cast<std::size_t>(q)];
    bool accepting = false;
    touched.clear();
    for (int s : subset) {
      if (a.is_accepting(s)) accepting = true;
      for (const Arc& arc : a.arcs(s)) {
        auto& bucket = buckets[static_cast<std::size_t>(arc.symbol)];
        if (bucket.empty()) touched.push_back(arc.symbol);
        bucket.push_back(arc.target);
      }
    }
    std::sort(touched.begin(), touched.end());
    if (rows.size() <= static_cast<std::size_t>(q)) {
      rows.resize(static_cast<std::size_t>(q) + 1);
      acc.resize(static_cast<std::size_t>(q) + 1);
    }
    acc[static_cast<std::size_t>(q)] = accepting ? 1 : 0;
    auto& row = rows[static_cast<std::size_t>(q)];
    row.assign(sigma, -1);
    for (Symbol sym : touched) {
      auto& targets = buckets[static_cast<std::size_t>(sym)];
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      row[static_cast<std::size_t>(sym)] = intern(std::move(targets));
      buckets[static_cast<std::size_t>(sym)].clear();
    }
  }

  const int dead = intern({});  // ensure a dead state exists even if unreachable
  if (rows.size() < subsets.size()) {
    rows.resize(subsets.size());
    acc.resize(subsets.size());
  }
  // The dead subset may have been interned last without being popped.
  if (rows[static_cast<std::size_t>(dead)].empty())
    rows[static_cast<std::size_t>(dead)].assign(sigma, dead);

  Dfa out(a.alphabet(), static_cast<int>(subsets.size()), 0);
  for (int q = 0; q < out.state_count(); ++q) {
    if (acc[static_cast<std::size_t>(q)]) out.set_accepting(q);
    const auto& row = rows[static_cast<std::size_t>(q)];
    for (std::size_t x = 0; x < sigma; ++x)
      out.set_next(q, static_cast<Symbol>(x), row[x] < 0 ? dead : row[x]);
  }
  return out;
}

Dfa complement(Dfa a) {
  for (int s = 0; s < a.state_count(); ++s) a.set_accepting(s, !a.is_accepting(s));
  return a;
}

Nfa trim(const Nfa& a) {
  const int n = a.state_count();
  std::vector<char> forward(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (int s : a.initial()) {
    forward[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (const Arc& arc : a.arcs(s))
      if (!forward[static_cast<std::size_t>(arc.target)]) {
        forward[static_cast<std::size_t>(arc.target)] = 1;
        stack.push_back(arc.target);
      }
  }

  std::vector<std::vector<int>> reverse(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s)
    for (const Arc& arc : a.arcs(s)) reverse[static_cast<std::size_t>(arc.target)].push_back(s);
  std::vector<char> backward(static_cast<std::size_t>(n), 0);
  for (int s : a.accepting()) {
    backward[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int p : reverse[static_cast<std::size_t>(s)])
      if (!backward[static_cast<std::size_t>(p)]) {
        backward[static_cast<std::size_t>(p)] = 1;
        stack.push_back(p);
      }
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  int live = 0;
  for (int s = 0; s < n; ++s)
    if (forward[static_cast<std::size_t>(s)] && backward[static_cast<std::size_t>(s)])
      map[static_cast<std::size_t>(s)] = live++;
  Nfa out(a.alphabet(), live);
  for (int s : a.initial())
    if (map[static_cast<std::size_t>(s)] >= 0) out.add_initial(map[static_cast<std::size_t>(s)]);
  for (int s : a.accepting())
    if (map[static_cast<std::size_t>(s)] >= 0) out.add_accepting(map[static_cast<std::size_t>(s)]);
  for (int s = 0; s < n; ++s) {
    if (map[static_cast<std::size_t>(s)] < 0) continue;
    for (const Arc& arc : a.arcs(s))
      if (map[static_cast<std::size_t>(arc.target)] >= 0)
        out.add_arc(map[static_cast<std::size_t>(s)], arc.symbol,
                    map[static_cast<std::size_t>(arc.target)]);
  }
  out.normalize();
  return out;
}

Nfa to_nfa(const Dfa& a) {
  Nfa out(a.alphabet(), a.state_count());
  out.add_initial(a.initial_state());
  for (int s = 0; s < a.state_count(); ++s) {
    if (a.is_accepting(s)) out.add_accepting(s);
    for (Symbol x = 0; x < a.alphabet().size(); ++x) out.add_arc(s, x, a.next(s, x));
  }
  out.normalize();
  return out;
}

Nfa intersect(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "intersect");
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Nfa union_nfa(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "union");
  Nfa out(a.alphabet(), a.state_count() + b.state_count());
  for (int s : a.initial()) out.add_initial(s);
  for (int s : a.accepting()) out.add_accepting(s);
  for (int s = 0; s < a.state_count(); ++s)
    for (const Arc& arc : a.arcs(s)) out.add_arc(s, arc.symbol, arc.target);
  const int off = a.state_count();
  for (int s : b.initial()) out.add_initial(off + s);
  for (int s : b.accepting()) out.add_accepting(off + s);
  for (int s = 0; s < b.state_count(); ++s)
    for (const Arc& arc : b.arcs(s)) out.add_arc(off + s, arc.symbol, off + arc.target);
  out.normalize();
  return out;
}

namespace {

// Shared skeleton for join/post/pre: pair arcs of `a` and `b` on a middle
// letter and relabel. Extract(a_arc) -> (middle, out_part).
template <typename Out, typename ArcsB, typename Emit>
Out compose_products(const Alphabet& out_alphabet, const Nfa& a, const Nfa& b, ArcsB middle_of_b,
                     Emit emit) {
  Out out(out_alphabet, 0);
  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> queue;
  auto intern = [&](int s, int t) {
    auto [it, fresh] = id.try_emplace({s, t}, out.state_count());
    if (fresh) {
      out.add_state();
      queue.push_back({s, t});
    }
    return it->second;
  };
  for (int s : a.initial())
    for (int t : b.initial()) out.add_initial(intern(s, t));
  while (!queue.empty()) {
    auto [s, t] = queue.front();
    queue.pop_front();
    int from = id.at({s, t});
    if (a.is_accepting(s) && b.is_accepting(t)) out.add_accepting(from);
    // Group b's arcs by middle letter once per state.
    std::map<Symbol, std::vector<std::pair<Symbol, int>>> by_middle;
    for (const Arc& arc : b.arcs(t)) {
      auto [mid, keep] = middle_of_b(arc.symbol);
      by_middle[mid].push_back({keep, arc.target});
    }
    for (const Arc& arc : a.arcs(s)) {
      auto [mid, keep] = emit(arc.symbol);
      auto it = by_middle.find(mid);
      if (it == by_middle.end()) continue;
      for (auto [keep_b, tb] : it->second)
        out.add_arc(from, out_alphabet.kind() == Alphabet::Kind::pair
                              ? out_alphabet.pair_symbol(keep, keep_b)
                              : (keep >= 0 ? keep : keep_b),
                    intern(arc.target, tb));
    }
  }
  out.normalize();
  return out;
}

}  // namespace

Transducer join(const Transducer& a, const Transducer& b) {
  if (a.right_alphabet() != b.left_alphabet())
    throw AlphabetMismatch("join: middle alphabets differ");
  Alphabet out_alpha = Alphabet::pair(a.left_alphabet(), b.right_alphabet());
  return compose_products<Transducer>(
      out_alpha, a, b,
      [&](Symbol s) { return b.alphabet().split(s); },
      [&](Symbol s) {
        auto [l, r] = a.alphabet().split(s);
        return std::pair<Symbol, Symbol>{r, l};
      });
}

Nfa post_image(const Nfa& language, const Transducer& relation) {
  if (language.alphabet() != relation.left_alphabet())
    throw AlphabetMismatch("post_image: language is not over the relation's left alphabet");
  return compose_products<Nfa>(
      relation.right_alphabet(), language, relation,
      [&](Symbol s) { return relation.alphabet().split(s); },
      [](Symbol s) { return std::pair<Symbol, Symbol>{s, -1}; });
}

Nfa pre_image(const Transducer& relation, const Nfa& language) {
  if (language.alphabet() != relation.right_alphabet())
    throw AlphabetMismatch("pre_image: language is not over the relation's right alphabet");
  return compose_products<Nfa>(
      relation.left_alphabet(), relation, language,
      [](Symbol s) { return std::pair<Symbol, Symbol>{s, -1}; },
      [&](Symbol s) {
        auto [l, r] = relation.alphabet().split(s);
        return std::pair<Symbol, Symbol>{r, l};
      });
}

Nfa project(const Transducer& relation, int side) {
  if (side != 1 && side != 2) throw ValidationError("project: side must be 1 or 2");
  Alphabet out_alpha = side == 1 ? relation.left_alphabet() : relation.right_alphabet();
  Nfa out(out_alpha, relation.state_count());
  for (int s : relation.initial()) out.add_initial(s);
  for (int s : relation.accepting()) out.add_accepting(s);
  for (int s = 0; s < relation.state_count(); ++s)
    for (const Arc& arc : relation.arcs(s)) {
      auto [l, r] = relation.alphabet().split(arc.symbol);
      out.add_arc(s, side == 1 ? l : r, arc.target);
    }
  out.normalize();
  return out;
}

Transducer inverse(const Transducer& relation) {
  Alphabet out_alpha = Alphabet::pair(relation.right_alphabet(), relation.left_alphabet());
  Transducer out(out_alpha, relation.state_count());
  for (int s : relation.initial()) out.add_initial(s);
  for (int s : relation.accepting()) out.add_accepting(s);
  for (int s = 0; s < relation.state_count(); ++s)
    for (const Arc& arc : relation.arcs(s)) {
      auto [l, r] = relation.alphabet().split(arc.symbol);
      out.add_arc(s, out_alpha.pair_symbol(r, l), arc.target);
    }
  out.normalize();
  return out;
}

Transducer as_transducer(const Nfa& a) {
  if (a.alphabet().kind() != Alphabet::Kind::pair)
    throw AlphabetMismatch("as_transducer: alphabet is not a pair alphabet");
  Transducer out(a.alphabet(), a.state_count());
  for (int s : a.initial()) out.add_initial(s);
  for (int s : a.accepting()) out.add_accepting(s);
  for (int s = 0; s < a.state_count(); ++s)
    for (const Arc& arc : a.arcs(s)) out.add_arc(s, arc.symbol, arc.target);
  out.normalize();
  return out;
}

std::optional<Word> is_empty_with_witness(const Nfa& a) {
  const int n = a.state_count();
  // Distance from each state to acceptance, by reverse BFS.
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  {
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
      for (const Arc& arc : a.arcs(s)) rev[static_cast<std::size_t>(arc.target)].push_back(s);
    std::deque<int> queue;
    for (int s : a.accepting()) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (int s : rev[static_cast<std::size_t>(t)])
        if (dist[static_cast<std::size_t>(s)] < 0) {
          dist[static_cast<std::size_t>(s)] = dist[static_cast<std::size_t>(t)] + 1;
          queue.push_back(s);
        }
    }
  }
  int best = -1;
  for (int s : a.initial()) {
    int d = dist[static_cast<std::size_t>(s)];
    if (d >= 0 && (best < 0 || d < best)) best = d;
  }
  if (best < 0) return std::nullopt;

  // Greedy lexicographic extraction: keep the set of states on shortest paths.
  Word word;
  std::vector<int> frontier;
  for (int s : a.initial())
    if (dist[static_cast<std::size_t>(s)] == best) frontier.push_back(s);
  for (int remaining = best; remaining > 0; --remaining) {
    Symbol chosen = -1;
    std::vector<int> next;
    // Candidate symbols in ascending order, from the frontier's arcs.
    std::vector<Symbol> candidates;
    for (int s : frontier)
      for (const Arc& arc : a.arcs(s)) candidates.push_back(arc.symbol);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (Symbol x : candidates) {
      next.clear();
      for (int s : frontier)
        for (const Arc& arc : a.arcs(s, x))
          if (dist[static_cast<std::size_t>(arc.target)] == remaining - 1)
            next.push_back(arc.target);
      if (!next.empty()) {
        chosen = x;
        break;
      }
    }
    assert(chosen >= 0);
    word.push_back(chosen);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return word;
}

Dfa minimize(const Dfa& input) {
  const std::int64_t sigma = input.alphabet().size();
  // Reachable restriction first.
  std::vector<int> order;
  std::vector<int> id(static_cast<std::size_t>(input.state_count()), -1);
  order.push_back(input.initial_state());
  id[static_cast<std::size_t>(input.initial_state())] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol x = 0; x < sigma; ++x) {
      int t = input.next(order[i], x);
      if (id[static_cast<std::size_t>(t)] < 0) {
        id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const int n = static_cast<int>(order.size());

  // Moore refinement over the reachable part.
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) cls[static_cast<std::size_t>(s)] = input.is_accepting(order[static_cast<std::size_t>(s)]) ? 1 : 0;
  int class_count = 2;
  for (;;) {
    std::unordered_map<std::vector<int>, int, SubsetHash> sig_id;
    std::vector<int> next_cls(static_cast<std::size_t>(n));
    std::vector<int> sig;
    for (int s = 0; s < n; ++s) {
      sig.clear();
      sig.reserve(static_cast<std::size_t>(sigma) + 1);
      sig.push_back(cls[static_cast<std::size_t>(s)]);
      for (Symbol x = 0; x < sigma; ++x)
        sig.push_back(cls[static_cast<std::size_t>(id[static_cast<std::size_t>(input.next(order[static_cast<std::size_t>(s)], x))])]);
      auto [it, fresh] = sig_id.try_emplace(sig, static_cast<int>(sig_id.size()));
      next_cls[static_cast<std::size_t>(s)] = it->second;
      (void)fresh;
    }
    if (static_cast<int>(sig_id.size()) == class_count) {
      cls = std::move(next_cls);
      break;
    }
    class_count = static_cast<int>(sig_id.size());
    cls = std::move(next_cls);
  }

  // Quotient, renumbered breadth-first from the initial class.
  std::vector<int> repr(static_cast<std::size_t>(class_count), -1);
  for (int s = 0; s < n; ++s)
    if (repr[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])] < 0)
      repr[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])] = s;
  std::vector<int> bfs_id(static_cast<std::size_t>(class_count), -1);
  std::vector<int> bfs_order;
  int start_cls = cls[static_cast<std::size_t>(0)];
  bfs_id[static_cast<std::size_t>(start_cls)] = 0;
  bfs_order.push_back(start_cls);
  for (std::size_t i = 0; i < bfs_order.size(); ++i) {
    int c = bfs_order[i];
    int s = repr[static_cast<std::size_t>(c)];
    for (Symbol x = 0; x < sigma; ++x) {
      int tc = cls[static_cast<std::size_t>(id[static_cast<std::size_t>(input.next(order[static_cast<std::size_t>(s)], x))])];
      if (bfs_id[static_cast<std::size_t>(tc)] < 0) {
        bfs_id[static_cast<std::size_t>(tc)] = static_cast<int>(bfs_order.size());
        bfs_order.push_back(tc);
      }
    }
  }

  Dfa out(input.alphabet(), class_count, 0);
  for (int c : bfs_order) {
    int s = repr[static_cast<std::size_t>(c)];
    int from = bfs_id[static_cast<std::size_t>(c)];
    if (input.is_accepting(order[static_cast<std::size_t>(s)])) out.set_accepting(from);
    for (Symbol x = 0; x < sigma; ++x) {
      int tc = cls[static_cast<std::size_t>(id[static_cast<std::size_t>(input.next(order[static_cast<std::size_t>(s)], x))])];
      out.set_next(from, x, bfs_id[static_cast<std::size_t>(tc)]);
    }
  }
  return out;
}

bool equivalent(const Nfa& a, const Nfa& b, std::size_t state_budget) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "equivalent");
  Dfa da = determinize(a, state_budget);
  Dfa db = determinize(b, state_budget);
  // Reachable pairs of the product; any acceptance mismatch is a difference.
  std::map<std::pair<int, int>, int> seen;
  std::deque<std::pair<int, int>> queue;
  queue.push_back({da.initial_state(), db.initial_state()});
  seen[{da.initial_state(), db.initial_state()}] = 0;
  while (!queue.empty()) {
    auto [s, t] = queue.front();
    queue.pop_front();
    if (da.is_accepting(s) != db.is_accepting(t)) return false;
    for (Symbol x = 0; x < da.alphabet().size(); ++x) {
      std::pair<int, int> nxt{da.next(s, x), db.next(t, x)};
      if (seen.emplace(nxt, 0).second) queue.push_back(nxt);
    }
  }
  return true;
}

Transducer identity_transducer(const Alphabet& alphabet) {
  Alphabet pairs = Alphabet::pair(alphabet, alphabet);
  Transducer out(pairs, 1);
  out.add_initial(0);
  out.add_accepting(0);
  for (Symbol x = 0; x < alphabet.size(); ++x) out.add_arc(0, pairs.pair_symbol(x, x), 0);
  out.normalize();
  return out;
}

Transducer diagonal(const Dfa& a) {
  Alphabet pairs = Alphabet::pair(a.alphabet(), a.alphabet());
  Transducer out(pairs, a.state_count());
  out.add_initial(a.initial_state());
  for (int s = 0; s < a.state_count(); ++s) {
    if (a.is_accepting(s)) out.add_accepting(s);
    for (Symbol x = 0; x < a.alphabet().size(); ++x)
      out.add_arc(s, pairs.pair_symbol(x, x), a.next(s, x));
  }
  out.normalize();
  return out;
}

Nfa all_words(const Alphabet& alphabet) {
  Nfa out(alphabet, 1);
  out.add_initial(0);
  out.add_accepting(0);
  for (Symbol x = 0; x < alphabet.size(); ++x) out.add_arc(0, x, 0);
  out.normalize();
  return out;
}

Nfa word_nfa(const Alphabet& alphabet, const Word& word) {
  Nfa out(alphabet, static_cast<int>(word.size()) + 1);
  out.add_initial(0);
  out.add_accepting(static_cast<int>(word.size()));
  for (std::size_t i = 0; i < word.size(); ++i)
    out.add_arc(static_cast<int>(i), word[i], static_cast<int>(i) + 1);
  out.normalize();
  return out;
}

Nfa factor_nfa(const Alphabet& alphabet, const Word& factor) {
  const int k = static_cast<int>(factor.size());
  Nfa out(alphabet, k + 1);
  out.add_initial(0);
  out.add_accepting(k);
  for (Symbol x = 0; x < alphabet.size(); ++x) {
    out.add_arc(0, x, 0);
    out.add_arc(k, x, k);
  }
  for (int i = 0; i < k; ++i) out.add_arc(i, factor[static_cast<std::size_t>(i)], i + 1);
  out.normalize();
  return out;
}

Nfa subsequence_nfa(const Alphabet& alphabet, const Word& letters) {
  const int k = static_cast<int>(letters.size());
  Nfa out(alphabet, k + 1);
  out.add_initial(0);
  out.add_accepting(k);
  for (int i = 0; i <= k; ++i)
    for (Symbol x = 0; x < alphabet.size(); ++x) out.add_arc(i, x, i);
  for (int i = 0; i < k; ++i) out.add_arc(i, letters[static_cast<std::size_t>(i)], i + 1);
  out.normalize();
  return out;
}

Nfa length_at_least(const Alphabet& alphabet, int k) {
  Nfa out(alphabet, k + 1);
  out.add_initial(0);
  out.add_accepting(k);
  for (int i = 0; i < k; ++i)
    for (Symbol x = 0; x < alphabet.size(); ++x) out.add_arc(i, x, i + 1);
  for (Symbol x = 0; x < alphabet.size(); ++x) out.add_arc(k, x, k);
  out.normalize();
  return out;
}

Nfa length_multiple_of(const Alphabet& alphabet, int m) {
  if (m <= 0) throw ValidationError("length_multiple_of: modulus must be positive");
  Nfa out(alphabet, m);
  out.add_initial(0);
  out.add_accepting(0);
  for (int i = 0; i < m; ++i)
    for (Symbol x = 0; x < alphabet.size(); ++x) out.add_arc(i, x, (i + 1) % m);
  out.normalize();
  return out;
}

}  // namespace rmc
