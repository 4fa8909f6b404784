#include "rmc/enumerate.hpp"

#include <algorithm>

#include "rmc/errors.hpp"

namespace rmc {

namespace {

struct NodeBudget {
  std::size_t limit;
  std::size_t used = 0;
  const char* op;
  void tick() {
    if (++used > limit) throw BudgetExceeded(op, limit);
  }
};

// Depth-first path enumeration; `emit` fires per accepting path of full
// length with the letter sequence.
template <typename Emit>
void walk(const Nfa& a, int len, NodeBudget& budget, Emit emit) {
  Word letters;
  std::vector<int> stack;
  auto rec = [&](auto&& self, int state, int depth) -> void {
    budget.tick();
    if (depth == len) {
      if (a.is_accepting(state)) emit(letters);
      return;
    }
    for (const Arc& arc : a.arcs(state)) {
      letters.push_back(arc.symbol);
      self(self, arc.target, depth + 1);
      letters.pop_back();
    }
  };
  for (int s : a.initial()) rec(rec, s, 0);
}

}  // namespace

std::vector<Word> language_at_length(const Nfa& a, int len, std::size_t budget) {
  NodeBudget nodes{budget, 0, "language_at_length"};
  std::set<Word> found;
  walk(a, len, nodes, [&](const Word& w) {
    if (found.insert(w).second) nodes.tick();
  });
  return {found.begin(), found.end()};
}

std::vector<std::pair<Word, Word>> transitions_at_length(const Rts& model, int len,
                                                         std::size_t budget) {
  NodeBudget nodes{budget, 0, "transitions_at_length"};
  std::set<std::pair<Word, Word>> found;
  const Alphabet& pairs = model.step.alphabet();
  walk(model.step, len, nodes, [&](const Word& letters) {
    Word left, right;
    left.reserve(letters.size());
    right.reserve(letters.size());
    for (Symbol s : letters) {
      auto [l, r] = pairs.split(s);
      left.push_back(l);
      right.push_back(r);
    }
    if (found.emplace(std::move(left), std::move(right)).second) nodes.tick();
  });
  return {found.begin(), found.end()};
}

std::set<Word> word_successors(const Rts& model, const Word& source, std::size_t budget) {
  NodeBudget nodes{budget, 0, "word_successors"};
  std::set<Word> out;
  const Transducer& step = model.step;
  const int len = static_cast<int>(source.size());
  Word target;
  auto rec = [&](auto&& self, int state, int depth) -> void {
    nodes.tick();
    if (depth == len) {
      if (step.is_accepting(state)) out.insert(target);
      return;
    }
    // Arcs whose left letter matches the source word at this position.
    for (const Arc& arc : step.arcs(state)) {
      auto [l, r] = step.alphabet().split(arc.symbol);
      if (l != source[static_cast<std::size_t>(depth)]) continue;
      target.push_back(r);
      self(self, arc.target, depth + 1);
      target.pop_back();
    }
  };
  for (int s : step.initial()) rec(rec, s, 0);
  return out;
}

std::set<Word> reach_at_length(const Rts& model, int len, std::size_t budget) {
  NodeBudget nodes{budget, 0, "reach_at_length"};
  std::set<Word> reached;
  std::vector<Word> queue;
  for (Word& w : language_at_length(model.initial, len, budget))
    if (reached.insert(w).second) queue.push_back(std::move(w));
  while (!queue.empty()) {
    Word w = std::move(queue.back());
    queue.pop_back();
    for (const Word& next : word_successors(model, w, budget)) {
      nodes.tick();
      if (reached.insert(next).second) queue.push_back(next);
    }
  }
  return reached;
}

}  // namespace rmc
