#include "rmc/nfa.hpp"

#include <algorithm>

#include "rmc/errors.hpp"

namespace rmc {

Nfa::Nfa(Alphabet alphabet, int state_count)
    : alphabet_(std::move(alphabet)), state_count_(state_count) {
  if (state_count < 0) throw ValidationError("negative state count");
  initial_mask_.assign(static_cast<std::size_t>(state_count), 0);
  accepting_mask_.assign(static_cast<std::size_t>(state_count), 0);
  arcs_.resize(static_cast<std::size_t>(state_count));
}

int Nfa::add_state() {
  ++state_count_;
  initial_mask_.push_back(0);
  accepting_mask_.push_back(0);
  arcs_.emplace_back();
  return state_count_ - 1;
}

void Nfa::add_initial(int state) {
  assert(state >= 0 && state < state_count_);
  if (!initial_mask_[static_cast<std::size_t>(state)]) {
    initial_mask_[static_cast<std::size_t>(state)] = 1;
    initial_.push_back(state);
  }
}

void Nfa::add_accepting(int state) {
  assert(state >= 0 && state < state_count_);
  if (!accepting_mask_[static_cast<std::size_t>(state)]) {
    accepting_mask_[static_cast<std::size_t>(state)] = 1;
    accepting_.push_back(state);
  }
}

void Nfa::add_arc(int from, Symbol symbol, int to) {
  assert(from >= 0 && from < state_count_);
  assert(to >= 0 && to < state_count_);
  assert(symbol >= 0 && symbol < alphabet_.size());
  arcs_[static_cast<std::size_t>(from)].push_back(Arc{symbol, to});
}

void Nfa::normalize() {
  std::sort(initial_.begin(), initial_.end());
  std::sort(accepting_.begin(), accepting_.end());
  for (auto& list : arcs_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool Nfa::is_initial(int state) const {
  assert(state >= 0 && state < state_count_);
  return initial_mask_[static_cast<std::size_t>(state)] != 0;
}

bool Nfa::is_accepting(int state) const {
  assert(state >= 0 && state < state_count_);
  return accepting_mask_[static_cast<std::size_t>(state)] != 0;
}

std::span<const Arc> Nfa::arcs(int state, Symbol symbol) const {
  const auto& list = arcs_[static_cast<std::size_t>(state)];
  auto lo = std::lower_bound(list.begin(), list.end(), Arc{symbol, -1});
  auto hi = std::upper_bound(list.begin(), list.end(), Arc{symbol, state_count_});
  return {list.data() + (lo - list.begin()), static_cast<std::size_t>(hi - lo)};
}

std::size_t Nfa::arc_count() const noexcept {
  std::size_t n = 0;
  for (const auto& list : arcs_) n += list.size();
  return n;
}

bool Nfa::accepts(const Word& word) const {
  std::vector<char> now(static_cast<std::size_t>(state_count_), 0);
  for (int s : initial_) now[static_cast<std::size_t>(s)] = 1;
  for (Symbol a : word) {
    if (a < 0 || a >= alphabet_.size()) throw ValidationError("symbol out of range");
    std::vector<char> next(static_cast<std::size_t>(state_count_), 0);
    for (int s = 0; s < state_count_; ++s) {
      if (!now[static_cast<std::size_t>(s)]) continue;
      for (const Arc& arc : arcs(s, a)) next[static_cast<std::size_t>(arc.target)] = 1;
    }
    now.swap(next);
  }
  for (int s : accepting_)
    if (now[static_cast<std::size_t>(s)]) return true;
  return false;
}

Dfa::Dfa(Alphabet alphabet, int state_count, int initial_state)
    : alphabet_(std::move(alphabet)), state_count_(state_count), initial_state_(initial_state) {
  if (state_count <= 0) throw ValidationError("DFA needs at least one state");
  if (initial_state < 0 || initial_state >= state_count)
    throw ValidationError("DFA initial state out of range");
  accepting_.assign(static_cast<std::size_t>(state_count), 0);
  next_.assign(static_cast<std::size_t>(state_count),
               std::vector<int>(static_cast<std::size_t>(alphabet_.size()), 0));
}

void Dfa::set_accepting(int state, bool value) {
  assert(state >= 0 && state < state_count_);
  accepting_[static_cast<std::size_t>(state)] = value ? 1 : 0;
}

void Dfa::set_next(int state, Symbol symbol, int target) {
  assert(state >= 0 && state < state_count_);
  assert(target >= 0 && target < state_count_);
  next_[static_cast<std::size_t>(state)][static_cast<std::size_t>(symbol)] = target;
}

bool Dfa::accepts(const Word& word) const {
  int s = initial_state_;
  for (Symbol a : word) {
    if (a < 0 || a >= alphabet_.size()) throw ValidationError("symbol out of range");
    s = next(s, a);
  }
  return is_accepting(s);
}

int Dfa::accepting_count() const {
  int n = 0;
  for (char c : accepting_) n += c != 0;
  return n;
}

Transducer::Transducer(Alphabet pair_alphabet, int state_count)
    : Nfa(std::move(pair_alphabet), state_count) {
  if (alphabet().kind() != Alphabet::Kind::pair)
    throw ValidationError("transducer alphabet must be a pair alphabet");
}

bool Transducer::accepts_pair(const Word& l, const Word& r) const {
  if (l.size() != r.size()) throw LengthMismatch("pair components differ in length");
  Word joined;
  joined.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) joined.push_back(alphabet().pair_symbol(l[i], r[i]));
  return accepts(joined);
}

}  // namespace rmc
