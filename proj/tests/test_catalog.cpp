#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "rmc/catalog.hpp"
#include "rmc/enumerate.hpp"
#include "rmc/errors.hpp"
#include "rmc/ops.hpp"

using namespace rmc;
using rmc::testing::all_words_of_length;
using rmc::testing::to_word;

namespace {

constexpr std::size_t kBudget = 4'000'000;

Word named_word(const Alphabet& alphabet, std::initializer_list<const char*> names) {
  Word out;
  for (const char* name : names) {
    auto symbol = alphabet.index(name);
    REQUIRE(symbol.has_value());
    out.push_back(*symbol);
  }
  return out;
}

std::vector<std::pair<Word, Word>> brute_transitions(const Rts& model, int len) {
  std::vector<std::pair<Word, Word>> out;
  for (const Word& u : all_words_of_length(model.alphabet, len))
    for (const Word& w : all_words_of_length(model.alphabet, len))
      if (model.step.accepts_pair(u, w)) out.emplace_back(u, w);
  return out;
}

// The two closed word shapes of the dining-philosophers reachable set:
// rounds of thinking/eating seats, or the first seat mid-meal.
std::set<std::string> phil_reach_strings(int len) {
  std::set<std::string> out;
  std::function<void(std::string)> quiet = [&](std::string w) {
    if (static_cast<int>(w.size()) == len) {
      out.insert(w);
      return;
    }
    if (static_cast<int>(w.size()) + 2 <= len) quiet(w + "tf");
    if (static_cast<int>(w.size()) + 4 <= len) quiet(w + "tbeb");
  };
  quiet("");
  std::function<void(std::string)> wrapped = [&](std::string w) {
    if (static_cast<int>(w.size()) + 1 == len) {
      out.insert(w + "b");
      return;
    }
    if (static_cast<int>(w.size()) + 3 <= len) wrapped(w + "ft");
    if (static_cast<int>(w.size()) + 5 <= len) wrapped(w + "bebt");
  };
  if (len >= 4) wrapped("ebt");
  return out;
}

// Independent step matchers for the cache protocols: direct positional logic,
// no automata machinery shared with the catalog builders.
struct CacheLetters {
  Symbol inv, excl, shared, dirty_excl, dirty_shared, unowned;
};

bool berkeley_fires(const CacheLetters& c, const Word& u, const Word& w) {
  const std::size_t n = u.size();
  if (w.size() != n) return false;
  auto others = [&](std::size_t p, auto pair_ok) {
    for (std::size_t q = 0; q < n; ++q)
      if (q != p && !pair_ok(u[q], w[q])) return false;
    return true;
  };
  for (std::size_t p = 0; p < n; ++p) {
    const Symbol a = u[p], b = w[p];
    auto copy = [](Symbol x, Symbol y) { return x == y; };
    if (a != c.inv && b == a && others(p, copy)) return true;
    if (a == c.inv && b == c.unowned && others(p, [&](Symbol x, Symbol y) {
          return (x == c.excl && y == c.shared) || (x != c.excl && y == x);
        }))
      return true;
    if (a == c.inv && b == c.excl &&
        others(p, [&](Symbol, Symbol y) { return y == c.inv; }))
      return true;
    if ((a == c.unowned || a == c.shared) && b == c.excl &&
        others(p, [&](Symbol x, Symbol y) {
          return x == c.excl ? y == c.excl : y == c.inv;
        }))
      return true;
    if (a != c.inv && b == c.inv && others(p, copy)) return true;
  }
  return false;
}

bool dragon_fires(const CacheLetters& c, const Word& u, const Word& w) {
  const std::size_t n = u.size();
  if (w.size() != n) return false;
  auto others = [&](std::size_t p, auto pair_ok) {
    for (std::size_t q = 0; q < n; ++q)
      if (q != p && !pair_ok(u[q], w[q])) return false;
    return true;
  };
  auto rest = [&](std::size_t p, std::size_t q, auto pair_ok) {
    for (std::size_t r = 0; r < n; ++r)
      if (r != p && r != q && !pair_ok(u[r], w[r])) return false;
    return true;
  };
  auto copy = [](Symbol x, Symbol y) { return x == y; };
  auto all_inv = [&](Symbol x, Symbol y) { return x == c.inv && y == c.inv; };
  auto demote_dirty = [&](Symbol x, Symbol y) {
    return x == c.dirty_shared ? y == c.shared : y == x;
  };
  auto share_all = [&](Symbol x, Symbol y) {
    return x == c.inv ? y == c.inv : y == c.shared;
  };
  for (std::size_t p = 0; p < n; ++p) {
    const Symbol a = u[p], b = w[p];
    if (a != c.inv && b == a && others(p, copy)) return true;
    if (a == c.inv && b == c.excl && others(p, all_inv)) return true;
    if (a == c.inv && b == c.shared && others(p, [&](Symbol x, Symbol y) {
          if (x == c.excl) return y == c.shared;
          if (x == c.dirty_excl) return y == c.dirty_shared;
          return y == x;
        }))
      return true;
    if (a == c.dirty_excl && b == c.dirty_excl && others(p, copy)) return true;
    if (a == c.excl && b == c.dirty_excl && others(p, copy)) return true;
    if ((a == c.shared || a == c.dirty_shared) && b == c.dirty_excl &&
        others(p, [&](Symbol x, Symbol y) {
          return y == x && (x == c.inv || x == c.excl || x == c.dirty_excl);
        }))
      return true;
    if (a == c.inv && b == c.dirty_excl && others(p, all_inv)) return true;
    if (a != c.inv && b == c.inv && others(p, copy)) return true;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == p) continue;
      const Symbol a2 = u[q], b2 = w[q];
      // write to a shared copy: p becomes dirty-shared, q stays shared
      if ((a == c.shared || a == c.dirty_shared) && b == c.dirty_shared &&
          (a2 == c.shared || a2 == c.dirty_shared) && b2 == c.shared &&
          rest(p, q, demote_dirty))
        return true;
      // write miss with another valid copy around
      if (a == c.inv && b == c.dirty_shared && a2 != c.inv && b2 == c.shared &&
          rest(p, q, share_all))
        return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("catalog lists the expected models") {
  auto names = catalog_names();
  for (const char* expected :
       {"philosophers", "philosophers-lr", "philosophers-lr-tagged", "berkeley", "dragon",
        "token-passing", "herman-linear", "herman-ring", "ladder1", "ladder2", "ladder3",
        "ladder-unbounded", "tm-demo"})
    CHECK(std::ranges::count(names, std::string(expected)) == 1);
  CHECK_THROWS_AS((void)catalog_model("no-such-model"), ValidationError);
}

TEST_CASE("philosophers alphabet and short slices") {
  Rts phil = catalog_model("philosophers");
  CHECK(phil.alphabet.size() == 4);
  CHECK(transitions_at_length(phil, 2, kBudget).empty());

  auto pairs = transitions_at_length(phil, 4, kBudget);
  auto has = [&](const char* src, const char* dst) {
    return std::ranges::count(pairs, std::pair(to_word(phil.alphabet, src),
                                               to_word(phil.alphabet, dst))) == 1;
  };
  CHECK(has("tftf", "ebtb"));
  CHECK(has("tftf", "tbeb"));
  CHECK(has("ebtb", "tftf"));
}

TEST_CASE("philosophers reachable slices follow the two word shapes") {
  Rts phil = catalog_model("philosophers");
  for (int len = 0; len <= 6; ++len) {
    std::set<Word> expected;
    for (const std::string& s : phil_reach_strings(len))
      expected.insert(to_word(phil.alphabet, s));
    CHECK(reach_at_length(phil, len, kBudget) == expected);
  }
}

TEST_CASE("philosophers deadlock set flags stuck words only") {
  Rts phil = catalog_model("philosophers");
  const Nfa* dead = phil.find_unsafe("deadlock");
  REQUIRE(dead != nullptr);
  CHECK(dead->accepts(to_word(phil.alphabet, "tbtb")));
  CHECK_FALSE(dead->accepts(to_word(phil.alphabet, "ebtb")));
  CHECK_FALSE(dead->accepts(to_word(phil.alphabet, "tf")));    // below the guard
  CHECK_FALSE(dead->accepts(to_word(phil.alphabet, "tbtbf")));  // odd length
  CHECK(dead->accepts(to_word(phil.alphabet, "ffff")));
}

TEST_CASE("philosophers transitions match brute-force membership") {
  Rts phil = catalog_model("philosophers");
  for (int len = 0; len <= 4; ++len)
    CHECK(transitions_at_length(phil, len, kBudget) == brute_transitions(phil, len));
}

TEST_CASE("one-fork-at-a-time variants move as described") {
  Rts lr = catalog_model("philosophers-lr");
  auto w = [&](const char* s) { return to_word(lr.alphabet, s); };
  CHECK(lr.step.accepts_pair(w("tftf"), w("hbtf")));  // seat 1 takes its first fork
  CHECK(lr.step.accepts_pair(w("tftf"), w("tbhf")));  // seat 3 takes its left fork
  CHECK(lr.step.accepts_pair(w("hbtf"), w("ebtb")));  // seat 1 takes the far fork
  CHECK(lr.step.accepts_pair(w("ebtb"), w("tftf")));  // seat 1 releases both
  CHECK(lr.step.accepts_pair(w("tbhf"), w("tbeb")));  // seat 3 takes its right fork
  CHECK(lr.step.accepts_pair(w("tbeb"), w("tftf")));  // seat 3 releases both
  CHECK_FALSE(lr.step.accepts_pair(w("tftf"), w("ebtb")));  // no two-fork grab
  CHECK_FALSE(lr.step.accepts_pair(w("tftf"), w("tfhb")));  // right fork is not first

  Rts tagged = catalog_model("philosophers-lr-tagged");
  auto v = [&](std::initializer_list<const char*> names) {
    return named_word(tagged.alphabet, names);
  };
  CHECK(tagged.step.accepts_pair(v({"t", "f", "t", "f"}), v({"h", "bl", "t", "f"})));
  CHECK(tagged.step.accepts_pair(v({"t", "f", "t", "f"}), v({"t", "br", "h", "f"})));
  CHECK(tagged.step.accepts_pair(v({"h", "bl", "t", "f"}), v({"e", "bl", "t", "br"})));
  CHECK(tagged.step.accepts_pair(v({"e", "bl", "t", "br"}), v({"t", "f", "t", "f"})));
  CHECK_FALSE(tagged.step.accepts_pair(v({"t", "f", "t", "f"}), v({"h", "br", "t", "f"})));
}

TEST_CASE("one-fork deadlock sets keep the parity guard") {
  for (const char* name : {"philosophers-lr", "philosophers-lr-tagged"}) {
    Rts model = catalog_model(name);
    const Nfa* dead = model.find_unsafe("deadlock");
    REQUIRE(dead != nullptr);
    // all seats hold their first fork: only stuck when the tags are ignored
    if (model.alphabet.size() == 5) {
      CHECK(dead->accepts(to_word(model.alphabet, "hbhbhb")));
      CHECK_FALSE(dead->accepts(to_word(model.alphabet, "tftf")));
    }
    CHECK_FALSE(dead->accepts({}));
  }
}

TEST_CASE("berkeley starts all-invalid and steps match the direct matcher") {
  Rts cache = catalog_model("berkeley");
  CHECK(cache.alphabet.size() == 4);
  auto starts = language_at_length(cache.initial, 3, kBudget);
  CHECK(starts == std::vector<Word>{to_word(cache.alphabet, "iii")});

  CacheLetters letters{*cache.alphabet.index("i"), *cache.alphabet.index("e"),
                       *cache.alphabet.index("s"), 0, 0, *cache.alphabet.index("u")};
  for (int len = 0; len <= 3; ++len)
    for (const Word& u : all_words_of_length(cache.alphabet, len))
      for (const Word& w : all_words_of_length(cache.alphabet, len))
        CHECK(cache.step.accepts_pair(u, w) == berkeley_fires(letters, u, w));
}

TEST_CASE("dragon distinguishes five states and steps match the direct matcher") {
  Rts cache = catalog_model("dragon");
  CHECK(cache.alphabet.size() == 5);
  CacheLetters letters{*cache.alphabet.index("i"),  *cache.alphabet.index("e"),
                       *cache.alphabet.index("s"),  *cache.alphabet.index("ê"),
                       *cache.alphabet.index("ŝ"), 0};
  for (int len = 0; len <= 3; ++len)
    for (const Word& u : all_words_of_length(cache.alphabet, len))
      for (const Word& w : all_words_of_length(cache.alphabet, len))
        CHECK(cache.step.accepts_pair(u, w) == dragon_fires(letters, u, w));
}

TEST_CASE("cache unsafe sets flag a second exclusive copy") {
  Rts cache = catalog_model("berkeley");
  const Nfa* two = cache.find_unsafe("two-exclusive");
  REQUIRE(two != nullptr);
  CHECK(two->accepts(to_word(cache.alphabet, "ee")));
  CHECK(two->accepts(to_word(cache.alphabet, "esie")));
  CHECK_FALSE(two->accepts(to_word(cache.alphabet, "esi")));

  Rts dragon_model = catalog_model("dragon");
  const Nfa* dirty = dragon_model.find_unsafe("two-exclusive");
  REQUIRE(dirty != nullptr);
  CHECK(dirty->accepts(named_word(dragon_model.alphabet, {"ê", "ê"})));
  CHECK_FALSE(dirty->accepts(named_word(dragon_model.alphabet, {"ê", "e"})));
}

TEST_CASE("token ring keeps a single marked cell moving right") {
  Rts ring = catalog_model("token-passing");
  auto w = [&](const char* s) { return to_word(ring.alphabet, s); };
  CHECK(language_at_length(ring.initial, 3, kBudget) == std::vector<Word>{w("tnn")});
  CHECK(ring.step.accepts_pair(w("tn"), w("nt")));
  CHECK(ring.step.accepts_pair(w("ntn"), w("nnt")));
  CHECK_FALSE(ring.step.accepts_pair(w("nt"), w("tn")));   // no wrap-around
  CHECK_FALSE(ring.step.accepts_pair(w("tt"), w("nt")));   // no second token
  for (int len = 0; len <= 5; ++len) {
    std::set<Word> expected;
    for (int p = 0; p < len; ++p) {
      Word u(static_cast<std::size_t>(len), *ring.alphabet.index("n"));
      u[static_cast<std::size_t>(p)] = *ring.alphabet.index("t");
      expected.insert(u);
    }
    CHECK(reach_at_length(ring, len, kBudget) == expected);
  }

  const Nfa* multi = ring.find_unsafe("at-most-one-token");
  REQUIRE(multi != nullptr);
  CHECK(multi->accepts(w("tt")));
  CHECK(multi->accepts(w("tnt")));
  CHECK_FALSE(multi->accepts(w("tn")));
  CHECK_FALSE(multi->accepts(w("nn")));
}

TEST_CASE("token merge variants pass right and merge colliding tokens") {
  Rts line = catalog_model("herman-linear");
  auto w = [&](const char* s) { return to_word(line.alphabet, s); };
  CHECK(line.step.accepts_pair(w("tn"), w("nt")));
  CHECK(line.step.accepts_pair(w("tt"), w("nt")));
  CHECK_FALSE(line.step.accepts_pair(w("nt"), w("tn")));

  Rts ring = catalog_model("herman-ring");
  CHECK(ring.step.accepts_pair(w("nt"), w("tn")));
  CHECK(ring.step.accepts_pair(w("tt"), w("tn")));
  CHECK(ring.step.accepts_pair(w("tnt"), w("tnn")));  // wrap onto the first token
  CHECK(ring.step.accepts_pair(w("tnt"), w("ntt")));
  CHECK_FALSE(ring.step.accepts_pair(w("tnt"), w("ttn")));

  const Nfa* no_token = line.find_unsafe("at-least-one-token");
  REQUIRE(no_token != nullptr);
  CHECK(no_token->accepts(w("nnn")));
  CHECK_FALSE(no_token->accepts(w("nt")));

  const Nfa* stuck_line = line.find_unsafe("deadlock");
  REQUIRE(stuck_line != nullptr);
  CHECK(stuck_line->accepts(w("nt")));  // sole token parked at the end
  CHECK(stuck_line->accepts(w("nn")));
  CHECK_FALSE(stuck_line->accepts(w("tn")));

  const Nfa* stuck_ring = ring.find_unsafe("deadlock");
  REQUIRE(stuck_ring != nullptr);
  CHECK(stuck_ring->accepts(w("nn")));
  CHECK_FALSE(stuck_ring->accepts(w("nt")));  // wraps around instead
  CHECK_FALSE(stuck_ring->accepts(w("n")));   // single cell is degenerate
}

TEST_CASE("small-alphabet transitions match brute-force membership") {
  for (const char* name : {"token-passing", "herman-linear", "herman-ring", "berkeley"}) {
    Rts model = catalog_model(name);
    for (int len = 0; len <= 3; ++len)
      CHECK(transitions_at_length(model, len, kBudget) == brute_transitions(model, len));
  }
}
