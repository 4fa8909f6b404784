#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "rmc/errors.hpp"
#include "rmc/nfa.hpp"
#include "rmc/ops.hpp"

using namespace rmc;
using rmc::testing::all_words_of_length;
using rmc::testing::Rng;
using rmc::testing::to_word;

namespace {

constexpr std::size_t kBudget = 100000;
constexpr int kCases = 1000;

Alphabet ab() { return Alphabet({"a", "b"}); }
Alphabet abc() { return Alphabet({"a", "b", "c"}); }

std::vector<Word> words_up_to(const Alphabet& alphabet, int max_len) {
  std::vector<Word> out;
  for (int len = 0; len <= max_len; ++len)
    for (Word& w : all_words_of_length(alphabet, len)) out.push_back(std::move(w));
  return out;
}

}  // namespace

TEST_CASE("determinize matches membership on the words-ending-in-a example") {
  Nfa a(ab(), 2);
  a.add_initial(0);
  a.add_accepting(1);
  a.add_arc(0, 0, 0);
  a.add_arc(0, 1, 0);
  a.add_arc(0, 0, 1);
  a.normalize();
  Dfa d = determinize(a, kBudget);
  for (const Word& w : words_up_to(ab(), 6)) {
    bool expect = !w.empty() && w.back() == 0;
    CHECK(a.accepts(w) == expect);
    CHECK(d.accepts(w) == expect);
  }
  CHECK(minimize(d).state_count() == 2);
}

TEST_CASE("determinize agrees with the NFA on random instances") {
  Rng rng(101);
  for (int i = 0; i < kCases; ++i) {
    Nfa a = rng.nfa(abc());
    Dfa d = determinize(a, kBudget);
    for (int j = 0; j < 8; ++j) {
      Word w = rng.word(abc());
      if (a.accepts(w) != d.accepts(w)) {
        CAPTURE(i);
        REQUIRE(a.accepts(w) == d.accepts(w));
      }
    }
  }
}

TEST_CASE("determinize respects its state budget") {
  // One unavoidable subset per word prefix: budget 1 must trip on any NFA
  // with a transition.
  Nfa a(ab(), 2);
  a.add_initial(0);
  a.add_accepting(1);
  a.add_arc(0, 0, 1);
  a.normalize();
  CHECK_THROWS_AS((void)determinize(a, 1), BudgetExceeded);
}

TEST_CASE("complement flips membership on random instances") {
  Rng rng(102);
  for (int i = 0; i < kCases; ++i) {
    Nfa a = rng.nfa(abc());
    Dfa d = complement(determinize(a, kBudget));
    for (int j = 0; j < 8; ++j) {
      Word w = rng.word(abc());
      if (a.accepts(w) == d.accepts(w)) {
        CAPTURE(i);
        REQUIRE(a.accepts(w) != d.accepts(w));
      }
    }
  }
}

TEST_CASE("intersect and union match boolean membership on random instances") {
  Rng rng(103);
  for (int i = 0; i < kCases; ++i) {
    Nfa a = rng.nfa(abc());
    Nfa b = rng.nfa(abc());
    Nfa both = intersect(a, b);
    Nfa either = union_nfa(a, b);
    for (int j = 0; j < 8; ++j) {
      Word w = rng.word(abc());
      if (both.accepts(w) != (a.accepts(w) && b.accepts(w))) {
        CAPTURE(i);
        REQUIRE(false);
      }
      if (either.accepts(w) != (a.accepts(w) || b.accepts(w))) {
        CAPTURE(i);
        REQUIRE(false);
      }
    }
  }
}

TEST_CASE("join composes relations over a shared middle alphabet") {
  Rng rng(104);
  Alphabet x = ab(), y = abc(), z = ab();
  Alphabet xy = Alphabet::pair(x, y), yz = Alphabet::pair(y, z);
  for (int i = 0; i < kCases; ++i) {
    Transducer t = rng.transducer(xy);
    Transducer u = rng.transducer(yz);
    Transducer tu = join(t, u);
    for (int j = 0; j < 4; ++j) {
      Word wx = rng.word(x, 3);
      Word wz = rng.word(z, 3);
      if (wx.size() != wz.size()) continue;
      bool expect = false;
      for (const Word& wy : all_words_of_length(y, static_cast<int>(wx.size())))
        if (t.accepts_pair(wx, wy) && u.accepts_pair(wy, wz)) {
          expect = true;
          break;
        }
      if (tu.accepts_pair(wx, wz) != expect) {
        CAPTURE(i);
        REQUIRE(false);
      }
    }
  }
}

TEST_CASE("post and pre images match quantified membership on random instances") {
  Rng rng(105);
  Alphabet x = ab(), y = abc();
  Alphabet xy = Alphabet::pair(x, y);
  for (int i = 0; i < kCases; ++i) {
    Nfa lang_x = rng.nfa(x);
    Nfa lang_y = rng.nfa(y);
    Transducer t = rng.transducer(xy);
    Nfa post = post_image(lang_x, t);
    Nfa pre = pre_image(t, lang_y);
    for (int j = 0; j < 4; ++j) {
      Word wy = rng.word(y, 3);
      bool expect_post = false;
      for (const Word& wx : all_words_of_length(x, static_cast<int>(wy.size())))
        if (lang_x.accepts(wx) && t.accepts_pair(wx, wy)) {
          expect_post = true;
          break;
        }
      if (post.accepts(wy) != expect_post) {
        CAPTURE(i);
        REQUIRE(false);
      }
      Word wx = rng.word(x, 3);
      bool expect_pre = false;
      for (const Word& wy2 : all_words_of_length(y, static_cast<int>(wx.size())))
        if (t.accepts_pair(wx, wy2) && lang_y.accepts(wy2)) {
          expect_pre = true;
          break;
        }
      if (pre.accepts(wx) != expect_pre) {
        CAPTURE(i);
        REQUIRE(false);
      }
    }
  }
}

TEST_CASE("project keeps one side of a relation") {
  Rng rng(106);
  Alphabet x = ab(), y = abc();
  Alphabet xy = Alphabet::pair(x, y);
  for (int i = 0; i < kCases; ++i) {
    Transducer t = rng.transducer(xy);
    Nfa p1 = project(t, 1);
    Nfa p2 = project(t, 2);
    for (int j = 0; j < 4; ++j) {
      Word wx = rng.word(x, 3);
      bool expect = false;
      for (const Word& wy : all_words_of_length(y, static_cast<int>(wx.size())))
        if (t.accepts_pair(wx, wy)) {
          expect = true;
          break;
        }
      if (p1.accepts(wx) != expect) {
        CAPTURE(i);
        REQUIRE(false);
      }
      Word wy = rng.word(y, 3);
      bool expect2 = false;
      for (const Word& wx2 : all_words_of_length(x, static_cast<int>(wy.size())))
        if (t.accepts_pair(wx2, wy)) {
          expect2 = true;
          break;
        }
      if (p2.accepts(wy) != expect2) {
        CAPTURE(i);
        REQUIRE(false);
      }
    }
  }
}

TEST_CASE("inverse swaps the sides of a relation") {
  Rng rng(107);
  Alphabet x = ab(), y = abc();
  Alphabet xy = Alphabet::pair(x, y);
  for (int i = 0; i < kCases; ++i) {
    Transducer t = rng.transducer(xy);
    Transducer ti = inverse(t);
    for (int j = 0; j < 4; ++j) {
      Word wx = rng.word(x, 3);
      Word wy = rng.word(y, 3);
      if (wx.size() != wy.size()) continue;
      if (ti.accepts_pair(wy, wx) != t.accepts_pair(wx, wy)) {
        CAPTURE(i);
        REQUIRE(false);
      }
    }
    Transducer tii = inverse(ti);
    CHECK(tii.alphabet() == t.alphabet());
  }
}

TEST_CASE("witness extraction returns the smallest shortest word") {
  Alphabet sigma({"t", "e", "f", "b"});
  Nfa beb = factor_nfa(sigma, to_word(sigma, "beb"));
  auto w = is_empty_with_witness(beb);
  REQUIRE(w.has_value());
  CHECK(*w == to_word(sigma, "beb"));

  Nfa none(sigma, 1);
  none.add_initial(0);
  none.normalize();
  CHECK(!is_empty_with_witness(none).has_value());
}

TEST_CASE("witness extraction properties on random instances") {
  Rng rng(108);
  for (int i = 0; i < kCases; ++i) {
    Nfa a = rng.nfa(ab());
    auto witness = is_empty_with_witness(a);
    // Shortest accepted word by brute force, lexicographically smallest.
    std::optional<Word> expect;
    for (int len = 0; len <= a.state_count() && !expect; ++len)
      for (const Word& w : all_words_of_length(ab(), len))
        if (a.accepts(w)) {
          expect = w;
          break;
        }
    if (witness != expect) {
      CAPTURE(i);
      REQUIRE(witness == expect);
    }
  }
}

TEST_CASE("minimize yields the canonical two-state acceptor for words ending in a") {
  Nfa a(ab(), 2);
  a.add_initial(0);
  a.add_accepting(1);
  a.add_arc(0, 0, 0);
  a.add_arc(0, 1, 0);
  a.add_arc(0, 0, 1);
  a.normalize();
  Dfa m = minimize(determinize(a, kBudget));
  CHECK(m.state_count() == 2);
  CHECK(m.accepts(to_word(ab(), "aba")));
  CHECK(!m.accepts(to_word(ab(), "ab")));
}

TEST_CASE("minimize preserves the language and is canonical") {
  Rng rng(109);
  for (int i = 0; i < kCases; ++i) {
    Nfa a = rng.nfa(abc());
    Dfa d = determinize(a, kBudget);
    Dfa m = minimize(d);
    for (int j = 0; j < 6; ++j) {
      Word w = rng.word(abc());
      if (m.accepts(w) != d.accepts(w)) {
        CAPTURE(i);
        REQUIRE(false);
      }
    }
    CHECK(m.state_count() <= d.state_count());
    // Same language through a different construction gives the same table.
    Dfa m2 = minimize(determinize(union_nfa(a, a), kBudget));
    REQUIRE(m.state_count() == m2.state_count());
    CHECK(m.initial_state() == m2.initial_state());
    for (int s = 0; s < m.state_count(); ++s) {
      REQUIRE(m.is_accepting(s) == m2.is_accepting(s));
      for (Symbol x = 0; x < m.alphabet().size(); ++x) REQUIRE(m.next(s, x) == m2.next(s, x));
    }
  }
}

TEST_CASE("equivalent accepts rebuilt copies and rejects perturbed languages") {
  Rng rng(110);
  int rejected = 0;
  for (int i = 0; i < kCases; ++i) {
    Nfa a = rng.nfa(abc());
    CHECK(equivalent(a, union_nfa(a, a), kBudget));
    CHECK(equivalent(a, to_nfa(determinize(a, kBudget)), kBudget));
    Nfa b = rng.nfa(abc());
    bool eq = equivalent(a, b, kBudget);
    if (!eq) ++rejected;
    // Equality must imply agreement everywhere we can afford to look.
    if (eq)
      for (const Word& w : words_up_to(abc(), 4))
        if (a.accepts(w) != b.accepts(w)) {
          CAPTURE(i);
          REQUIRE(false);
        }
  }
  CHECK(rejected > kCases / 2);  // random pairs are almost never equal
}

TEST_CASE("identity and diagonal relate words to themselves") {
  Alphabet sigma = ab();
  Transducer id = identity_transducer(sigma);
  CHECK(id.accepts_pair(to_word(sigma, "abba"), to_word(sigma, "abba")));
  CHECK(!id.accepts_pair(to_word(sigma, "ab"), to_word(sigma, "ba")));

  Nfa ends_a(sigma, 2);
  ends_a.add_initial(0);
  ends_a.add_accepting(1);
  ends_a.add_arc(0, 0, 0);
  ends_a.add_arc(0, 1, 0);
  ends_a.add_arc(0, 0, 1);
  ends_a.normalize();
  Transducer diag = diagonal(determinize(ends_a, kBudget));
  CHECK(diag.accepts_pair(to_word(sigma, "ba"), to_word(sigma, "ba")));
  CHECK(!diag.accepts_pair(to_word(sigma, "ab"), to_word(sigma, "ab")));
  CHECK(!diag.accepts_pair(to_word(sigma, "ba"), to_word(sigma, "ab")));
}

TEST_CASE("length and factor builders") {
  Alphabet sigma = ab();
  Nfa ge3 = length_at_least(sigma, 3);
  Nfa even = length_multiple_of(sigma, 2);
  for (const Word& w : words_up_to(sigma, 5)) {
    CHECK(ge3.accepts(w) == (w.size() >= 3));
    CHECK(even.accepts(w) == (w.size() % 2 == 0));
  }
  Nfa only = word_nfa(sigma, to_word(sigma, "ab"));
  CHECK(only.accepts(to_word(sigma, "ab")));
  CHECK(!only.accepts(to_word(sigma, "aa")));
  CHECK(!only.accepts(to_word(sigma, "a")));
}

TEST_CASE("alphabet mismatches are rejected") {
  Nfa a(ab(), 1);
  Nfa b(abc(), 1);
  CHECK_THROWS_AS((void)intersect(a, b), AlphabetMismatch);
  CHECK_THROWS_AS((void)union_nfa(a, b), AlphabetMismatch);
}
