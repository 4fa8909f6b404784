#include "rmc/catalog.hpp"

#include <initializer_list>
#include <string_view>
#include <utility>

#include "rmc/errors.hpp"
#include "rmc/generators.hpp"
#include "rmc/ops.hpp"

namespace rmc {
namespace {

constexpr std::size_t kBuildBudget = 200'000;

using NamePair = std::pair<std::string_view, std::string_view>;
using PairSet = std::vector<NamePair>;

Symbol sym(const Alphabet& alphabet, std::string_view name) {
  auto s = alphabet.index(name);
  if (!s) throw ValidationError("catalog: unknown symbol name");
  return *s;
}

PairSet copies(std::initializer_list<std::string_view> names) {
  PairSet out;
  for (auto n : names) out.emplace_back(n, n);
  return out;
}

// Appends one star/pivot/…/star branch: state k loops on stars[k] and steps
// to k+1 on pivots[k]; the first state is initial, the last accepting.
void add_branch(Transducer& step, const std::vector<PairSet>& stars,
                const std::vector<PairSet>& pivots) {
  const Alphabet left = step.left_alphabet();
  const Alphabet right = step.right_alphabet();
  const int first = step.state_count();
  for (std::size_t k = 0; k < stars.size(); ++k) step.add_state();
  step.add_initial(first);
  step.add_accepting(first + static_cast<int>(pivots.size()));
  for (std::size_t k = 0; k < stars.size(); ++k)
    for (const auto& [l, r] : stars[k])
      step.add_pair_arc(first + static_cast<int>(k), sym(left, l), sym(right, r),
                        first + static_cast<int>(k));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (const auto& [l, r] : pivots[k])
      step.add_pair_arc(first + static_cast<int>(k), sym(left, l), sym(right, r),
                        first + static_cast<int>(k) + 1);
}

Transducer make_step(const Alphabet& alphabet,
                     const std::vector<std::pair<std::vector<PairSet>, std::vector<PairSet>>>&
                         branches) {
  Transducer step(Alphabet::pair(alphabet, alphabet), 0);
  for (const auto& [stars, pivots] : branches) add_branch(step, stars, pivots);
  step.normalize();
  return step;
}

Nfa loop_language(const Alphabet& alphabet, const std::vector<std::string_view>& cycle) {
  // Words formed by whole repetitions of `cycle`.
  const int n = static_cast<int>(cycle.size());
  Nfa out(alphabet, n);
  out.add_initial(0);
  out.add_accepting(0);
  for (int i = 0; i < n; ++i) out.add_arc(i, sym(alphabet, cycle[static_cast<std::size_t>(i)]), (i + 1) % n);
  out.normalize();
  return out;
}

Nfa prefix_language(const Alphabet& alphabet, std::string_view head, std::string_view rest) {
  // head then any number of rest letters.
  Nfa out(alphabet, 2);
  out.add_initial(0);
  out.add_accepting(1);
  out.add_arc(0, sym(alphabet, head), 1);
  out.add_arc(1, sym(alphabet, rest), 1);
  out.normalize();
  return out;
}

Nfa single_letter_star(const Alphabet& alphabet, std::string_view letter) {
  Nfa out(alphabet, 1);
  out.add_initial(0);
  out.add_accepting(0);
  out.add_arc(0, sym(alphabet, letter), 0);
  out.normalize();
  return out;
}

Nfa contains_each(const Alphabet& alphabet, std::initializer_list<std::string_view> letters) {
  Word w;
  for (auto l : letters) w.push_back(sym(alphabet, l));
  return subsequence_nfa(alphabet, w);
}

// Words without a successor under the step relation.
Nfa stuck_words(const Rts& model) {
  return to_nfa(complement(determinize(project(model.step, 1), kBuildBudget)));
}

// Parity-structured models only deadlock meaningfully at even lengths with
// at least two seats; shorter tables have the unusable single fork.
Nfa guarded_deadlock(const Rts& model) {
  return intersect(intersect(stuck_words(model), length_multiple_of(model.alphabet, 2)),
                   length_at_least(model.alphabet, 4));
}

Rts philosophers() {
  Alphabet sigma({"t", "e", "f", "b"});
  const auto all = copies({"t", "e", "f", "b"});
  Rts model{
      sigma,
      loop_language(sigma, {"t", "f"}),
      make_step(sigma,
                {
                    // first seat takes both forks, second fork at the far end
                    {{{}, {}, all, {}}, {{{"t", "e"}}, {{"f", "b"}}, {{"f", "b"}}}},
                    {{{}, {}, all, {}}, {{{"e", "t"}}, {{"b", "f"}}, {{"b", "f"}}}},
                    // inner seats take fork, eat, fork in one move
                    {{all, {}, {}, all}, {{{"f", "b"}}, {{"t", "e"}}, {{"f", "b"}}}},
                    {{all, {}, {}, all}, {{{"b", "f"}}, {{"e", "t"}}, {{"b", "f"}}}},
                }),
      {}};
  model.unsafe.emplace_back("deadlock", guarded_deadlock(model));
  return model;
}

Rts philosophers_lr() {
  Alphabet sigma({"f", "b", "t", "h", "e"});
  const auto all = copies({"f", "b", "t", "h", "e"});
  Rts model{
      sigma,
      loop_language(sigma, {"t", "f"}),
      make_step(sigma,
                {
                    // first seat: second fork sits at the far end of the word
                    {{{}, {}, all}, {{{"t", "h"}}, {{"f", "b"}}}},
                    {{{}, all, {}}, {{{"h", "e"}}, {{"f", "b"}}}},
                    {{{}, {}, all, {}}, {{{"e", "t"}}, {{"b", "f"}}, {{"b", "f"}}}},
                    // inner seats: left fork first, then the right fork
                    {{all, {}, all}, {{{"f", "b"}}, {{"t", "h"}}}},
                    {{all, {}, all}, {{{"h", "e"}}, {{"f", "b"}}}},
                    {{all, {}, {}, all}, {{{"b", "f"}}, {{"e", "t"}}, {{"b", "f"}}}},
                }),
      {}};
  model.unsafe.emplace_back("deadlock", guarded_deadlock(model));
  return model;
}

Rts philosophers_lr_tagged() {
  Alphabet sigma({"f", "bl", "br", "t", "h", "e"});
  const auto all = copies({"f", "bl", "br", "t", "h", "e"});
  Rts model{
      sigma,
      loop_language(sigma, {"t", "f"}),
      make_step(sigma,
                {
                    // forks record which side holds them: bl = left neighbour
                    {{{}, {}, all}, {{{"t", "h"}}, {{"f", "bl"}}}},
                    {{{}, all, {}}, {{{"h", "e"}}, {{"f", "br"}}}},
                    {{{}, {}, all, {}}, {{{"e", "t"}}, {{"bl", "f"}}, {{"br", "f"}}}},
                    {{all, {}, all}, {{{"f", "br"}}, {{"t", "h"}}}},
                    {{all, {}, all}, {{{"h", "e"}}, {{"f", "bl"}}}},
                    {{all, {}, {}, all}, {{{"br", "f"}}, {{"e", "t"}}, {{"bl", "f"}}}},
                }),
      {}};
  model.unsafe.emplace_back("deadlock", guarded_deadlock(model));
  return model;
}

Rts berkeley() {
  Alphabet sigma({"i", "u", "e", "s"});
  const auto all = copies({"i", "u", "e", "s"});
  const PairSet observe_read = {{"i", "i"}, {"u", "u"}, {"e", "s"}, {"s", "s"}};
  const PairSet invalidate = {{"i", "i"}, {"u", "i"}, {"e", "i"}, {"s", "i"}};
  const PairSet keep_exclusive = {{"i", "i"}, {"u", "i"}, {"e", "e"}, {"s", "i"}};
  Rts model{
      sigma,
      single_letter_star(sigma, "i"),
      make_step(sigma,
                {
                    // read hit: nothing changes, some cell is valid
                    {{all, all}, {{{"u", "u"}, {"e", "e"}, {"s", "s"}}}},
                    // read miss: fetch unowned, exclusives degrade to shared
                    {{observe_read, observe_read}, {{{"i", "u"}}}},
                    // write miss: claim exclusive, invalidate the rest
                    {{invalidate, invalidate}, {{{"i", "e"}}}},
                    // write hit on a non-exclusive copy
                    {{keep_exclusive, keep_exclusive}, {{{"u", "e"}, {"s", "e"}}}},
                    // silent drop
                    {{all, all}, {{{"u", "i"}, {"e", "i"}, {"s", "i"}}}},
                }),
      {}};
  model.unsafe.emplace_back("two-exclusive", contains_each(sigma, {"e", "e"}));
  return model;
}

Rts dragon() {
  Alphabet sigma({"i", "e", "s", "ê", "ŝ"});
  const auto all = copies({"i", "e", "s", "ê", "ŝ"});
  const PairSet share_read = {{"i", "i"}, {"e", "s"}, {"s", "s"}, {"ê", "ŝ"}, {"ŝ", "ŝ"}};
  const PairSet no_shared = copies({"i", "e", "ê"});
  const PairSet demote = {{"i", "i"}, {"e", "e"}, {"ê", "ê"}, {"s", "s"}, {"ŝ", "s"}};
  const PairSet share_write = {{"i", "i"}, {"e", "s"}, {"ê", "s"}, {"s", "s"}, {"ŝ", "s"}};
  const PairSet other_shared = {{"s", "s"}, {"ŝ", "s"}};
  const PairSet become_dirty = {{"s", "ŝ"}, {"ŝ", "ŝ"}};
  const PairSet other_valid = {{"ê", "s"}, {"s", "s"}, {"ŝ", "s"}, {"e", "s"}};
  Rts model{
      sigma,
      single_letter_star(sigma, "i"),
      make_step(sigma,
                {
                    // read hit
                    {{all, all}, {{{"e", "e"}, {"s", "s"}, {"ê", "ê"}, {"ŝ", "ŝ"}}}},
                    // read miss while everything is invalid
                    {{copies({"i"}), copies({"i"})}, {{{"i", "e"}}}},
                    // read miss with valid copies around
                    {{share_read, share_read}, {{{"i", "s"}}}},
                    // write hit on a dirty exclusive / clean exclusive copy
                    {{all, all}, {{{"ê", "ê"}}}},
                    {{all, all}, {{{"e", "ê"}}}},
                    // write hit on the only shared copy
                    {{no_shared, no_shared}, {{{"ŝ", "ê"}}}},
                    {{no_shared, no_shared}, {{{"s", "ê"}}}},
                    // write hit with other shared copies, either order
                    {{demote, demote, demote}, {other_shared, become_dirty}},
                    {{demote, demote, demote}, {become_dirty, other_shared}},
                    // write miss while everything is invalid
                    {{copies({"i"}), copies({"i"})}, {{{"i", "ê"}}}},
                    // write miss with valid copies around, either order
                    {{share_write, share_write, share_write}, {{{"i", "ŝ"}}, other_valid}},
                    {{share_write, share_write, share_write}, {other_valid, {{"i", "ŝ"}}}},
                    // silent drop
                    {{all, all}, {{{"e", "i"}, {"ê", "i"}, {"ŝ", "i"}, {"s", "i"}}}},
                }),
      {}};
  model.unsafe.emplace_back("two-exclusive", contains_each(sigma, {"ê", "ê"}));
  return model;
}

Rts token_passing() {
  Alphabet sigma({"t", "n"});
  Rts model{sigma,
            prefix_language(sigma, "t", "n"),
            make_step(sigma,
                      {
                          // the sole token moves one cell to the right
                          {{copies({"n"}), {}, copies({"n"})}, {{{"t", "n"}}, {{"n", "t"}}}},
                      }),
            {}};
  model.unsafe.emplace_back("at-most-one-token", contains_each(sigma, {"t", "t"}));
  return model;
}

Rts herman(bool ring) {
  Alphabet sigma({"t", "n"});
  const auto all = copies({"t", "n"});
  std::vector<std::pair<std::vector<PairSet>, std::vector<PairSet>>> branches = {
      // pass right; landing on a token merges the two
      {{all, {}, all}, {{{"t", "n"}}, {{"n", "t"}, {"t", "t"}}}},
  };
  if (ring)
    branches.push_back({{{}, all, {}}, {{{"n", "t"}, {"t", "t"}}, {{"t", "n"}}}});
  Rts model{sigma, contains_each(sigma, {"t"}), make_step(sigma, branches), {}};
  model.unsafe.emplace_back("at-least-one-token", single_letter_star(sigma, "n"));
  if (ring)
    model.unsafe.emplace_back(
        "deadlock", intersect(stuck_words(model), length_at_least(model.alphabet, 2)));
  else
    model.unsafe.emplace_back("deadlock", stuck_words(model));
  return model;
}

TmSpec demo_machine() {
  TmSpec tm;
  tm.tape_cells = 2;
  tm.tape_symbols = {"B", "X"};
  tm.state_names = {"q0", "f"};
  tm.halting = {1};
  tm.rules[{0, 0}] = {1, 1, +1};
  tm.rules[{0, 1}] = {1, 1, +1};
  return tm;
}

Symbol clause_letter(const Alphabet& gamma, const Alphabet& sigma,
                     const std::vector<std::vector<std::string_view>>& rows) {
  std::vector<std::uint32_t> masks;
  masks.reserve(rows.size());
  for (const auto& row : rows) {
    std::uint32_t mask = 0;
    for (auto name : row) mask |= 1u << sym(sigma, name);
    masks.push_back(mask);
  }
  return gamma.power_symbol(masks);
}

// Formulas (weak at p or i at q) and (i at p or weak at q) for every cell
// pair p < q, where `weak` lists the letters compatible with an owned copy
// elsewhere. An owned copy at p forces i at q through the first row of one
// instance and weak at p through the second, so two owned copies clash.
Certificate crossed_pair_certificate(const Alphabet& sigma,
                                     const std::vector<std::string_view>& weak) {
  Alphabet gamma = Alphabet::power(sigma, 2);
  Nfa a(gamma, 3);
  Symbol quiet = clause_letter(gamma, sigma, {{}, {}});
  Symbol left = clause_letter(gamma, sigma, {weak, {"i"}});
  Symbol right = clause_letter(gamma, sigma, {{"i"}, weak});
  a.add_initial(0);
  a.add_accepting(2);
  a.add_arc(0, quiet, 0);
  a.add_arc(0, left, 1);
  a.add_arc(1, quiet, 1);
  a.add_arc(1, right, 2);
  a.add_arc(2, quiet, 2);
  a.normalize();
  return {2, std::move(a)};
}

}  // namespace

Certificate berkeley_certificate() {
  return crossed_pair_certificate(Alphabet({"i", "u", "e", "s"}), {"i", "s", "u"});
}

Certificate dragon_certificate() {
  return crossed_pair_certificate(Alphabet({"i", "e", "s", "ê", "ŝ"}), {"ŝ", "i", "s"});
}

std::map<std::string, Rts> catalog() {
  std::map<std::string, Rts> out;
  out.emplace("philosophers", philosophers());
  out.emplace("philosophers-lr", philosophers_lr());
  out.emplace("philosophers-lr-tagged", philosophers_lr_tagged());
  out.emplace("berkeley", berkeley());
  out.emplace("dragon", dragon());
  out.emplace("token-passing", token_passing());
  out.emplace("herman-linear", herman(false));
  out.emplace("herman-ring", herman(true));
  out.emplace("ladder1", generate_ladder(1));
  out.emplace("ladder2", generate_ladder(2));
  out.emplace("ladder3", generate_ladder(3));
  out.emplace("ladder-unbounded", generate_ladder_unbounded());
  out.emplace("tm-demo", generate_tm_rts(demo_machine(), 3));
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, model] : catalog()) out.push_back(name);
  return out;
}

Rts catalog_model(const std::string& name) {
  auto models = catalog();
  auto it = models.find(name);
  if (it == models.end()) throw ValidationError("unknown catalog model: " + name);
  return std::move(it->second);
}

}  // namespace rmc
