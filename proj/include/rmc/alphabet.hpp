#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rmc {

using Symbol = std::int64_t;
using Word = std::vector<Symbol>;

// Immutable symbol universe. Three shapes:
//   named  - an explicit list of distinct symbol names
//   pair   - left x right, for transducer letters; printed "l/r"
//   power  - tuples of `bound` subsets of a named base, for clause letters;
//            printed "{a,b}|{}|{c}"
//
// Pair and power sizes grow fast, so symbols are indices into a computed
// space and names are materialized only on demand.
class Alphabet {
 public:
  enum class Kind { named, pair, power };

  Alphabet();  // empty named alphabet
  explicit Alphabet(std::vector<std::string> names);

  // Components of a pair must themselves be named or power alphabets;
  // that keeps the "l/r" notation unambiguous.
  static Alphabet pair(const Alphabet& left, const Alphabet& right);
  static Alphabet power(const Alphabet& base, int bound);

  [[nodiscard]] Kind kind() const noexcept;
  [[nodiscard]] std::int64_t size() const noexcept;
  [[nodiscard]] std::string name(Symbol symbol) const;
  [[nodiscard]] std::optional<Symbol> index(std::string_view name) const;

  // All names, for small alphabets only (used by printers and tests).
  [[nodiscard]] std::vector<std::string> names() const;

  bool operator==(const Alphabet& other) const;
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

  // pair accessors (copies are cheap: an Alphabet is a shared handle)
  [[nodiscard]] Alphabet left() const;
  [[nodiscard]] Alphabet right() const;
  [[nodiscard]] Symbol pair_symbol(Symbol l, Symbol r) const;
  [[nodiscard]] std::pair<Symbol, Symbol> split(Symbol symbol) const;

  // power accessors
  [[nodiscard]] Alphabet base() const;
  [[nodiscard]] int bound() const;
  // Row i of a power symbol as a bitmask over the base alphabet.
  [[nodiscard]] std::uint32_t row_mask(Symbol symbol, int row) const;
  [[nodiscard]] Symbol power_symbol(const std::vector<std::uint32_t>& rows) const;

 private:
  struct Node;
  explicit Alphabet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace rmc
