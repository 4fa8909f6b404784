#include "rmc/alphabet.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "rmc/errors.hpp"

namespace rmc {

struct Alphabet::Node {
  Kind kind = Kind::named;
  std::vector<std::string> names;      // named
  std::map<std::string, Symbol, std::less<>> index;  // named
  std::shared_ptr<const Node> a, b;    // pair: left/right; power: base in a
  int bound = 0;                       // power
  std::int64_t size = 0;
};

namespace {

bool name_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '{' || c == '}' || c == '|' || c == '/' || c == ',' || c == '#') return false;
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet() : Alphabet(std::vector<std::string>{}) {}

Alphabet::Alphabet(std::vector<std::string> names) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::named;
  node->size = static_cast<std::int64_t>(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!name_ok(names[i])) throw ValidationError("bad symbol name '" + names[i] + "'");
    if (!node->index.emplace(names[i], static_cast<Symbol>(i)).second)
      throw ValidationError("duplicate symbol name '" + names[i] + "'");
  }
  node->names = std::move(names);
  node_ = std::move(node);
}

Alphabet Alphabet::pair(const Alphabet& left, const Alphabet& right) {
  if (left.kind() == Kind::pair || right.kind() == Kind::pair)
    throw ValidationError("pair alphabet components must be named or power alphabets");
  auto node = std::make_shared<Node>();
  node->kind = Kind::pair;
  node->a = left.node_;
  node->b = right.node_;
  node->size = left.size() * right.size();
  return Alphabet(std::move(node));
}

Alphabet Alphabet::power(const Alphabet& base, int bound) {
  if (base.kind() != Kind::named) throw ValidationError("power alphabet base must be named");
  if (bound < 1) throw ValidationError("power alphabet bound must be positive");
  const std::int64_t bits = static_cast<std::int64_t>(bound) * base.size();
  if (base.size() > 31 || bits > 62)
    throw ValidationError("power alphabet too large (bound * base size must stay below 63 bits)");
  auto node = std::make_shared<Node>();
  node->kind = Kind::power;
  node->a = base.node_;
  node->bound = bound;
  node->size = std::int64_t{1} << bits;
  return Alphabet(std::move(node));
}

Alphabet::Kind Alphabet::kind() const noexcept { return node_->kind; }

std::int64_t Alphabet::size() const noexcept { return node_->size; }

Alphabet Alphabet::left() const {
  assert(kind() == Kind::pair);
  return Alphabet(node_->a);
}

Alphabet Alphabet::right() const {
  assert(kind() == Kind::pair);
  return Alphabet(node_->b);
}

Alphabet Alphabet::base() const {
  assert(kind() == Kind::power);
  return Alphabet(node_->a);
}

int Alphabet::bound() const {
  assert(kind() == Kind::power);
  return node_->bound;
}

Symbol Alphabet::pair_symbol(Symbol l, Symbol r) const {
  assert(kind() == Kind::pair);
  assert(l >= 0 && l < node_->a->size && r >= 0 && r < node_->b->size);
  return l * node_->b->size + r;
}

std::pair<Symbol, Symbol> Alphabet::split(Symbol symbol) const {
  assert(kind() == Kind::pair);
  assert(symbol >= 0 && symbol < size());
  return {symbol / node_->b->size, symbol % node_->b->size};
}

std::uint32_t Alphabet::row_mask(Symbol symbol, int row) const {
  assert(kind() == Kind::power);
  assert(row >= 0 && row < node_->bound);
  const int width = static_cast<int>(node_->a->size);
  return static_cast<std::uint32_t>((symbol >> (row * width)) & ((std::int64_t{1} << width) - 1));
}

Symbol Alphabet::power_symbol(const std::vector<std::uint32_t>& rows) const {
  assert(kind() == Kind::power);
  assert(static_cast<int>(rows.size()) == node_->bound);
  const int width = static_cast<int>(node_->a->size);
  Symbol s = 0;
  for (int i = node_->bound - 1; i >= 0; --i) {
    assert(rows[i] < (std::uint32_t{1} << width));
    s = (s << width) | rows[i];
  }
  return s;
}

std::string Alphabet::name(Symbol symbol) const {
  assert(symbol >= 0 && symbol < size());
  switch (node_->kind) {
    case Kind::named:
      return node_->names[static_cast<std::size_t>(symbol)];
    case Kind::pair: {
      auto [l, r] = split(symbol);
      return left().name(l) + "/" + right().name(r);
    }
    case Kind::power: {
      std::string out;
      for (int row = 0; row < node_->bound; ++row) {
        if (row > 0) out += '|';
        out += '{';
        std::uint32_t mask = row_mask(symbol, row);
        bool first = true;
        for (Symbol j = 0; j < node_->a->size; ++j) {
          if (mask & (std::uint32_t{1} << j)) {
            if (!first) out += ',';
            out += node_->a->names[static_cast<std::size_t>(j)];
            first = false;
          }
        }
        out += '}';
      }
      return out;
    }
  }
  return {};
}

std::optional<Symbol> Alphabet::index(std::string_view text) const {
  switch (node_->kind) {
    case Kind::named: {
      auto it = node_->index.find(text);
      if (it == node_->index.end()) return std::nullopt;
      return it->second;
    }
    case Kind::pair: {
      auto slash = text.find('/');
      if (slash == std::string_view::npos) return std::nullopt;
      auto l = left().index(text.substr(0, slash));
      auto r = right().index(text.substr(slash + 1));
      if (!l || !r) return std::nullopt;
      return pair_symbol(*l, *r);
    }
    case Kind::power: {
      std::vector<std::uint32_t> rows;
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (text[pos] != '{') return std::nullopt;
        auto close = text.find('}', pos);
        if (close == std::string_view::npos) return std::nullopt;
        std::string_view body = text.substr(pos + 1, close - pos - 1);
        std::uint32_t mask = 0;
        while (!body.empty()) {
          auto comma = body.find(',');
          std::string_view item = body.substr(0, comma);
          auto j = base().index(item);
          if (!j) return std::nullopt;
          mask |= std::uint32_t{1} << *j;
          if (comma == std::string_view::npos) break;
          body = body.substr(comma + 1);
        }
        rows.push_back(mask);
        pos = close + 1;
        if (pos < text.size()) {
          if (text[pos] != '|') return std::nullopt;
          ++pos;
        }
      }
      if (static_cast<int>(rows.size()) != node_->bound) return std::nullopt;
      return power_symbol(rows);
    }
  }
  return std::nullopt;
}

std::vector<std::string> Alphabet::names() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Symbol s = 0; s < size(); ++s) out.push_back(name(s));
  return out;
}

bool Alphabet::operator==(const Alphabet& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind || node_->size != other.node_->size) return false;
  switch (node_->kind) {
    case Kind::named:
      return node_->names == other.node_->names;
    case Kind::pair:
      return left() == other.left() && right() == other.right();
    case Kind::power:
      return node_->bound == other.node_->bound && base() == other.base();
  }
  return false;
}

}  // namespace rmc
