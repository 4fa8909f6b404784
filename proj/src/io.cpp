#include "rmc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rmc/errors.hpp"

namespace rmc {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
    } else {
      Token t;
      t.line = line;
      t.col = col;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '#') {
        t.text += text[i];
        ++i;
        ++col;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  [[nodiscard]] bool done() const { return pos_ >= tokens_.size(); }
  [[nodiscard]] const Token& peek() const {
    if (done()) throw ParseError("unexpected end of input", last_line(), 0);
    return tokens_[pos_];
  }
  const Token& take() {
    const Token& t = peek();
    ++pos_;
    return t;
  }
  const Token& expect(std::string_view word) {
    const Token& t = take();
    if (t.text != word)
      throw ParseError("expected '" + std::string(word) + "', got '" + t.text + "'", t.line,
                       t.col);
    return t;
  }
  int take_int() {
    const Token& t = take();
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
      throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.col);
    return value;
  }
  // Integers up to the next keyword-looking token (same statement).
  std::vector<int> take_int_list() {
    std::vector<int> out;
    while (!done()) {
      const Token& t = peek();
      bool numeric = !t.text.empty() &&
                     (std::isdigit(static_cast<unsigned char>(t.text[0])) || t.text[0] == '-');
      if (!numeric) break;
      out.push_back(take_int());
    }
    return out;
  }

 private:
  [[nodiscard]] int last_line() const {
    return tokens_.empty() ? 1 : tokens_.back().line;
  }
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Body of an automaton block, between the name and `end`. The states line
// must come before any line that mentions a state.
Nfa parse_block_body(Cursor& cur, const Alphabet& alphabet, const std::string& block_name) {
  std::optional<int> state_count;
  std::vector<int> start, accept;
  struct RawArc {
    int from, to;
    Symbol symbol;
  };
  std::vector<RawArc> arcs;
  auto need_states = [&](const Token& at) -> int {
    if (!state_count)
      throw ParseError("'" + at.text + "' before 'states' in block '" + block_name + "'", at.line,
                       at.col);
    return *state_count;
  };
  auto check_state = [&](int s, const Token& at) {
    if (s < 0 || s >= need_states(at))
      throw ValidationError("state " + std::to_string(s) + " out of range in block '" +
                            block_name + "'");
  };
  for (;;) {
    const Token& t = cur.take();
    if (t.text == "end") break;
    if (t.text == "states") {
      if (state_count)
        throw ParseError("duplicate 'states' in block '" + block_name + "'", t.line, t.col);
      int n = cur.take_int();
      if (n < 0) throw ValidationError("negative state count in block '" + block_name + "'");
      state_count = n;
    } else if (t.text == "start" || t.text == "accept") {
      auto& dst = t.text == "start" ? start : accept;
      for (int s : cur.take_int_list()) {
        check_state(s, t);
        dst.push_back(s);
      }
    } else if (t.text == "trans") {
      int from = cur.take_int();
      const Token& sym = cur.take();
      int to = cur.take_int();
      check_state(from, t);
      check_state(to, t);
      auto s = alphabet.index(sym.text);
      if (!s)
        throw ValidationError("unknown symbol '" + sym.text + "' in block '" + block_name + "'");
      arcs.push_back({from, to, *s});
    } else {
      throw ParseError("unexpected '" + t.text + "' in block '" + block_name + "'", t.line,
                       t.col);
    }
  }
  if (!state_count)
    throw ValidationError("block '" + block_name + "' is missing a 'states' line");
  Nfa out(alphabet, *state_count);
  for (int s : start) out.add_initial(s);
  for (int s : accept) out.add_accepting(s);
  for (const RawArc& arc : arcs) out.add_arc(arc.from, arc.symbol, arc.to);
  out.normalize();
  return out;
}

std::string print_block(const Nfa& a, const std::string& kind, const std::string& name) {
  std::ostringstream out;
  out << kind << ' ' << name << '\n';
  out << "  states " << a.state_count() << '\n';
  if (!a.initial().empty()) {
    out << "  start";
    for (int s : a.initial()) out << ' ' << s;
    out << '\n';
  }
  if (!a.accepting().empty()) {
    out << "  accept";
    for (int s : a.accepting()) out << ' ' << s;
    out << '\n';
  }
  for (int s = 0; s < a.state_count(); ++s)
    for (const Arc& arc : a.arcs(s))
      out << "  trans " << s << ' ' << a.alphabet().name(arc.symbol) << ' ' << arc.target << '\n';
  out << "end\n";
  return out.str();
}

Alphabet parse_alphabet_line(Cursor& cur) {
  cur.expect("alphabet");
  std::vector<std::string> names;
  while (!cur.done()) {
    const Token& t = cur.peek();
    if (t.text == "nfa" || t.text == "transducer" || t.text == "bound") break;
    names.push_back(cur.take().text);
  }
  if (names.empty()) throw ValidationError("alphabet line lists no symbols");
  return Alphabet(names);
}

}  // namespace

std::string format_word(const Alphabet& alphabet, const Word& word) {
  bool glue = alphabet.kind() == Alphabet::Kind::named;
  if (glue)
    for (const std::string& name : alphabet.names()) {
      std::size_t glyphs = 0;
      for (char byte : name)
        if ((byte & 0xC0) != 0x80) ++glyphs;
      if (glyphs != 1) {
        glue = false;
        break;
      }
    }
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!glue && i > 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

std::string print_nfa(const Nfa& a, const std::string& name) {
  return print_block(a, "nfa", name);
}

std::string print_transducer(const Transducer& t, const std::string& name) {
  return print_block(t, "transducer", name);
}

std::string print_model(const Rts& model) {
  std::ostringstream out;
  out << "alphabet";
  for (const std::string& s : model.alphabet.names()) out << ' ' << s;
  out << "\n\n";
  out << print_nfa(model.initial, "init") << '\n';
  out << print_transducer(model.step, "step");
  for (const auto& [name, nfa] : model.unsafe) out << '\n' << print_nfa(nfa, "unsafe." + name);
  return out.str();
}

std::string print_certificate(const Certificate& cert) {
  const Alphabet& power = cert.automaton.alphabet();
  std::ostringstream out;
  out << "alphabet";
  for (const std::string& s : power.base().names()) out << ' ' << s;
  out << '\n';
  out << "bound " << cert.bound << "\n\n";
  out << print_nfa(cert.automaton, "cert");
  return out.str();
}

Rts parse_model(std::string_view text) {
  Cursor cur(tokenize(text));
  Alphabet sigma = parse_alphabet_line(cur);
  Alphabet pairs = Alphabet::pair(sigma, sigma);

  Rts model;
  model.alphabet = sigma;
  bool have_init = false, have_step = false;
  while (!cur.done()) {
    const Token& kind = cur.take();
    if (kind.text == "nfa") {
      const Token& name = cur.take();
      if (name.text == "init") {
        if (have_init) throw ValidationError("duplicate block 'init'");
        model.initial = parse_block_body(cur, sigma, name.text);
        have_init = true;
      } else if (name.text.starts_with("unsafe.") && name.text.size() > 7) {
        std::string key = name.text.substr(7);
        if (model.find_unsafe(key)) throw ValidationError("duplicate block '" + name.text + "'");
        model.unsafe.emplace_back(key, parse_block_body(cur, sigma, name.text));
      } else {
        throw ValidationError("unexpected nfa block '" + name.text +
                              "' (expected 'init' or 'unsafe.NAME')");
      }
    } else if (kind.text == "transducer") {
      const Token& name = cur.take();
      if (name.text != "step")
        throw ValidationError("unexpected transducer block '" + name.text + "' (expected 'step')");
      if (have_step) throw ValidationError("duplicate block 'step'");
      Nfa body = parse_block_body(cur, pairs, name.text);
      Transducer step(pairs, body.state_count());
      for (int s : body.initial()) step.add_initial(s);
      for (int s : body.accepting()) step.add_accepting(s);
      for (int s = 0; s < body.state_count(); ++s)
        for (const Arc& arc : body.arcs(s)) step.add_arc(s, arc.symbol, arc.target);
      step.normalize();
      model.step = std::move(step);
      have_step = true;
    } else {
      throw ParseError("expected 'nfa' or 'transducer', got '" + kind.text + "'", kind.line,
                       kind.col);
    }
  }
  if (!have_init) throw ValidationError("model is missing the 'init' block");
  if (!have_step) throw ValidationError("model is missing the 'step' block");
  return model;
}

Certificate parse_certificate(std::string_view text) {
  Cursor cur(tokenize(text));
  Alphabet sigma = parse_alphabet_line(cur);
  cur.expect("bound");
  int bound = cur.take_int();
  if (bound < 1) throw ValidationError("certificate bound must be positive");
  Alphabet gamma = Alphabet::power(sigma, bound);
  cur.expect("nfa");
  const Token& name = cur.take();
  Certificate cert;
  cert.bound = bound;
  cert.automaton = parse_block_body(cur, gamma, name.text);
  if (!cur.done()) {
    const Token& t = cur.peek();
    throw ParseError("unexpected '" + t.text + "' after certificate block", t.line, t.col);
  }
  return cert;
}

Nfa parse_nfa(std::string_view text, const Alphabet& alphabet, std::string* name_out) {
  Cursor cur(tokenize(text));
  cur.expect("nfa");
  const Token& name = cur.take();
  if (name_out) *name_out = name.text;
  Nfa out = parse_block_body(cur, alphabet, name.text);
  if (!cur.done()) {
    const Token& t = cur.peek();
    throw ParseError("unexpected '" + t.text + "' after nfa block", t.line, t.col);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open file '" + path + "' for writing");
  out << content;
}

}  // namespace rmc
