#pragma once

#include <string>
#include <string_view>

#include "rmc/rts.hpp"

namespace rmc {

// Line-oriented UTF-8 text format. Tokens are whitespace-separated, `#`
// starts a comment. Automata are blocks
//
//   nfa NAME
//     states N
//     start I ...
//     accept J ...
//     trans SRC SYM DST
//   end
//
// with `transducer NAME` using SYM = "l/r" and clause-tuple automata using
// SYM = "{a,b}|{}|{c}". A model file is an `alphabet` line followed by one
// `nfa init`, one `transducer step`, and any number of `nfa unsafe.X`
// blocks; a certificate file is `alphabet`, `bound B`, then one nfa block.

// A word as text: letter names glued together when every name of the
// alphabet is a single character, otherwise joined with spaces.
[[nodiscard]] std::string format_word(const Alphabet& alphabet, const Word& word);

[[nodiscard]] std::string print_nfa(const Nfa& a, const std::string& name);
[[nodiscard]] std::string print_transducer(const Transducer& t, const std::string& name);
[[nodiscard]] std::string print_model(const Rts& model);
[[nodiscard]] std::string print_certificate(const Certificate& cert);

[[nodiscard]] Rts parse_model(std::string_view text);
[[nodiscard]] Certificate parse_certificate(std::string_view text);

// Single automaton over a known alphabet; `name_out` receives the block name.
[[nodiscard]] Nfa parse_nfa(std::string_view text, const Alphabet& alphabet,
                            std::string* name_out = nullptr);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace rmc
