#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "idemsplit/endo.hpp"
#include "idemsplit/graph_pi1.hpp"
#include "idemsplit/plmap.hpp"
#include "idemsplit/word.hpp"

namespace idemsplit {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word grammar: whitespace-separated tokens `<family><digits>` or
// `<family><digits>^<signed-integer>`; the empty string is the identity;
// exponent 0 is an error. Example: "a0 a1^-1 a3^2". Errors carry the
// 1-based token position.
Word parse_word(std::string_view text, char family);
std::string render_word(const Word& w, char family);

// Endomorphism file: line `rank <r>`, then r lines `x<s> -> <word>` for
// s = 0..r-1 in order, then optionally `x0 = <word>` naming the
// conjugating element. Blank lines are ignored.
struct EndoSpec {
  FreeEndo endo;
  std::optional<Word> x0;
};
EndoSpec parse_endo_spec(std::string_view text);
std::string render_endo(const FreeEndo& f);

// Graph file: line `vertices <n>`; one line `edge <id> <tail> <head>` per
// edge; optional line `base <id> <id> ...` (possibly with no ids); optional
// line `basevertex <v>` for the single-vertex base case. Blank lines are
// ignored.
GraphComplex parse_graph(std::string_view text);

// Edge paths: whitespace-separated tokens `e<id>` or `e<id>^-1`; the
// empty string is the constant path. Ids must exist in g.
EdgePath parse_edge_path(std::string_view text, const GraphComplex& g);
std::string render_edge_path(const EdgePath& p);

// One breakpoint per line, `<num>/2^<exp> -> <num>/2^<exp>`.
std::string render_plmap(const PLMap& m);

}  // namespace idemsplit
