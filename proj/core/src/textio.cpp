#include "idemsplit/textio.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace idemsplit {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

[[noreturn]] void fail_token(const std::string& what, std::size_t pos1) {
  throw ParseError(what + " at token " + std::to_string(pos1));
}

Letter parse_letter_token(const std::string& tok, char family, std::size_t pos1) {
  if (tok.empty() || tok[0] != family) {
    fail_token(std::string("expected letter family '") + family + "'", pos1);
  }
  std::size_t caret = tok.find('^');
  std::string_view index_part(tok.data() + 1,
                              (caret == std::string::npos ? tok.size() : caret) - 1);
  if (index_part.empty()) fail_token("missing generator index", pos1);
  std::uint32_t index = 0;
  auto [p1, ec1] = std::from_chars(index_part.data(), index_part.data() + index_part.size(), index);
  if (ec1 != std::errc{} || p1 != index_part.data() + index_part.size()) {
    fail_token("malformed generator index", pos1);
  }
  std::int64_t exponent = 1;
  if (caret != std::string::npos) {
    std::string_view exp_part(tok.data() + caret + 1, tok.size() - caret - 1);
    if (exp_part.empty()) fail_token("missing exponent", pos1);
    auto [p2, ec2] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
    if (ec2 != std::errc{} || p2 != exp_part.data() + exp_part.size()) {
      fail_token("malformed exponent", pos1);
    }
  }
  if (exponent == 0) fail_token("zero exponent", pos1);
  return Letter{index, exponent};
}

}  // namespace

Word parse_word(std::string_view text, char family) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  for (const std::string& tok : split_ws(text)) {
    ++pos;
    letters.push_back(parse_letter_token(tok, family, pos));
  }
  return Word::reduce(letters);
}

std::string render_word(const Word& w, char family) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += family;
    out += std::to_string(l.index);
    if (l.exponent != 1) {
      out += '^';
      out += std::to_string(l.exponent);
    }
  }
  return out;
}

namespace {

std::vector<std::string> nonblank_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!split_ws(line).empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

EndoSpec parse_endo_spec(std::string_view text) {
  std::vector<std::string> lines = nonblank_lines(text);
  if (lines.empty()) throw ParseError("endomorphism: empty input");
  auto head = split_ws(lines[0]);
  if (head.size() != 2 || head[0] != "rank") {
    throw ParseError("endomorphism: first line must be `rank <r>`");
  }
  std::uint32_t rank = 0;
  auto [p, ec] = std::from_chars(head[1].data(), head[1].data() + head[1].size(), rank);
  if (ec != std::errc{} || p != head[1].data() + head[1].size() || rank == 0) {
    throw ParseError("endomorphism: malformed rank");
  }
  if (lines.size() < 1u + rank) throw ParseError("endomorphism: missing image lines");
  std::vector<Word> images;
  for (std::uint32_t s = 0; s < rank; ++s) {
    const std::string& line = lines[1 + s];
    std::string expected = "x" + std::to_string(s);
    auto tokens = split_ws(line);
    if (tokens.size() < 2 || tokens[0] != expected || tokens[1] != "->") {
      throw ParseError("endomorphism: expected `" + expected + " -> <word>`");
    }
    std::string rest;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      if (!rest.empty()) rest += ' ';
      rest += tokens[t];
    }
    images.push_back(parse_word(rest, 'x'));
  }
  std::optional<Word> x0;
  std::size_t next = 1u + rank;
  if (next < lines.size()) {
    auto tokens = split_ws(lines[next]);
    if (tokens.size() < 2 || tokens[0] != "x0" || tokens[1] != "=") {
      throw ParseError("endomorphism: expected `x0 = <word>`");
    }
    std::string rest;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      if (!rest.empty()) rest += ' ';
      rest += tokens[t];
    }
    x0 = parse_word(rest, 'x');
    ++next;
  }
  if (next != lines.size()) throw ParseError("endomorphism: trailing content");
  FreeEndo endo(rank, std::move(images));
  return EndoSpec{std::move(endo), std::move(x0)};
}

std::string render_endo(const FreeEndo& f) {
  std::string out = "rank " + std::to_string(f.rank()) + "\n";
  for (std::uint32_t s = 0; s < f.rank(); ++s) {
    out += "x" + std::to_string(s) + " -> " + render_word(f.image(s), 'x') + "\n";
  }
  return out;
}

GraphComplex parse_graph(std::string_view text) {
  std::optional<std::uint32_t> vertices;
  std::vector<GraphEdge> edges;
  std::set<std::uint32_t> base_ids;
  bool saw_base = false;
  std::optional<std::uint32_t> base_vertex;

  auto parse_u32 = [](const std::string& tok, const char* what) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw ParseError(std::string("graph: malformed ") + what);
    }
    return v;
  };

  for (const std::string& line : nonblank_lines(text)) {
    auto tokens = split_ws(line);
    if (tokens[0] == "vertices") {
      if (tokens.size() != 2) throw ParseError("graph: `vertices <n>` expected");
      vertices = parse_u32(tokens[1], "vertex count");
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) throw ParseError("graph: `edge <id> <tail> <head>` expected");
      edges.push_back(GraphEdge{parse_u32(tokens[1], "edge id"),
                                parse_u32(tokens[2], "edge tail"),
                                parse_u32(tokens[3], "edge head")});
    } else if (tokens[0] == "base") {
      saw_base = true;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        base_ids.insert(parse_u32(tokens[t], "base edge id"));
      }
    } else if (tokens[0] == "basevertex") {
      if (tokens.size() != 2) throw ParseError("graph: `basevertex <v>` expected");
      base_vertex = parse_u32(tokens[1], "base vertex");
    } else {
      throw ParseError("graph: unknown directive `" + tokens[0] + "`");
    }
  }
  if (!vertices.has_value()) throw ParseError("graph: missing `vertices` line");
  if (!saw_base && !base_vertex.has_value()) {
    throw ParseError("graph: need a `base` or `basevertex` line");
  }
  return GraphComplex(*vertices, std::move(edges), std::move(base_ids), base_vertex);
}

EdgePath parse_edge_path(std::string_view text, const GraphComplex& g) {
  EdgePath path;
  std::size_t pos = 0;
  for (const std::string& tok : split_ws(text)) {
    ++pos;
    Letter l = parse_letter_token(tok, 'e', pos);
    if (l.exponent != 1 && l.exponent != -1) {
      fail_token("edge exponent must be 1 or -1", pos);
    }
    bool known = false;
    for (const GraphEdge& e : g.edges()) known = known || e.id == l.index;
    if (!known) fail_token("unknown edge id", pos);
    path.push_back(SignedEdge{l.index, l.exponent == 1});
  }
  return path;
}

std::string render_edge_path(const EdgePath& p) {
  std::string out;
  for (const SignedEdge& e : p) {
    if (!out.empty()) out += ' ';
    out += "e" + std::to_string(e.id);
    if (!e.forward) out += "^-1";
  }
  return out;
}

std::string render_plmap(const PLMap& m) {
  std::string out;
  for (const auto& bp : m.breakpoints()) {
    out += bp.first.to_string() + " -> " + bp.second.to_string() + "\n";
  }
  return out;
}

}  // namespace idemsplit
