#include "idemsplit/word.hpp"

#include <stdexcept>

namespace idemsplit {

namespace {

// Append one run to a reduced spine, merging and cancelling at the join.
// Cancellation cascades through the caller pushing subsequent runs.
void push_reduced(std::vector<Letter>& spine, Letter l) {
  if (!spine.empty() && spine.back().index == l.index) {
    spine.back().exponent += l.exponent;
    if (spine.back().exponent == 0) spine.pop_back();
    return;
  }
  spine.push_back(l);
}

}  // namespace

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> spine;
  spine.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.exponent == 0) throw std::invalid_argument("Word::reduce: zero exponent");
    push_reduced(spine, l);
  }
  return Word(std::move(spine));
}

Word Word::letter(std::uint32_t index, std::int64_t exponent) {
  if (exponent == 0) throw std::invalid_argument("Word::letter: zero exponent");
  return Word({Letter{index, exponent}});
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const Letter& l : letters_) {
    n += static_cast<std::uint64_t>(l.exponent < 0 ? -l.exponent : l.exponent);
  }
  return n;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> spine = u.letters_;
  for (const Letter& l : v.letters_) push_reduced(spine, l);
  return Word(std::move(spine));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.letters_.size());
  for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) {
    out.push_back(Letter{it->index, -it->exponent});
  }
  return Word(std::move(out));
}

Word conjugate(const Word& w, const Word& g) {
  return multiply(multiply(invert(g), w), g);
}

Word power(const Word& u, std::int64_t n) {
  Word base = n < 0 ? invert(u) : u;
  std::int64_t reps = n < 0 ? -n : n;
  Word acc;
  for (std::int64_t t = 0; t < reps; ++t) acc = multiply(acc, base);
  return acc;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word core = w;
  Word conj;  // accumulated so that w == conjugate(core, conj)
  while (core.letters().size() >= 2 &&
         core.letters().front().index == core.letters().back().index) {
    // Peel the whole trailing run g: core' = g * core * g^-1, which is
    // two letters shorter (or one, when the runs merge instead).
    Word g = Word::letter(core.letters().back().index, core.letters().back().exponent);
    core = multiply(multiply(g, core), invert(g));
    conj = multiply(g, conj);
  }
  return {core, conj};
}

std::set<std::uint32_t> support(const Word& w) {
  std::set<std::uint32_t> out;
  for (const Letter& l : w.letters()) out.insert(l.index);
  return out;
}

}  // namespace idemsplit
