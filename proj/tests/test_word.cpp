#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "idemsplit/sampling.hpp"
#include "idemsplit/word.hpp"

using namespace idemsplit;

namespace {

// Raw letter soup, cancellations and zero-free exponents included.
std::vector<Letter> raw_letters(Rng& rng, std::uint32_t max_len, std::uint32_t max_index) {
  std::uniform_int_distribution<std::uint32_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> idx(0, max_index);
  std::uniform_int_distribution<std::int64_t> exp(-3, 3);
  std::vector<Letter> out;
  std::uint32_t n = len(rng);
  for (std::uint32_t t = 0; t < n; ++t) {
    std::int64_t e = exp(rng);
    if (e == 0) e = 1;
    out.push_back(Letter{idx(rng), e});
  }
  return out;
}

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(Word::reduce({}) == Word());
  CHECK(Word::reduce({Letter{0, 1}, Letter{0, -1}}) == Word());
  CHECK(Word::reduce({Letter{0, 1}, Letter{1, 1}, Letter{1, -1}, Letter{0, 1}}) ==
        Word::letter(0, 2));
  CHECK_THROWS_AS(Word::reduce({Letter{0, 0}}), std::invalid_argument);
}

TEST_CASE("multiply examples") {
  Word a0 = Word::letter(0, 1);
  CHECK(multiply(a0, Word()) == a0);
  CHECK(multiply(a0, Word::letter(0, -1)) == Word());
  Word u = Word::reduce({Letter{0, 1}, Letter{1, 1}});
  Word v = Word::reduce({Letter{1, -1}, Letter{2, 1}});
  CHECK(multiply(u, v) == Word::reduce({Letter{0, 1}, Letter{2, 1}}));
}

TEST_CASE("invert examples") {
  CHECK(invert(Word()) == Word());
  CHECK(invert(Word::letter(0, 2)) == Word::letter(0, -2));
  Word w = Word::reduce({Letter{0, 1}, Letter{1, -1}});
  CHECK(invert(w) == Word::reduce({Letter{1, 1}, Letter{0, -1}}));
}

TEST_CASE("conjugate examples") {
  Word w = Word::letter(1, 1);
  CHECK(conjugate(w, Word()) == w);
  CHECK(conjugate(Word(), Word::letter(0, 1)) == Word());
  CHECK(conjugate(Word::letter(1, 1), Word::letter(0, 1)) ==
        Word::reduce({Letter{0, -1}, Letter{1, 1}, Letter{0, 1}}));
}

TEST_CASE("cyclic_reduce examples") {
  auto [core1, conj1] = cyclic_reduce(Word::reduce({Letter{0, 1}, Letter{1, 1}, Letter{0, -1}}));
  CHECK(core1 == Word::letter(1, 1));
  CHECK(conj1 == Word::letter(0, -1));
  auto [core2, conj2] = cyclic_reduce(Word::letter(1, 1));
  CHECK(core2 == Word::letter(1, 1));
  CHECK(conj2 == Word());
  auto [core3, conj3] = cyclic_reduce(Word());
  CHECK(core3 == Word());
  CHECK(conj3 == Word());
}

TEST_CASE("support examples") {
  CHECK(support(Word()).empty());
  CHECK(support(Word::letter(0, 2)) == std::set<std::uint32_t>{0});
  Word w = Word::reduce({Letter{0, 1}, Letter{3, 1}, Letter{0, -1}});
  CHECK(support(w) == std::set<std::uint32_t>{0, 3});
}

TEST_CASE("group laws hold on random reduced words") {
  Rng rng(1);
  for (int t = 0; t < 10000; ++t) {
    Word u = sample_reduced_word(rng, 30, 10);
    Word v = sample_reduced_word(rng, 30, 10);
    Word w = sample_reduced_word(rng, 30, 10);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, Word()) == u);
    CHECK(multiply(Word(), u) == u);
    CHECK(multiply(u, invert(u)) == Word());
    CHECK(invert(invert(u)) == u);
    CHECK(invert(multiply(u, v)) == multiply(invert(v), invert(u)));
  }
}

TEST_CASE("reduce is idempotent on raw sequences") {
  Rng rng(2);
  for (int t = 0; t < 10000; ++t) {
    auto raw = raw_letters(rng, 24, 6);
    Word once = Word::reduce(raw);
    CHECK(Word::reduce(once.letters()) == once);
    for (std::size_t j = 0; j + 1 < once.letters().size(); ++j) {
      CHECK(once.letters()[j].index != once.letters()[j + 1].index);
      CHECK(once.letters()[j].exponent != 0);
    }
  }
}

TEST_CASE("cyclic_reduce round trip and core shape") {
  Rng rng(3);
  for (int t = 0; t < 10000; ++t) {
    Word w = sample_reduced_word(rng, 20, 6);
    auto [core, conj] = cyclic_reduce(w);
    CHECK(conjugate(core, conj) == w);
    if (core.letters().size() >= 2) {
      CHECK(core.letters().front().index != core.letters().back().index);
    }
  }
}

TEST_CASE("word power") {
  Word u = Word::reduce({Letter{0, 1}, Letter{1, 1}});
  CHECK(power(u, 0) == Word());
  CHECK(power(u, 1) == u);
  CHECK(power(u, -1) == invert(u));
  CHECK(power(u, 3) == multiply(u, multiply(u, u)));
  CHECK(multiply(power(u, 2), power(u, -2)) == Word());
}
