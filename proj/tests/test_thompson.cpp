#include <doctest.h>

#include <stdexcept>
#include <random>

#include "idemsplit/sampling.hpp"
#include "idemsplit/textio.hpp"
#include "idemsplit/thompson.hpp"

using namespace idemsplit;

namespace {

FWord fw(const char* text) { return FWord{parse_word(text, 'a')}; }

// Canonical-shape checker for normal forms: a positive block with strictly
// increasing run indices, then a negative block whose rendered indices
// strictly decrease, freely reduced, and whenever some index occurs with
// both signs, the next index occurs too.
bool canonical_shape(const Word& w) {
  const auto& ls = w.letters();
  std::size_t split = 0;
  while (split < ls.size() && ls[split].exponent > 0) ++split;
  for (std::size_t t = split; t < ls.size(); ++t) {
    if (ls[t].exponent > 0) return false;
  }
  for (std::size_t t = 1; t < split; ++t) {
    if (ls[t - 1].index >= ls[t].index) return false;
  }
  for (std::size_t t = split + 1; t < ls.size(); ++t) {
    if (ls[t - 1].index <= ls[t].index) return false;
  }
  if (split > 0 && split < ls.size() && ls[split - 1].index == ls[split].index) return false;
  std::set<std::uint32_t> pos_idx, neg_idx, all_idx;
  for (std::size_t t = 0; t < ls.size(); ++t) {
    (ls[t].exponent > 0 ? pos_idx : neg_idx).insert(ls[t].index);
    all_idx.insert(ls[t].index);
  }
  for (std::uint32_t t : pos_idx) {
    if (neg_idx.contains(t) && !all_idx.contains(t + 1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("shift examples") {
  CHECK(shift(fw("a0"), 1) == fw("a1"));
  CHECK(shift(fw(""), 5) == fw(""));
  CHECK(shift(fw("a0 a2^-1"), 2) == fw("a2 a4^-1"));
}

TEST_CASE("normal form examples") {
  CHECK(normal_form(fw("a0^-1 a1 a0")) == fw("a2"));
  CHECK(normal_form(fw("a0^-1 a2 a0")) == fw("a3"));
  CHECK(normal_form(fw("a1 a0")) == fw("a0 a2"));
  CHECK(normal_form(fw("a0 a0^-1")) == fw(""));
  CHECK(normal_form(fw("a0 a2 a0^-1")) == fw("a1"));
  CHECK(normal_form(fw("a1^-1 a2^-1")) == fw("a3^-1 a1^-1"));
}

TEST_CASE("normal form is canonical and a fixed point") {
  Rng rng(21);
  for (int t = 0; t < 3000; ++t) {
    FWord w = sample_fword(rng, 14, 7);
    FWord nf = normal_form(w);
    CHECK(canonical_shape(nf.word));
    CHECK(normal_form(nf) == nf);
    // The rewriting route is certified against the representation.
    CHECK(equal_pl(to_pl(w), to_pl(nf)));
  }
}

TEST_CASE("representation examples") {
  CHECK(equal_pl(to_pl(fw("")), PLMap::identity()));
  CHECK(equal_pl(to_pl(fw("a0")), PLMap::generator(0)));
  CHECK(equal_pl(to_pl(fw("a0 a0^-1")), PLMap::identity()));
}

TEST_CASE("representation is a homomorphism") {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    FWord u = sample_fword(rng, 8, 5);
    FWord v = sample_fword(rng, 8, 5);
    CHECK(equal_pl(to_pl(FWord{multiply(u.word, v.word)}), compose(to_pl(u), to_pl(v))));
    CHECK(equal_pl(to_pl(FWord{invert(u.word)}), invert_pl(to_pl(u))));
  }
}

TEST_CASE("word problem examples") {
  CHECK(words_equal(fw("a0^-1 a1 a0"), fw("a2")));
  CHECK_FALSE(words_equal(fw("a0"), fw("a1")));
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    FWord w = sample_fword(rng, 10, 6);
    CHECK(words_equal(w, w));
  }
}

TEST_CASE("dual oracle agreement on random pairs") {
  Rng rng(24);
  for (int t = 0; t < 2000; ++t) {
    FWord u = sample_fword(rng, 12, 6);
    FWord v = sample_fword(rng, 12, 6);
    CHECK_NOTHROW(words_equal(u, v));
  }
}

TEST_CASE("presentation verification") {
  CHECK(verify_presentation(0));
  CHECK(verify_presentation(1));
  CHECK(verify_presentation(6));
}

TEST_CASE("shift is an injective homomorphism of F") {
  Rng rng(25);
  for (int t = 0; t < 150; ++t) {
    FWord u = sample_fword(rng, 8, 4);
    FWord v = sample_fword(rng, 8, 4);
    std::uint32_t k = static_cast<std::uint32_t>(t % 3 + 1);
    FWord shifted_product = shift(FWord{multiply(u.word, v.word)}, k);
    CHECK(words_equal(shifted_product,
                      FWord{multiply(shift(u, k).word, shift(v, k).word)}));
    CHECK(words_equal(shift(u, k), shift(v, k)) == words_equal(u, v));
  }
}

TEST_CASE("the shift instance of the conjugation structure") {
  // s^2(a_j) = a_0^-1 s(a_j) a_0 for all j <= 8.
  for (std::uint32_t j = 0; j <= 8; ++j) {
    FWord lhs = shift(FWord{Word::letter(j, 1)}, 2);
    FWord rhs{conjugate(shift(FWord{Word::letter(j, 1)}, 1).word, Word::letter(0, 1))};
    CHECK(words_equal(lhs, rhs));
  }
}

TEST_CASE("commuting family at small scale") {
  CHECK(commuting_family_check(1, 1));
}

TEST_CASE("standard form literal check") {
  auto f1 = standard_form_check(fw("a0^2 a3 a1^-1"));
  REQUIRE(f1.has_value());
  CHECK(f1->i == 0);
  CHECK(f1->n == 2);
  CHECK(f1->b == fw("a2 a0^-1"));
  CHECK(render(*f1) == fw("a0^2 a3 a1^-1"));

  auto f2 = standard_form_check(fw("a1^3"));
  REQUIRE(f2.has_value());
  CHECK(f2->i == 1);
  CHECK(f2->n == 3);
  CHECK(f2->b == fw(""));

  CHECK_FALSE(standard_form_check(fw("")).has_value());
  CHECK_FALSE(standard_form_check(fw("a2")).has_value());
  CHECK_FALSE(standard_form_check(fw("a1 a0")).has_value());
  CHECK_FALSE(standard_form_check(fw("a0 a1 a0^2")).has_value());
}

TEST_CASE("standard form search") {
  auto hit1 = standard_form_search(fw("a0^5"), 2);
  REQUIRE(hit1.has_value());
  CHECK(hit1->first == fw(""));
  CHECK(hit1->second.i == 0);
  CHECK(hit1->second.n == 5);
  CHECK(hit1->second.b == fw(""));

  auto hit2 = standard_form_search(fw("a1 a0"), 2);
  REQUIRE(hit2.has_value());
  CHECK(hit2->first == fw(""));
  CHECK(hit2->second.i == 0);
  CHECK(hit2->second.n == 1);
  CHECK(hit2->second.b == fw("a1"));

  auto hit3 = standard_form_search(fw("a2"), 2);
  REQUIRE(hit3.has_value());
  CHECK(words_equal(FWord{conjugate(fw("a2").word, hit3->first.word)},
                    render(hit3->second)));

  CHECK_THROWS_AS(standard_form_search(fw("a0 a0^-1"), 2), std::invalid_argument);
}

TEST_CASE("search results are certified on random conjugates of formed words") {
  Rng rng(26);
  for (int t = 0; t < 25; ++t) {
    // Start from an element already in standard form, conjugate it away,
    // and ask the bounded search to find its way back.
    std::uniform_int_distribution<std::int64_t> n_dist(1, 2);
    std::uniform_int_distribution<std::uint32_t> g_idx(0, 2);
    FWord formed{multiply(Word::letter(0, n_dist(rng)), Word::letter(1 + g_idx(rng), 1))};
    Word g = sample_reduced_word(rng, 2, 2);
    FWord scrambled{conjugate(formed.word, g)};
    if (words_equal(scrambled, FWord{})) continue;
    auto hit = standard_form_search(scrambled, 3);
    REQUIRE(hit.has_value());
    CHECK(words_equal(FWord{conjugate(scrambled.word, hit->first.word)},
                      render(hit->second)));
  }
}
