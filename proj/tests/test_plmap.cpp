#include <doctest.h>

#include <stdexcept>
#include <random>

#include "idemsplit/plmap.hpp"

using namespace idemsplit;

namespace {

PLMap random_composite(std::mt19937_64& rng, std::uint32_t depth, std::uint32_t max_index) {
  std::uniform_int_distribution<std::uint32_t> idx(0, max_index);
  std::uniform_int_distribution<int> coin(0, 1);
  PLMap acc = PLMap::identity();
  for (std::uint32_t t = 0; t < depth; ++t) {
    PLMap gen = PLMap::generator(idx(rng));
    if (coin(rng)) gen = invert_pl(gen);
    acc = compose(acc, gen);
  }
  return acc;
}

}  // namespace

TEST_CASE("identity and base generator") {
  PLMap id = PLMap::identity();
  CHECK(id.breakpoints().size() == 2);
  CHECK(eval_at(id, Dyadic(1, 1)) == Dyadic(1, 1));

  PLMap a0 = PLMap::generator(0);
  REQUIRE(a0.breakpoints().size() == 4);
  CHECK(a0.breakpoints()[1] == PLMap::Breakpoint{Dyadic(1, 1), Dyadic(1, 2)});
  CHECK(a0.breakpoints()[2] == PLMap::Breakpoint{Dyadic(3, 2), Dyadic(1, 1)});
  CHECK(eval_at(a0, Dyadic(1, 1)) == Dyadic(1, 2));
  CHECK(eval_at(a0, Dyadic(1, 0)) == Dyadic(1, 0));
  CHECK(eval_at(a0, Dyadic(0, 0)) == Dyadic(0, 0));
  CHECK_THROWS_AS(eval_at(a0, Dyadic(-1, 0)), std::domain_error);
  CHECK_THROWS_AS(eval_at(a0, Dyadic(3, 1)), std::domain_error);
}

TEST_CASE("generator n is the identity below 1 - 2^-n") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    PLMap an = PLMap::generator(n);
    Dyadic cut((BigInt(1) << n) - BigInt(1), n);
    CHECK(eval_at(an, cut) == cut);
    Dyadic below = cut.times_pow2(-1);
    CHECK(eval_at(an, below) == below);
    CHECK(eval_at(an, Dyadic(1, 0)) == Dyadic(1, 0));
  }
}

TEST_CASE("functional equality") {
  CHECK(equal_pl(PLMap::identity(), PLMap::identity()));
  CHECK_FALSE(equal_pl(PLMap::generator(0), PLMap::identity()));
  CHECK(equal_pl(compose(PLMap::generator(0), invert_pl(PLMap::generator(0))),
                 PLMap::identity()));
}

TEST_CASE("compose identity laws and inverse") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    PLMap m = random_composite(rng, 6, 4);
    CHECK(equal_pl(compose(PLMap::identity(), m), m));
    CHECK(equal_pl(compose(m, PLMap::identity()), m));
    CHECK(equal_pl(compose(m, invert_pl(m)), PLMap::identity()));
    CHECK(equal_pl(compose(invert_pl(m), m), PLMap::identity()));
    CHECK(equal_pl(invert_pl(invert_pl(m)), m));
  }
}

TEST_CASE("composite of the base generator with itself, frozen and cross-checked") {
  PLMap a0 = PLMap::generator(0);
  PLMap sq = compose(a0, a0);
  std::vector<PLMap::Breakpoint> expected = {
      {Dyadic(0, 0), Dyadic(0, 0)}, {Dyadic(1, 1), Dyadic(1, 3)},
      {Dyadic(3, 2), Dyadic(1, 2)}, {Dyadic(7, 3), Dyadic(1, 1)},
      {Dyadic(1, 0), Dyadic(1, 0)}};
  CHECK(sq.breakpoints() == expected);
  // Independent route: evaluate the square pointwise on the grid k/16.
  for (int k = 0; k <= 16; ++k) {
    Dyadic t(k, 4);
    CHECK(eval_at(sq, t) == eval_at(a0, eval_at(a0, t)));
  }
}

TEST_CASE("inverse of the base generator, frozen") {
  PLMap inv = invert_pl(PLMap::generator(0));
  std::vector<PLMap::Breakpoint> expected = {
      {Dyadic(0, 0), Dyadic(0, 0)}, {Dyadic(1, 2), Dyadic(1, 1)},
      {Dyadic(1, 1), Dyadic(3, 2)}, {Dyadic(1, 0), Dyadic(1, 0)}};
  CHECK(inv.breakpoints() == expected);
}

TEST_CASE("class closure under deep composition") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    PLMap m = random_composite(rng, 12, 5);
    // Re-validating the breakpoint list exercises the power-of-two slope
    // and monotonicity checks.
    CHECK(equal_pl(PLMap::from_breakpoints(m.breakpoints()), m));
  }
}

TEST_CASE("eval agreement under composition") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 25; ++t) {
    PLMap m1 = random_composite(rng, 6, 4);
    PLMap m2 = random_composite(rng, 6, 4);
    PLMap c = compose(m1, m2);
    for (int k = 0; k <= 64; ++k) {
      Dyadic x(k, 6);
      CHECK(eval_at(c, x) == eval_at(m1, eval_at(m2, x)));
    }
  }
}

TEST_CASE("canonical equality matches pointwise equality on a fine grid") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    PLMap m1 = random_composite(rng, 5, 3);
    PLMap m2 = t % 3 == 0 ? m1 : random_composite(rng, 5, 3);
    std::uint32_t d = 1;
    for (const auto& m : {m1, m2}) {
      for (const auto& bp : m.breakpoints()) {
        d = std::max({d, bp.first.exponent() + 1, bp.second.exponent() + 1});
      }
    }
    bool pointwise = true;
    for (std::uint64_t k = 0; k <= (1ull << d); ++k) {
      if (eval_at(m1, Dyadic(static_cast<std::int64_t>(k), d)) !=
          eval_at(m2, Dyadic(static_cast<std::int64_t>(k), d))) {
        pointwise = false;
        break;
      }
    }
    CHECK(equal_pl(m1, m2) == pointwise);
  }
}

TEST_CASE("from_breakpoints rejects bad data") {
  using BP = PLMap::Breakpoint;
  CHECK_THROWS_AS(PLMap::from_breakpoints({BP{Dyadic(0, 0), Dyadic(0, 0)}}),
                  std::invalid_argument);
  // slope 3 is not a power of two
  CHECK_THROWS_AS(PLMap::from_breakpoints({BP{Dyadic(0, 0), Dyadic(0, 0)},
                                           BP{Dyadic(1, 2), Dyadic(3, 2)},
                                           BP{Dyadic(1, 0), Dyadic(1, 0)}}),
                  std::invalid_argument);
  // outputs not increasing
  CHECK_THROWS_AS(PLMap::from_breakpoints({BP{Dyadic(0, 0), Dyadic(0, 0)},
                                           BP{Dyadic(1, 1), Dyadic(0, 0)},
                                           BP{Dyadic(1, 0), Dyadic(1, 0)}}),
                  std::invalid_argument);
  // wrong endpoints
  CHECK_THROWS_AS(PLMap::from_breakpoints({BP{Dyadic(0, 0), Dyadic(0, 0)},
                                           BP{Dyadic(1, 0), Dyadic(1, 1)}}),
                  std::invalid_argument);
}

TEST_CASE("pruning removes collinear interior points") {
  using BP = PLMap::Breakpoint;
  PLMap m = PLMap::from_breakpoints({BP{Dyadic(0, 0), Dyadic(0, 0)},
                                     BP{Dyadic(1, 1), Dyadic(1, 1)},
                                     BP{Dyadic(1, 0), Dyadic(1, 0)}});
  CHECK(m == PLMap::identity());
}
