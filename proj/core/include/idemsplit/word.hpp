#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace idemsplit {

// One run of a generator: index names the generator, exponent is the
// (nonzero) signed run length. a0^3 is one Letter, not three.
struct Letter {
  std::uint32_t index = 0;
  std::int64_t exponent = 0;

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

// Freely reduced word over a countable indexed alphabet: adjacent letters
// carry distinct indices, exponents are nonzero, and the empty word is the
// group identity. Words are immutable values; every operation returns a
// fresh word.
class Word {
 public:
  Word() = default;  // identity

  // Free reduction of an arbitrary letter sequence. Rejects exponent 0
  // with std::invalid_argument. Idempotent.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }

  // The one-letter word index^exponent (exponent != 0).
  static Word letter(std::uint32_t index, std::int64_t exponent);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  // Total number of unit letters, i.e. sum of |exponent|.
  std::uint64_t length() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  friend Word multiply(const Word&, const Word&);
  friend Word invert(const Word&);

  std::vector<Letter> letters_;
};

// Reduced product u * v.
Word multiply(const Word& u, const Word& v);

// Inverse word: reversed letters with negated exponents.
Word invert(const Word& u);

// g^-1 * w * g, reduced.
Word conjugate(const Word& w, const Word& g);

// u^n for any integer n (n == 0 gives the identity).
Word power(const Word& u, std::int64_t n);

// Cyclic reduction: returns (core, conjugator) with
// w == conjugate(core, conjugator) and core cyclically reduced (its first
// and last letters carry distinct indices, or it has at most one letter).
std::pair<Word, Word> cyclic_reduce(const Word& w);

// Set of generator indices occurring in w; its size is the minimal number
// of generators needed to express w in the fixed basis.
std::set<std::uint32_t> support(const Word& w);

}  // namespace idemsplit
