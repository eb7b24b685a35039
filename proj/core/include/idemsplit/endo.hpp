#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idemsplit/thompson.hpp"
#include "idemsplit/word.hpp"

namespace idemsplit {

// Endomorphism of the free group on x_0..x_{rank-1}, given by the images
// of the generators. Application is substitution followed by free
// reduction, so the homomorphism property is definitional.
class FreeEndo {
 public:
  FreeEndo(std::uint32_t rank, std::vector<Word> images);

  static FreeEndo identity(std::uint32_t rank);
  // x -> w^-1 x w.
  static FreeEndo inner(std::uint32_t rank, const Word& w);

  std::uint32_t rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::uint32_t s) const;

  bool operator==(const FreeEndo&) const = default;

 private:
  std::uint32_t rank_;
  std::vector<Word> images_;
};

// Substitute generator images into w and reduce. Throws std::out_of_range
// if w uses an index >= rank.
Word apply(const FreeEndo& f, const Word& w);

// outer . inner (inner applied first).
FreeEndo compose(const FreeEndo& outer, const FreeEndo& inner);

// n-fold composite; n == 0 gives the identity endomorphism.
FreeEndo power(const FreeEndo& f, std::uint64_t n);

// Does f^2(x) = x0^-1 f(x) x0 hold? Both sides are homomorphisms in x,
// so checking the generators settles it.
bool check_conj_idem(const FreeEndo& f, const Word& x0);

// An endomorphism f together with x0 such that f^2(x) = x0^-1 f(x) x0,
// verified on construction.
class ConjIdemWitness {
 public:
  ConjIdemWitness(FreeEndo f, Word x0);  // throws std::invalid_argument

  const FreeEndo& endo() const { return endo_; }
  const Word& x0() const { return x0_; }

 private:
  FreeEndo endo_;
  Word x0_;
};

// x_i = f^i(x0), with x_sequence(wit, 0) == x0.
Word x_sequence(const ConjIdemWitness& wit, std::uint32_t i);

// Checks the conjugation law x_i^-k f^m(x) x_i^k = f^{m+k}(x) on every
// generator. Requires m > i (throws std::invalid_argument otherwise).
// Note the exponent: conjugating by x_i advances the power of f by one
// regardless of i, as iterating the defining identity shows; checking is
// extensional, so any deviation would be caught here.
bool verify_conjugation_identity(const ConjIdemWitness& wit, std::uint32_t m,
                                 std::uint32_t i, std::uint32_t k);

// Given y with f(y) = x0, builds g(x) = y f(x) y^-1 and verifies g g = g
// on the generators (std::logic_error on failure; std::invalid_argument
// if f(y) != x0).
FreeEndo make_idempotent_from_preimage(const ConjIdemWitness& wit, const Word& y);

// A power f^n conjugate to an honest idempotent: idempotent(x) equals
// conjugator * f^power(x) * conjugator^-1 on every generator, and
// idempotent o idempotent == idempotent.
struct SplitResult {
  std::uint64_t power = 0;
  Word conjugator;
  FreeEndo idempotent;
};

// From a witness v with f^{i+1}(v) = x_i^k, produces a SplitResult with
// n = k*(i+1) after forcing i >= 1 (an i of 0 is bumped to 1; applying f
// to the witness equation shows the same v works). Throws
// std::invalid_argument if the witness equation fails.
SplitResult splitting_power(const ConjIdemWitness& wit, std::uint32_t i,
                            std::uint32_t k, const Word& witness_v);

// The homomorphism F -> G determined by a_t -> f^t(x0). Well-definedness
// (the defining relations of F map to identities in G) is asserted for
// all indices occurring in w.
Word e_hom(const ConjIdemWitness& wit, const FWord& w);

// Full pipeline: from a kernel element of e in standard form a_i^n s^{i+1}(b),
// constructs the preimage witness v with f^{i+1}(v) = x_i^{|n|} and splits.
// Requires standard form and e_hom(w) trivial (std::invalid_argument).
SplitResult kernel_witness_to_splitting(const ConjIdemWitness& wit, const FWord& w);

enum class InnerVerdict {
  kFound,                // certified conjugator returned
  kNotFoundWithinBound,  // per-generator conjugators exist, no common one found
  kNotInner,             // some f(x_s) is not conjugate to x_s: definitive
};

struct InnerResult {
  InnerVerdict verdict = InnerVerdict::kNotInner;
  std::optional<Word> conjugator;
};

// Detects f(x) = a^-1 x a for a single word a. For each generator the
// solution set of f(x_s) = c^-1 x_s c is the coset <x_s> a(s) or empty;
// candidates x_0^t a(0) for |t| <= exp_bound are certified against every
// generator. A found conjugator is always certified; kNotInner is
// definitive, kNotFoundWithinBound is only a bounded-search verdict.
InnerResult is_inner(const FreeEndo& f, std::uint32_t exp_bound);

// Among the conjugators x_base^t * seed, |t| <= exp_bound, all of which
// carry x_base to target, returns the one of smallest support size
// (ties: smallest |t|, then t >= 0). Requires conjugate(x_base, seed) ==
// target (std::invalid_argument).
Word min_support_conjugator(const Word& target, std::uint32_t base_index,
                            const Word& seed, std::uint32_t exp_bound);

}  // namespace idemsplit
