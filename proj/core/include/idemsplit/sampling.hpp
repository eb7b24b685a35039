#pragma once

#include <cstdint>
#include <random>

#include "idemsplit/endo.hpp"
#include "idemsplit/thompson.hpp"
#include "idemsplit/word.hpp"

namespace idemsplit {

using Rng = std::mt19937_64;

// Uniform-ish reduced word: picks a target length <= max_len and draws
// letters avoiding immediate cancellation, so the reduced length equals
// the target.
Word sample_reduced_word(Rng& rng, std::uint32_t max_len, std::uint32_t max_index);

FWord sample_fword(Rng& rng, std::uint32_t max_len, std::uint32_t max_index);

// A conjugate-idempotent witness together with bookkeeping the tests
// need: the witness was assembled as x -> w^-1 r(x) w for a retraction r
// (r fixes the generators of a chosen free factor and sends the rest into
// it), which satisfies f^2(x) = x0^-1 f(x) x0 with x0 = w^-1 r(w) w, and
// admits the preimage y = w of x0.
struct SampledWitness {
  ConjIdemWitness witness;
  Word preimage_y;
  Word conjugating_w;
  FreeEndo retraction;
};

SampledWitness sample_witness(Rng& rng, std::uint32_t rank, std::uint32_t max_word_len);

// A random inner endomorphism together with its conjugating word.
struct SampledInner {
  FreeEndo endo;
  Word conjugator;
};

SampledInner sample_inner(Rng& rng, std::uint32_t rank, std::uint32_t max_conj_len);

// A nontrivial kernel element of the canonical homomorphism for witnesses
// whose x-sequence is constant: a_i^n followed by a tail with indices in
// [i+1, i+4] whose total exponent sum balances n to zero.
FWord sample_kernel_word(Rng& rng);

}  // namespace idemsplit
