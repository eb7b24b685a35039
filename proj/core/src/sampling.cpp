#include "idemsplit/sampling.hpp"

#include <vector>

namespace idemsplit {

Word sample_reduced_word(Rng& rng, std::uint32_t max_len, std::uint32_t max_index) {
  std::uniform_int_distribution<std::uint32_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::uint32_t> index_dist(0, max_index);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::uint32_t len = len_dist(rng);
  std::vector<Letter> letters;
  letters.reserve(len);
  for (std::uint32_t t = 0; t < len; ++t) {
    while (true) {
      Letter l{index_dist(rng), sign_dist(rng) == 0 ? 1 : -1};
      if (!letters.empty() && letters.back().index == l.index &&
          letters.back().exponent == -l.exponent) {
        continue;
      }
      letters.push_back(l);
      break;
    }
  }
  return Word::reduce(letters);
}

FWord sample_fword(Rng& rng, std::uint32_t max_len, std::uint32_t max_index) {
  return FWord{sample_reduced_word(rng, max_len, max_index)};
}

SampledWitness sample_witness(Rng& rng, std::uint32_t rank, std::uint32_t max_word_len) {
  // Retained generators of the retraction; possibly none (constant map).
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::uint32_t> kept;
  for (std::uint32_t s = 0; s < rank; ++s) {
    if (coin(rng) == 0) kept.push_back(s);
  }
  std::vector<Word> r_images(rank);
  for (std::uint32_t s = 0; s < rank; ++s) r_images[s] = Word();
  for (std::uint32_t s : kept) r_images[s] = Word::letter(s, 1);
  if (!kept.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, kept.size() - 1);
    for (std::uint32_t s = 0; s < rank; ++s) {
      if (r_images[s].is_identity() && coin(rng) == 0) {
        // Send a dropped generator to a short word in the kept ones.
        Word img;
        std::uniform_int_distribution<std::uint32_t> len_dist(1, 3);
        std::uint32_t len = len_dist(rng);
        for (std::uint32_t t = 0; t < len; ++t) {
          img = multiply(img, Word::letter(kept[pick(rng)], coin(rng) == 0 ? 1 : -1));
        }
        r_images[s] = img;
      }
    }
  }
  FreeEndo retraction(rank, std::move(r_images));

  Word w = sample_reduced_word(rng, max_word_len, rank - 1);
  // f = (conjugation by w) o r; then f^2(x) = x0^-1 f(x) x0 with
  // x0 = w^-1 r(w) w, and f(w) = x0.
  std::vector<Word> f_images;
  f_images.reserve(rank);
  for (std::uint32_t s = 0; s < rank; ++s) {
    f_images.push_back(conjugate(retraction.image(s), w));
  }
  FreeEndo f(rank, std::move(f_images));
  Word x0 = conjugate(apply(retraction, w), w);
  ConjIdemWitness wit(std::move(f), std::move(x0));
  return SampledWitness{std::move(wit), w, w, std::move(retraction)};
}

SampledInner sample_inner(Rng& rng, std::uint32_t rank, std::uint32_t max_conj_len) {
  Word w = sample_reduced_word(rng, max_conj_len, rank - 1);
  return SampledInner{FreeEndo::inner(rank, w), w};
}

FWord sample_kernel_word(Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> i_dist(0, 1);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uint32_t i = i_dist(rng);
  std::int64_t n = n_dist(rng) * (coin(rng) == 0 ? 1 : -1);
  // Tail letters with indices in [i+1, i+4]; the exponent sum is balanced
  // against n, which keeps the element in the kernel for witnesses whose
  // x-sequence is constant. Free reduction preserves exponent sums and the
  // balancing letter keeps the tail nonempty.
  std::uniform_int_distribution<std::uint32_t> idx_dist(i + 1, i + 4);
  std::uniform_int_distribution<std::uint32_t> extra_dist(0, 3);
  std::vector<Letter> tail;
  std::int64_t sum = 0;
  std::uint32_t extra = extra_dist(rng);
  for (std::uint32_t t = 0; t < extra; ++t) {
    Letter l{idx_dist(rng), coin(rng) == 0 ? 1 : -1};
    tail.push_back(l);
    sum += l.exponent;
  }
  std::int64_t need = -n - sum;
  if (need != 0) tail.push_back(Letter{i + 1, need});
  Word tail_word = Word::reduce(tail);
  if (tail_word.is_identity()) {
    // Only possible when the random letters summed to -n by themselves and
    // then cancelled; rebuild with the canonical balanced tail a_{i+1}^-n.
    tail_word = Word::letter(i + 1, -n);
  }
  return FWord{multiply(Word::letter(i, n), tail_word)};
}

}  // namespace idemsplit
