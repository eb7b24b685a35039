#include "idemsplit/endo.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace idemsplit {

FreeEndo::FreeEndo(std::uint32_t rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank_ == 0) throw std::invalid_argument("FreeEndo: rank must be positive");
  if (images_.size() != rank_) {
    throw std::invalid_argument("FreeEndo: need exactly one image per generator");
  }
  for (const Word& img : images_) {
    for (const Letter& l : img.letters()) {
      if (l.index >= rank_) {
        throw std::invalid_argument("FreeEndo: image uses a generator index >= rank");
      }
    }
  }
}

FreeEndo FreeEndo::identity(std::uint32_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::uint32_t s = 0; s < rank; ++s) images.push_back(Word::letter(s, 1));
  return FreeEndo(rank, std::move(images));
}

FreeEndo FreeEndo::inner(std::uint32_t rank, const Word& w) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::uint32_t s = 0; s < rank; ++s) {
    images.push_back(conjugate(Word::letter(s, 1), w));
  }
  return FreeEndo(rank, std::move(images));
}

const Word& FreeEndo::image(std::uint32_t s) const {
  if (s >= rank_) throw std::out_of_range("FreeEndo::image: index >= rank");
  return images_[s];
}

Word apply(const FreeEndo& f, const Word& w) {
  Word acc;
  for (const Letter& l : w.letters()) {
    if (l.index >= f.rank()) throw std::out_of_range("apply: word index >= rank");
    acc = multiply(acc, power(f.image(l.index), l.exponent));
  }
  return acc;
}

FreeEndo compose(const FreeEndo& outer, const FreeEndo& inner) {
  if (outer.rank() != inner.rank()) {
    throw std::invalid_argument("compose: rank mismatch");
  }
  std::vector<Word> images;
  images.reserve(inner.rank());
  for (const Word& img : inner.images()) images.push_back(apply(outer, img));
  return FreeEndo(inner.rank(), std::move(images));
}

FreeEndo power(const FreeEndo& f, std::uint64_t n) {
  FreeEndo acc = FreeEndo::identity(f.rank());
  for (std::uint64_t t = 0; t < n; ++t) acc = compose(f, acc);
  return acc;
}

bool check_conj_idem(const FreeEndo& f, const Word& x0) {
  FreeEndo ff = compose(f, f);
  for (std::uint32_t s = 0; s < f.rank(); ++s) {
    if (ff.image(s) != conjugate(f.image(s), x0)) return false;
  }
  return true;
}

ConjIdemWitness::ConjIdemWitness(FreeEndo f, Word x0)
    : endo_(std::move(f)), x0_(std::move(x0)) {
  if (!check_conj_idem(endo_, x0_)) {
    throw std::invalid_argument(
        "ConjIdemWitness: f^2(x) = x0^-1 f(x) x0 fails on a generator");
  }
}

Word x_sequence(const ConjIdemWitness& wit, std::uint32_t i) {
  Word x = wit.x0();
  for (std::uint32_t t = 0; t < i; ++t) x = apply(wit.endo(), x);
  return x;
}

bool verify_conjugation_identity(const ConjIdemWitness& wit, std::uint32_t m,
                                 std::uint32_t i, std::uint32_t k) {
  if (m <= i) throw std::invalid_argument("verify_conjugation_identity: requires m > i");
  if (k == 0) throw std::invalid_argument("verify_conjugation_identity: requires k >= 1");
  Word xik = power(x_sequence(wit, i), static_cast<std::int64_t>(k));
  FreeEndo fm = power(wit.endo(), m);
  FreeEndo fmk = power(wit.endo(), m + k);
  for (std::uint32_t s = 0; s < wit.endo().rank(); ++s) {
    if (conjugate(fm.image(s), xik) != fmk.image(s)) return false;
  }
  return true;
}

FreeEndo make_idempotent_from_preimage(const ConjIdemWitness& wit, const Word& y) {
  if (apply(wit.endo(), y) != wit.x0()) {
    throw std::invalid_argument("make_idempotent_from_preimage: f(y) != x0");
  }
  const Word y_inv = invert(y);
  std::vector<Word> images;
  images.reserve(wit.endo().rank());
  for (std::uint32_t s = 0; s < wit.endo().rank(); ++s) {
    images.push_back(multiply(multiply(y, wit.endo().image(s)), y_inv));
  }
  FreeEndo g(wit.endo().rank(), std::move(images));
  if (compose(g, g) != g) {
    throw std::logic_error("make_idempotent_from_preimage: g o g != g");
  }
  return g;
}

namespace {

// Shared tail of splitting_power and kernel_witness_to_splitting; assumes
// the witness equation f^{i+1}(v) = x_i^k already verified. Uses
// n = k*(i+1), conjugator y = v^{i+1} and the conjugation law to exhibit
// f^n as conjugate-idempotent with respect to x_i^n = f^n(y).
SplitResult split_core(const ConjIdemWitness& wit, std::uint32_t i, std::uint32_t k,
                       const Word& v) {
  const std::uint64_t n = static_cast<std::uint64_t>(k) * (i + 1);
  const Word y = power(v, static_cast<std::int64_t>(i) + 1);
  const Word xin = power(x_sequence(wit, i), static_cast<std::int64_t>(n));
  FreeEndo fn = power(wit.endo(), n);
  // Constructor re-verifies f^{2n}(x) = x_i^-n f^n(x) x_i^n; a failure
  // here is a hard fault, not a caller error.
  ConjIdemWitness powered(std::move(fn), xin);
  FreeEndo g = make_idempotent_from_preimage(powered, y);
  return SplitResult{n, y, g};
}

}  // namespace

SplitResult splitting_power(const ConjIdemWitness& wit, std::uint32_t i,
                            std::uint32_t k, const Word& witness_v) {
  if (k == 0) throw std::invalid_argument("splitting_power: requires k >= 1");
  if (apply(power(wit.endo(), i + 1), witness_v) !=
      power(x_sequence(wit, i), static_cast<std::int64_t>(k))) {
    throw std::invalid_argument("splitting_power: witness equation f^{i+1}(v) = x_i^k fails");
  }
  std::uint32_t ii = i;
  if (ii == 0) {
    // Apply f to both sides of the witness equation: f^2(v) = x_1^k, so
    // the same v witnesses the claim at i = 1.
    ii = 1;
    if (apply(power(wit.endo(), 2), witness_v) !=
        power(x_sequence(wit, 1), static_cast<std::int64_t>(k))) {
      throw std::logic_error("splitting_power: bumped witness equation fails");
    }
  }
  return split_core(wit, ii, k, witness_v);
}

Word e_hom(const ConjIdemWitness& wit, const FWord& w) {
  std::uint32_t max_index = 0;
  for (const Letter& l : w.word.letters()) max_index = std::max(max_index, l.index);
  // Relation preservation: x_i^-1 x_j x_i = x_{j+1} for i < j up to the
  // largest index used. Holds for every valid witness; a failure is a
  // hard fault.
  if (!w.word.is_identity()) {
    std::vector<Word> xs;
    for (std::uint32_t t = 0; t <= max_index + 1; ++t) xs.push_back(x_sequence(wit, t));
    for (std::uint32_t i = 0; i < max_index; ++i) {
      for (std::uint32_t j = i + 1; j <= max_index; ++j) {
        if (conjugate(xs[j], xs[i]) != xs[j + 1]) {
          throw std::logic_error("e_hom: defining relations not preserved");
        }
      }
    }
  }
  Word acc;
  for (const Letter& l : w.word.letters()) {
    acc = multiply(acc, power(x_sequence(wit, l.index), l.exponent));
  }
  return acc;
}

SplitResult kernel_witness_to_splitting(const ConjIdemWitness& wit, const FWord& w) {
  auto form = standard_form_check(w);
  if (!form.has_value()) {
    throw std::invalid_argument("kernel_witness_to_splitting: word not in standard form");
  }
  if (!e_hom(wit, w).is_identity()) {
    throw std::invalid_argument("kernel_witness_to_splitting: e(w) != identity");
  }
  const std::uint32_t i = form->i;
  // Replace each letter a_j of the tail s^{i+1}(b) by f^{j-i-1}(x0), so
  // that f^{i+1}(v0) equals e(s^{i+1}(b)).
  FWord tail = shift(form->b, i + 1);
  Word v0;
  for (const Letter& l : tail.word.letters()) {
    v0 = multiply(v0, power(x_sequence(wit, l.index - (i + 1)), l.exponent));
  }
  std::uint32_t k;
  Word v;
  if (form->n > 0) {
    k = static_cast<std::uint32_t>(form->n);
    v = invert(v0);
  } else {
    k = static_cast<std::uint32_t>(-form->n);
    v = v0;
  }
  if (apply(power(wit.endo(), i + 1), v) !=
      power(x_sequence(wit, i), static_cast<std::int64_t>(k))) {
    throw std::logic_error("kernel_witness_to_splitting: derived witness equation fails");
  }
  return split_core(wit, i, k, v);
}

InnerResult is_inner(const FreeEndo& f, std::uint32_t exp_bound) {
  // Per-generator conjugacy: f(x_s) must cyclically reduce to x_s itself.
  std::vector<Word> coset_reps(f.rank());
  for (std::uint32_t s = 0; s < f.rank(); ++s) {
    auto [core, conj] = cyclic_reduce(f.image(s));
    if (core != Word::letter(s, 1)) {
      return InnerResult{InnerVerdict::kNotInner, std::nullopt};
    }
    coset_reps[s] = conj;
  }
  auto certified = [&](const Word& cand) {
    for (std::uint32_t s = 0; s < f.rank(); ++s) {
      if (f.image(s) != conjugate(Word::letter(s, 1), cand)) return false;
    }
    return true;
  };
  // Any common conjugator lies in <x_0> * coset_reps[0]; walk exponents
  // 0, 1, -1, 2, -2, ... for determinism.
  for (std::uint32_t t = 0; t <= exp_bound; ++t) {
    for (int sign : {1, -1}) {
      if (t == 0 && sign < 0) continue;
      std::int64_t e = sign > 0 ? static_cast<std::int64_t>(t)
                                : -static_cast<std::int64_t>(t);
      Word cand = multiply(power(Word::letter(0, 1), e), coset_reps[0]);
      if (certified(cand)) {
        return InnerResult{InnerVerdict::kFound, cand};
      }
    }
  }
  return InnerResult{InnerVerdict::kNotFoundWithinBound, std::nullopt};
}

Word min_support_conjugator(const Word& target, std::uint32_t base_index,
                            const Word& seed, std::uint32_t exp_bound) {
  const Word base = Word::letter(base_index, 1);
  if (conjugate(base, seed) != target) {
    throw std::invalid_argument("min_support_conjugator: seed does not conjugate base to target");
  }
  Word best;
  std::size_t best_support = 0;
  bool have_best = false;
  for (std::uint32_t t = 0; t <= exp_bound; ++t) {
    for (int sign : {1, -1}) {
      if (t == 0 && sign < 0) continue;
      std::int64_t e = sign > 0 ? static_cast<std::int64_t>(t)
                                : -static_cast<std::int64_t>(t);
      Word cand = multiply(power(base, e), seed);
      std::size_t sz = support(cand).size();
      if (!have_best || sz < best_support) {
        best = cand;
        best_support = sz;
        have_best = true;
      }
    }
  }
  return best;
}

}  // namespace idemsplit
