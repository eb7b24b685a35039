#include "idemsplit/thompson.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace idemsplit {

namespace {

// One maximal run a_index^count with count > 0.
struct Run {
  std::uint32_t index;
  std::int64_t count;
};

// Working state for rewriting to normal form: the word pos * rev(neg)^-1,
// where pos and neg are strictly increasing run sequences (pos holds the
// positive block, neg holds the positive word q whose inverse forms the
// negative block). The junction is kept freely reduced.
class NormalBuilder {
 public:
  // Right-multiplies by a single a_k^{±1}, re-establishing the sorted
  // two-block shape using the defining relations: for i < j,
  //   a_j a_i        -> a_i a_{j+1}
  //   a_j^-1 a_i     -> a_i a_{j+1}^-1
  //   a_i^-1 a_j     -> a_{j+1} a_i^-1
  //   a_i^-1 a_j^-1  -> a_{j+1}^-1 a_i^-1
  // together with free cancellation.
  void append(std::uint32_t k, bool positive) {
    if (positive) {
      append_positive(k);
    } else {
      append_negative(k);
    }
  }

  // Cancels every a_t ... a_t^-1 pair that encloses only indices >= t+2,
  // shifting the enclosed indices down by one. Afterwards, whenever a_t
  // and a_t^-1 both occur, index t+1 occurs as well; this pins the unique
  // canonical representative.
  void trim() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Run& r : pos_) {
        std::uint32_t t = r.index;
        if (!contains(neg_, t)) continue;
        if (contains(pos_, t + 1) || contains(neg_, t + 1)) continue;
        decrement(pos_, t);
        decrement(neg_, t);
        for (Run& p : pos_) {
          if (p.index > t) --p.index;
        }
        for (Run& q : neg_) {
          if (q.index > t) --q.index;
        }
        changed = true;
        break;
      }
    }
  }

  Word to_word() const {
    std::vector<Letter> letters;
    letters.reserve(pos_.size() + neg_.size());
    for (const Run& r : pos_) letters.push_back(Letter{r.index, r.count});
    for (auto it = neg_.rbegin(); it != neg_.rend(); ++it) {
      letters.push_back(Letter{it->index, -it->count});
    }
    return Word::reduce(letters);
  }

 private:
  static bool contains(const std::vector<Run>& runs, std::uint32_t t) {
    auto it = std::lower_bound(runs.begin(), runs.end(), t,
                               [](const Run& r, std::uint32_t v) { return r.index < v; });
    return it != runs.end() && it->index == t;
  }

  static void decrement(std::vector<Run>& runs, std::uint32_t t) {
    auto it = std::lower_bound(runs.begin(), runs.end(), t,
                               [](const Run& r, std::uint32_t v) { return r.index < v; });
    if (--it->count == 0) runs.erase(it);
  }

  // Free cancellation where the positive block meets the negative one.
  void cancel_junction() {
    while (!pos_.empty() && !neg_.empty() && pos_.back().index == neg_.back().index) {
      std::int64_t m = std::min(pos_.back().count, neg_.back().count);
      pos_.back().count -= m;
      neg_.back().count -= m;
      if (pos_.back().count == 0) pos_.pop_back();
      if (neg_.back().count == 0) neg_.pop_back();
    }
  }

  void append_positive(std::uint32_t k) {
    std::uint64_t cur = k;
    // The letter moves left through the whole negative block: past runs
    // of smaller index it bumps itself, runs of larger index bump instead,
    // an equal index cancels one unit.
    std::vector<Run> out;
    out.reserve(neg_.size() + 1);
    bool alive = true;
    for (std::size_t j = 0; j < neg_.size(); ++j) {
      Run run = neg_[j];
      if (!alive) {
        out.push_back(run);
      } else if (run.index == cur) {
        alive = false;
        if (--run.count > 0) out.push_back(run);
      } else if (run.index < cur) {
        cur += static_cast<std::uint64_t>(run.count);
        out.push_back(run);
      } else {
        ++run.index;
        out.push_back(run);
      }
    }
    neg_ = std::move(out);
    if (!alive) {
      cancel_junction();
      return;
    }
    // Insert into the positive block, bumping larger runs out of the way.
    std::uint32_t kk = narrow(cur);
    std::size_t j = pos_.size();
    while (j > 0 && pos_[j - 1].index > kk) {
      ++pos_[j - 1].index;
      --j;
    }
    if (j > 0 && pos_[j - 1].index == kk) {
      ++pos_[j - 1].count;
    } else {
      pos_.insert(pos_.begin() + static_cast<std::ptrdiff_t>(j), Run{kk, 1});
    }
  }

  void append_negative(std::uint32_t k) {
    std::uint64_t cur = k;
    // The inverse letter moves left only past smaller-index runs of the
    // negative block, bumping itself each time.
    std::size_t j = 0;
    while (j < neg_.size() && neg_[j].index < cur) {
      cur += static_cast<std::uint64_t>(neg_[j].count);
      ++j;
    }
    if (j < neg_.size() && neg_[j].index == cur) {
      ++neg_[j].count;
      return;
    }
    if (j < neg_.size()) {
      neg_.insert(neg_.begin() + static_cast<std::ptrdiff_t>(j), Run{narrow(cur), 1});
      return;
    }
    // Reached the junction.
    std::uint32_t kk = narrow(cur);
    if (!pos_.empty() && pos_.back().index == kk) {
      if (--pos_.back().count == 0) pos_.pop_back();
      cancel_junction();
      return;
    }
    neg_.push_back(Run{kk, 1});
  }

  static std::uint32_t narrow(std::uint64_t v) {
    if (v > 0xffffffffull) throw std::overflow_error("normal_form: generator index overflow");
    return static_cast<std::uint32_t>(v);
  }

  std::vector<Run> pos_;
  std::vector<Run> neg_;
};

// Self-check of the composition convention used by to_pl, run once: the
// defining relations must hold in the PL model with
// rho(u v) = rho(u) o rho(v). Built directly from PLMap operations so it
// cannot recurse into to_pl.
bool convention_ok() {
  for (std::uint32_t i = 0; i < 3; ++i) {
    for (std::uint32_t j = i + 1; j <= 3; ++j) {
      PLMap lhs = compose(compose(invert_pl(PLMap::generator(i)), PLMap::generator(j)),
                          PLMap::generator(i));
      if (!equal_pl(lhs, PLMap::generator(j + 1))) return false;
    }
  }
  return true;
}

void ensure_convention() {
  static const bool ok = convention_ok();
  if (!ok) {
    throw std::logic_error(
        "to_pl: composition convention does not satisfy the defining relations");
  }
}

}  // namespace

FWord shift(const FWord& w, std::uint32_t k) {
  std::vector<Letter> letters = w.word.letters();
  for (Letter& l : letters) l.index += k;
  return FWord{Word::reduce(letters)};
}

FWord normal_form(const FWord& w) {
  NormalBuilder builder;
  for (const Letter& l : w.word.letters()) {
    std::int64_t reps = l.exponent < 0 ? -l.exponent : l.exponent;
    for (std::int64_t t = 0; t < reps; ++t) builder.append(l.index, l.exponent > 0);
  }
  builder.trim();
  return FWord{builder.to_word()};
}

PLMap to_pl(const FWord& w) {
  ensure_convention();
  PLMap acc = PLMap::identity();
  for (const Letter& l : w.word.letters()) {
    PLMap gen = PLMap::generator(l.index);
    if (l.exponent < 0) gen = invert_pl(gen);
    std::int64_t reps = l.exponent < 0 ? -l.exponent : l.exponent;
    for (std::int64_t t = 0; t < reps; ++t) acc = compose(acc, gen);
  }
  return acc;
}

bool words_equal(const FWord& u, const FWord& v) {
  bool by_normal_form = normal_form(u) == normal_form(v);
  bool by_pl = equal_pl(to_pl(u), to_pl(v));
  if (by_normal_form != by_pl) {
    throw std::logic_error("words_equal: normal-form and PL deciders disagree");
  }
  return by_normal_form;
}

bool verify_presentation(std::uint32_t depth) {
  for (std::uint32_t i = 0; i < depth; ++i) {
    for (std::uint32_t j = i + 1; j <= depth; ++j) {
      FWord lhs{Word::reduce({Letter{i, -1}, Letter{j, 1}, Letter{i, 1}})};
      FWord rhs{Word::letter(j + 1, 1)};
      if (!equal_pl(to_pl(lhs), to_pl(rhs))) return false;
    }
  }
  return true;
}

bool commuting_family_check(std::uint32_t i_max, std::uint32_t exp_bound) {
  std::vector<FWord> c;
  for (std::uint32_t i = 0; i <= i_max; ++i) {
    c.push_back(FWord{Word::reduce({Letter{3 * i, -1}, Letter{3 * i + 1, 1}})});
  }
  for (std::uint32_t i = 0; i <= i_max; ++i) {
    for (std::uint32_t j = i + 1; j <= i_max; ++j) {
      FWord ij{multiply(c[i].word, c[j].word)};
      FWord ji{multiply(c[j].word, c[i].word)};
      if (!words_equal(ij, ji)) return false;
    }
  }
  // Every nontrivial bounded product must be nontrivial in F.
  std::vector<std::int64_t> exps(i_max + 1, -static_cast<std::int64_t>(exp_bound));
  const FWord id{};
  while (true) {
    bool all_zero = std::all_of(exps.begin(), exps.end(),
                                [](std::int64_t e) { return e == 0; });
    if (!all_zero) {
      Word prod;
      for (std::uint32_t t = 0; t <= i_max; ++t) {
        prod = multiply(prod, power(c[t].word, exps[t]));
      }
      if (words_equal(FWord{prod}, id)) return false;
    }
    std::size_t pos = 0;
    while (pos < exps.size() && exps[pos] == static_cast<std::int64_t>(exp_bound)) {
      exps[pos] = -static_cast<std::int64_t>(exp_bound);
      ++pos;
    }
    if (pos == exps.size()) break;
    ++exps[pos];
  }
  return true;
}

std::optional<StandardForm> standard_form_check(const FWord& w) {
  const auto& letters = w.word.letters();
  if (letters.empty()) return std::nullopt;
  const Letter& head = letters.front();
  if (head.index > 1) return std::nullopt;
  std::uint32_t i = head.index;
  for (std::size_t t = 1; t < letters.size(); ++t) {
    if (letters[t].index < i + 1) return std::nullopt;
  }
  std::vector<Letter> tail(letters.begin() + 1, letters.end());
  for (Letter& l : tail) l.index -= i + 1;
  return StandardForm{i, head.exponent, FWord{Word::reduce(tail)}};
}

FWord render(const StandardForm& form) {
  Word head = Word::letter(form.i, form.n);
  return FWord{multiply(head, shift(form.b, form.i + 1).word)};
}

std::optional<std::pair<FWord, StandardForm>> standard_form_search(
    const FWord& w, std::uint32_t radius) {
  const FWord id{};
  if (words_equal(w, id)) {
    throw std::invalid_argument("standard_form_search: word is trivial in F");
  }
  auto [core, peel] = cyclic_reduce(w.word);
  const Word peel_inv = invert(peel);

  // Reduced conjugator candidates over a_0..a_radius in length-then-lex
  // order, identity first.
  std::vector<std::vector<Letter>> frontier{{}};
  for (std::uint32_t len = 0; len <= radius; ++len) {
    for (const auto& cand : frontier) {
      Word g = Word::reduce(cand);
      FWord conjugated{conjugate(core, g)};
      auto form = standard_form_check(normal_form(conjugated));
      if (form.has_value()) {
        FWord total{multiply(peel_inv, g)};
        if (!words_equal(FWord{conjugate(w.word, total.word)}, render(*form))) {
          throw std::logic_error("standard_form_search: certification failed");
        }
        return std::make_pair(total, *form);
      }
    }
    if (len == radius) break;
    std::vector<std::vector<Letter>> next;
    for (const auto& cand : frontier) {
      for (std::uint32_t idx = 0; idx <= radius; ++idx) {
        for (std::int64_t e : {std::int64_t{1}, std::int64_t{-1}}) {
          if (!cand.empty() && cand.back().index == idx && cand.back().exponent == -e) {
            continue;
          }
          auto ext = cand;
          ext.push_back(Letter{idx, e});
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace idemsplit
