#include "idemsplit/verify.hpp"

#include <algorithm>
#include <exception>

#include "idemsplit/endo.hpp"
#include "idemsplit/graph_pi1.hpp"
#include "idemsplit/sampling.hpp"
#include "idemsplit/thompson.hpp"
#include "idemsplit/word.hpp"

namespace idemsplit {

namespace {

struct Scale {
  std::uint32_t word_pairs;
  std::uint32_t witnesses;
  std::uint32_t kernel_instances;
  std::uint32_t inner_instances;
};

Scale scale_for(Profile p) {
  if (p == Profile::kStandard) return Scale{30000, 200, 50, 200};
  return Scale{10000, 100, 20, 100};
}

// The wedge of two loops at a single vertex; the base is the vertex.
GraphComplex wedge_graph() {
  return GraphComplex(1, {GraphEdge{0, 0, 0}, GraphEdge{1, 0, 0}}, {}, 0);
}

// Two vertices joined by three parallel edges; the base is edge 0.
GraphComplex theta_graph() {
  return GraphComplex(2, {GraphEdge{0, 0, 1}, GraphEdge{1, 0, 1}, GraphEdge{2, 0, 1}}, {0},
                      std::nullopt);
}

bool check_presentation() { return verify_presentation(10); }

bool check_dual_oracle(std::uint64_t seed, std::uint32_t pairs) {
  Rng rng(seed);
  for (std::uint32_t t = 0; t < pairs; ++t) {
    FWord u = sample_fword(rng, 16, 8);
    FWord v;
    if (t % 2 == 0) {
      v = sample_fword(rng, 16, 8);
    } else {
      // A word equal to u in the group: insert a defining-relation cell
      // and conjugate by a random element.
      std::uniform_int_distribution<std::uint32_t> i_dist(0, 7);
      std::uint32_t i = i_dist(rng);
      std::uniform_int_distribution<std::uint32_t> j_dist(i + 1, 8);
      std::uint32_t j = j_dist(rng);
      Word cell = Word::reduce({Letter{i, -1}, Letter{j, 1}, Letter{i, 1}, Letter{j + 1, -1}});
      Word g = sample_reduced_word(rng, 4, 8);
      v = FWord{multiply(u.word, conjugate(cell, g))};
    }
    // words_equal throws std::logic_error if the two deciders disagree.
    bool eq = words_equal(u, v);
    if (t % 2 == 1 && !eq) return false;
  }
  return true;
}

bool check_commuting_family() { return commuting_family_check(2, 2); }

bool check_conjugation_law(std::uint64_t seed, std::uint32_t witnesses) {
  // The shift instance inside F itself: with x_t = a_t, conjugation by
  // a_i^k advances the shift power by k on every generator.
  for (std::uint32_t m = 1; m <= 5; ++m) {
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t k = 1; k <= 3; ++k) {
        for (std::uint32_t j = 0; j <= 8; ++j) {
          FWord lhs{conjugate(Word::letter(j + m, 1), Word::letter(i, k))};
          FWord rhs{Word::letter(j + m + k, 1)};
          if (!words_equal(lhs, rhs)) return false;
        }
      }
    }
  }
  Rng rng(seed);
  for (std::uint32_t t = 0; t < witnesses; ++t) {
    std::uniform_int_distribution<std::uint32_t> rank_dist(1, 3);
    SampledWitness sw = sample_witness(rng, rank_dist(rng), 6);
    for (std::uint32_t m = 1; m <= 5; ++m) {
      for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t k = 1; k <= 3; ++k) {
          if (!verify_conjugation_identity(sw.witness, m, i, k)) return false;
        }
      }
    }
  }
  return true;
}

bool check_idempotent_construction(std::uint64_t seed, std::uint32_t witnesses) {
  Rng rng(seed);
  for (std::uint32_t t = 0; t < witnesses; ++t) {
    std::uniform_int_distribution<std::uint32_t> rank_dist(1, 3);
    SampledWitness sw = sample_witness(rng, rank_dist(rng), 6);
    FreeEndo g = make_idempotent_from_preimage(sw.witness, sw.preimage_y);
    if (compose(g, g) != g) return false;
    for (std::uint32_t s = 0; s < g.rank(); ++s) {
      Word expect = multiply(multiply(sw.preimage_y, sw.witness.endo().image(s)),
                             invert(sw.preimage_y));
      if (g.image(s) != expect) return false;
    }
  }
  return true;
}

bool check_splitting_pipeline(std::uint64_t seed, std::uint32_t instances) {
  // The worked instance: conjugation by w on rank 2, kernel witness
  // a0 a1^-1; the pipeline must return power 1, conjugator w and the
  // identity endomorphism.
  {
    Word w = multiply(Word::letter(0, 1), Word::letter(1, 1));
    ConjIdemWitness wit(FreeEndo::inner(2, w), w);
    FWord kernel{Word::reduce({Letter{0, 1}, Letter{1, -1}})};
    SplitResult res = kernel_witness_to_splitting(wit, kernel);
    if (res.power != 1) return false;
    if (res.conjugator != w) return false;
    if (res.idempotent != FreeEndo::identity(2)) return false;
  }
  Rng rng(seed);
  std::uint32_t done = 0;
  while (done < instances) {
    std::uniform_int_distribution<std::uint32_t> rank_dist(2, 3);
    SampledWitness sw = sample_witness(rng, rank_dist(rng), 5);
    FWord kernel = sample_kernel_word(rng);
    SplitResult res = kernel_witness_to_splitting(sw.witness, kernel);
    const FreeEndo& f = sw.witness.endo();
    FreeEndo fn = power(f, res.power);
    if (compose(res.idempotent, res.idempotent) != res.idempotent) return false;
    for (std::uint32_t s = 0; s < f.rank(); ++s) {
      Word expect = multiply(multiply(res.conjugator, fn.image(s)), invert(res.conjugator));
      if (res.idempotent.image(s) != expect) return false;
    }
    ++done;
  }
  return true;
}

bool check_inner_detection(std::uint64_t seed, std::uint32_t instances) {
  Rng rng(seed);
  for (std::uint32_t t = 0; t < instances; ++t) {
    SampledInner si = sample_inner(rng, 3, 6);
    InnerResult res = is_inner(si.endo, 8);
    if (res.verdict != InnerVerdict::kFound || !res.conjugator.has_value()) return false;
    for (std::uint32_t s = 0; s < 3; ++s) {
      if (si.endo.image(s) != conjugate(Word::letter(s, 1), *res.conjugator)) return false;
    }
  }
  // All-to-identity: definitive negative.
  {
    FreeEndo f(3, {Word(), Word(), Word()});
    if (is_inner(f, 8).verdict != InnerVerdict::kNotInner) return false;
  }
  // Generator swap: definitive negative.
  {
    FreeEndo f(3, {Word::letter(1, 1), Word::letter(0, 1), Word::letter(2, 1)});
    if (is_inner(f, 8).verdict != InnerVerdict::kNotInner) return false;
  }
  return true;
}

bool group_axioms_on_window(const GraphComplex& g) {
  std::set<RelClass> window3 = enumerate_classes(g, 3);
  std::vector<RelClass> classes(window3.begin(), window3.end());
  const RelClass id{};
  for (const RelClass& c : classes) {
    if (rel_product(g, id, c) != c || rel_product(g, c, id) != c) return false;
    RelClass inv = rel_inverse(g, c);
    if (inv.canonical().size() != c.canonical().size()) return false;
    if (!rel_product(g, c, inv).is_identity()) return false;
    if (!rel_product(g, inv, c).is_identity()) return false;
  }
  for (const RelClass& a : classes) {
    for (const RelClass& b : classes) {
      for (const RelClass& c : classes) {
        if (rel_product(g, rel_product(g, a, b), c) !=
            rel_product(g, a, rel_product(g, b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

// The two basepoint correspondences agree: carrying a loop at u over to v
// by the base-tree path does not change its class, so the triangle
// pi1(X,u) -> pi1(X,v) -> pi1(X,A) commutes with the direct map.
bool basepoints_agree(const GraphComplex& g, std::uint32_t u, std::uint32_t v,
                      std::uint32_t max_len) {
  EdgePath to_u = base_path(g, v, u);
  EdgePath back = base_path(g, u, v);
  for (const EdgePath& l : enumerate_loops(g, u, max_len)) {
    EdgePath moved = to_u;
    moved.insert(moved.end(), l.begin(), l.end());
    moved.insert(moved.end(), back.begin(), back.end());
    if (class_of(g, moved) != class_of(g, l)) return false;
  }
  return true;
}

bool check_graph_iso() {
  GraphComplex wedge = wedge_graph();
  GraphComplex theta = theta_graph();
  if (!validate(wedge) || !validate(theta)) return false;
  for (std::uint32_t v : wedge.base_vertices()) {
    if (!basepoint_iso_check(wedge, v, 6)) return false;
  }
  for (std::uint32_t v : theta.base_vertices()) {
    if (!basepoint_iso_check(theta, v, 6)) return false;
  }
  if (!group_axioms_on_window(wedge) || !group_axioms_on_window(theta)) return false;
  auto it = theta.base_vertices().begin();
  std::uint32_t u = *it++;
  std::uint32_t v = *it;
  return basepoints_agree(theta, u, v, 6) && basepoints_agree(theta, v, u, 6);
}

bool check_ball_counts() {
  GraphComplex wedge = wedge_graph();
  // Free group of rank 2: the ball of radius L has 1 + sum over
  // 1 <= t <= L of 4*3^(t-1) elements.
  std::uint64_t closed = 1;
  std::uint64_t layer = 4;
  const std::uint64_t frozen[3] = {5, 17, 53};
  for (std::uint32_t len = 1; len <= 3; ++len) {
    closed += layer;
    std::uint64_t got = enumerate_classes(wedge, len).size();
    if (got != closed || got != frozen[len - 1]) return false;
    layer *= 3;
  }
  return true;
}

template <typename Fn>
CheckResult run_check(const std::string& name, const std::string& detail, Fn fn) {
  CheckResult r{name, false, detail};
  try {
    r.passed = fn();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification(Profile profile, std::uint64_t seed) {
  const Scale sc = scale_for(profile);
  std::vector<CheckResult> out;
  out.push_back(run_check("presentation-relations",
                          "rho(a_i^-1 a_j a_i) == rho(a_{j+1}) for 0 <= i < j <= 10",
                          check_presentation));
  out.push_back(run_check(
      "word-problem-dual-oracle",
      std::to_string(sc.word_pairs) + " seeded pairs, len <= 16, index <= 8",
      [&] { return check_dual_oracle(seed ^ 0x1001, sc.word_pairs); }));
  out.push_back(run_check("commuting-family-independence",
                          "c_i = a_{3i}^-1 a_{3i+1}, i <= 2: commute, 124 products nontrivial",
                          check_commuting_family));
  out.push_back(run_check(
      "conjugation-identity-law",
      "shift instance and " + std::to_string(sc.witnesses) +
          " witnesses, i < m <= 5, k <= 3",
      [&] { return check_conjugation_law(seed ^ 0x1002, sc.witnesses); }));
  out.push_back(run_check(
      "idempotent-from-preimage",
      std::to_string(sc.witnesses) + " witnesses with preimage: g o g == g",
      [&] { return check_idempotent_construction(seed ^ 0x1003, sc.witnesses); }));
  out.push_back(run_check(
      "splitting-pipeline",
      "worked instance and " + std::to_string(sc.kernel_instances) +
          " seeded kernel witnesses",
      [&] { return check_splitting_pipeline(seed ^ 0x1004, sc.kernel_instances); }));
  out.push_back(run_check(
      "inner-detection",
      std::to_string(sc.inner_instances) + " inner instances plus definitive negatives",
      [&] { return check_inner_detection(seed ^ 0x1005, sc.inner_instances); }));
  out.push_back(run_check("graph-basepoint-iso",
                          "wedge and theta, every base vertex, max_len 6, group axioms",
                          check_graph_iso));
  out.push_back(run_check("graph-ball-counts", "wedge balls of radius 1, 2, 3: 5, 17, 53",
                          check_ball_counts));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace idemsplit
