#include <doctest.h>

#include <stdexcept>
#include <map>
#include <vector>

#include "idemsplit/graph_pi1.hpp"
#include "idemsplit/textio.hpp"

using namespace idemsplit;

namespace {

GraphComplex wedge2() {
  return GraphComplex(1, {GraphEdge{0, 0, 0}, GraphEdge{1, 0, 0}}, {}, 0);
}

GraphComplex theta() {
  return GraphComplex(2, {GraphEdge{0, 0, 1}, GraphEdge{1, 0, 1}, GraphEdge{2, 0, 1}}, {0},
                      std::nullopt);
}

EdgePath ep(const GraphComplex& g, const char* text) { return parse_edge_path(text, g); }

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(wedge2()));
  CHECK(validate(theta()));
  // Two parallel base edges close a cycle.
  GraphComplex bad(2, {GraphEdge{0, 0, 1}, GraphEdge{1, 0, 1}, GraphEdge{2, 0, 1}}, {0, 1},
                   std::nullopt);
  CHECK_FALSE(validate(bad));
  // A base self-loop is a cycle too.
  GraphComplex loop_base(1, {GraphEdge{0, 0, 0}}, {0}, std::nullopt);
  CHECK_FALSE(validate(loop_base));
  // Disconnected ambient graph.
  GraphComplex disconnected(3, {GraphEdge{0, 0, 1}}, {0}, std::nullopt);
  CHECK_FALSE(validate(disconnected));
  // Empty base.
  GraphComplex no_base(1, {GraphEdge{0, 0, 0}}, {}, std::nullopt);
  CHECK_FALSE(validate(no_base));
  // Base in two pieces.
  GraphComplex split_base(4,
                          {GraphEdge{0, 0, 1}, GraphEdge{1, 2, 3}, GraphEdge{2, 1, 2},
                           GraphEdge{3, 3, 0}},
                          {0, 1}, std::nullopt);
  CHECK_FALSE(validate(split_base));
}

TEST_CASE("graph construction rejects malformed data") {
  CHECK_THROWS_AS(GraphComplex(2, {GraphEdge{0, 0, 5}}, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(GraphComplex(2, {GraphEdge{0, 0, 1}, GraphEdge{0, 1, 0}}, {}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(GraphComplex(2, {GraphEdge{0, 0, 1}}, {7}, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(GraphComplex(0, {}, {}, std::nullopt), std::invalid_argument);
}

TEST_CASE("class_of examples") {
  GraphComplex g = theta();
  CHECK(class_of(g, {}).is_identity());
  CHECK(class_of(g, ep(g, "e0")).is_identity());
  CHECK(class_of(g, ep(g, "e0 e0^-1")).is_identity());
  RelClass c = class_of(g, ep(g, "e1 e2^-1"));
  CHECK(c.canonical() == ep(g, "e1 e2^-1"));
  // Base prefix and suffix are stripped.
  CHECK(class_of(g, ep(g, "e0 e0^-1 e1 e2^-1 e0 e0^-1")).canonical() == ep(g, "e1 e2^-1"));
  CHECK(class_of(g, ep(g, "e0^-1 e1")).canonical() == ep(g, "e1"));
}

TEST_CASE("class_of rejects endpoints outside the base") {
  GraphComplex g(3, {GraphEdge{0, 0, 1}, GraphEdge{1, 1, 2}, GraphEdge{2, 2, 0}}, {0},
                 std::nullopt);
  REQUIRE(validate(g));
  CHECK_THROWS_AS(class_of(g, ep(g, "e1")), std::invalid_argument);
  CHECK_THROWS_AS(class_of(g, ep(g, "e2^-1")), std::invalid_argument);
  // A loop through the non-base vertex with both endpoints in A is fine.
  CHECK(class_of(g, ep(g, "e0 e1 e2")).canonical() == ep(g, "e1 e2"));
}

TEST_CASE("rel_product examples") {
  GraphComplex g = theta();
  RelClass id;
  RelClass p = class_of(g, ep(g, "e1 e0^-1"));
  RelClass q = class_of(g, ep(g, "e2 e0^-1"));
  CHECK(rel_product(g, id, q) == q);
  CHECK(rel_product(g, p, id) == p);
  CHECK(rel_product(g, p, rel_inverse(g, p)).is_identity());
  CHECK(rel_product(g, p, q).canonical() == ep(g, "e1 e0^-1 e2"));
}

TEST_CASE("enumerate_classes counts") {
  // A graph with no edges outside the base has only the identity class.
  GraphComplex segment(2, {GraphEdge{0, 0, 1}}, {0}, std::nullopt);
  CHECK(enumerate_classes(segment, 5).size() == 1);

  GraphComplex w = wedge2();
  CHECK(enumerate_classes(w, 1).size() == 5);
  CHECK(enumerate_classes(w, 2).size() == 17);
  CHECK(enumerate_classes(w, 3).size() == 53);

  GraphComplex t = theta();
  CHECK(enumerate_classes(t, 1).size() == 5);
  CHECK(enumerate_classes(t, 2).size() == 9);
  CHECK(enumerate_classes(t, 3).size() == 21);
}

TEST_CASE("every enumerated class is hit by a based loop") {
  GraphComplex t = theta();
  for (std::uint32_t x0 : t.base_vertices()) {
    std::set<RelClass> hit;
    for (const EdgePath& l : enumerate_loops(t, x0, 4)) hit.insert(class_of(t, l));
    for (const RelClass& c : enumerate_classes(t, 2)) {
      CHECK(hit.contains(c));
    }
  }
}

TEST_CASE("basepoint iso check") {
  GraphComplex w = wedge2();
  CHECK(basepoint_iso_check(w, 0, 4));
  GraphComplex t = theta();
  CHECK(basepoint_iso_check(t, 0, 5));
  CHECK(basepoint_iso_check(t, 1, 5));
  CHECK_THROWS_AS(basepoint_iso_check(theta(), 1u << 20, 3), std::invalid_argument);
}

TEST_CASE("group axioms on the enumerated window") {
  for (const GraphComplex& g : {wedge2(), theta()}) {
    std::set<RelClass> window = enumerate_classes(g, 3);
    RelClass id;
    std::vector<RelClass> classes(window.begin(), window.end());
    for (const RelClass& c : classes) {
      CHECK(rel_product(g, id, c) == c);
      CHECK(rel_product(g, c, id) == c);
      RelClass inv = rel_inverse(g, c);
      CHECK(window.contains(inv));
      CHECK(rel_product(g, c, inv).is_identity());
      CHECK(rel_product(g, inv, c).is_identity());
    }
    for (const RelClass& a : classes) {
      for (const RelClass& b : classes) {
        for (const RelClass& c : classes) {
          CHECK(rel_product(g, rel_product(g, a, b), c) ==
                rel_product(g, a, rel_product(g, b, c)));
        }
      }
    }
  }
}

namespace {

// Brute-force equivalence: p ~ q when A-paths u, v with matching endpoints
// make v^-1 p u reduce to q. In the theta graph the reduced A-paths are
// the empty paths and e0^{+-1}.
bool oracle_equivalent(const GraphComplex& g, const EdgePath& p, const EdgePath& q) {
  std::vector<EdgePath> a_paths = {{}, {SignedEdge{0, true}}, {SignedEdge{0, false}}};
  for (const EdgePath& u : a_paths) {
    for (const EdgePath& v : a_paths) {
      // Glue v^-1 . p . u and compare with q after reduction; gluings with
      // mismatched endpoints fail the incidence check and are skipped.
      EdgePath lhs;
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        lhs.push_back(SignedEdge{it->id, !it->forward});
      }
      lhs.insert(lhs.end(), p.begin(), p.end());
      lhs.insert(lhs.end(), u.begin(), u.end());
      try {
        if (reduce_path(g, lhs) == reduce_path(g, q)) return true;
      } catch (const std::invalid_argument&) {
        continue;
      }
    }
  }
  return false;
}

void all_paths_from(const GraphComplex& g, std::uint32_t at, std::uint32_t remaining,
                    EdgePath& cur, std::vector<EdgePath>& out) {
  out.push_back(cur);
  if (remaining == 0) return;
  for (const SignedEdge& e : g.out_edges(at)) {
    if (!cur.empty() && cur.back().id == e.id && cur.back().forward != e.forward) continue;
    cur.push_back(e);
    all_paths_from(g, g.target(e), remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("canonicalization matches brute-force equivalence on the theta graph") {
  GraphComplex g = theta();
  std::vector<EdgePath> paths;
  for (std::uint32_t start : {0u, 1u}) {
    EdgePath cur;
    all_paths_from(g, start, 5, cur, paths);
  }
  // Group by class; equivalence must hold exactly within groups.
  std::map<RelClass, std::vector<const EdgePath*>> clusters;
  for (const EdgePath& p : paths) clusters[class_of(g, p)].push_back(&p);

  for (const auto& [cls, members] : clusters) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        CHECK(oracle_equivalent(g, *members[a], *members[b]));
      }
    }
  }
  std::vector<const EdgePath*> reps;
  for (const auto& [cls, members] : clusters) reps.push_back(members.front());
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      CHECK_FALSE(oracle_equivalent(g, *reps[a], *reps[b]));
    }
  }
}
