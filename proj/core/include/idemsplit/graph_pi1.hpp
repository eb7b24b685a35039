#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace idemsplit {

struct GraphEdge {
  std::uint32_t id = 0;
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
};

// An oriented traversal of one edge: forward runs tail -> head.
struct SignedEdge {
  std::uint32_t id = 0;
  bool forward = true;

  bool operator==(const SignedEdge&) const = default;
  auto operator<=>(const SignedEdge&) const = default;
};

// Consecutively incident edges; reduced form has no immediate backtrack.
using EdgePath = std::vector<SignedEdge>;

// Finite multigraph with a distinguished base subgraph A given by edge
// ids; when A has no edges it is the single vertex base_vertex. Parallel
// edges and self-loops are allowed.
class GraphComplex {
 public:
  GraphComplex(std::uint32_t vertex_count, std::vector<GraphEdge> edges,
               std::set<std::uint32_t> base_edge_ids,
               std::optional<std::uint32_t> base_vertex = std::nullopt);

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::set<std::uint32_t>& base_edge_ids() const { return base_edge_ids_; }
  std::optional<std::uint32_t> base_vertex() const { return base_vertex_; }

  const GraphEdge& edge(std::uint32_t id) const;
  bool is_base_edge(std::uint32_t id) const { return base_edge_ids_.contains(id); }

  std::uint32_t source(const SignedEdge& e) const;
  std::uint32_t target(const SignedEdge& e) const;

  // Vertices of A: endpoints of base edges, or the lone base vertex.
  const std::set<std::uint32_t>& base_vertices() const { return base_vertices_; }

  // Signed edges leaving v, ordered by (id, forward first).
  const std::vector<SignedEdge>& out_edges(std::uint32_t v) const;

 private:
  std::uint32_t vertex_count_;
  std::vector<GraphEdge> edges_;
  std::set<std::uint32_t> base_edge_ids_;
  std::optional<std::uint32_t> base_vertex_;
  std::set<std::uint32_t> base_vertices_;
  std::vector<std::vector<SignedEdge>> adjacency_;
};

// Whole-graph invariants: the graph is connected and A is a non-empty
// subtree (connected and acyclic). Structural well-formedness (edge
// endpoints in range, known ids) is enforced at construction instead.
bool validate(const GraphComplex& g);

// Backtrack elimination; throws std::invalid_argument on non-incident
// consecutive edges.
EdgePath reduce_path(const GraphComplex& g, const EdgePath& p);

// The unique reduced path inside the base subtree between two base
// vertices.
EdgePath base_path(const GraphComplex& g, std::uint32_t from, std::uint32_t to);

// A class of paths with endpoints in A, up to pre/post-composition with
// paths in A. Held by its canonical representative: reduced, with the
// maximal base prefix and suffix stripped.
class RelClass {
 public:
  RelClass() = default;  // the identity class
  const EdgePath& canonical() const { return canonical_; }
  bool is_identity() const { return canonical_.empty(); }

  bool operator==(const RelClass&) const = default;
  auto operator<=>(const RelClass&) const = default;

 private:
  friend RelClass class_of(const GraphComplex&, const EdgePath&);
  explicit RelClass(EdgePath canonical) : canonical_(std::move(canonical)) {}
  EdgePath canonical_;
};

// Canonical class of p. Requires both endpoints of p in A.
RelClass class_of(const GraphComplex& g, const EdgePath& p);

// [p] * [q]: representative of p, the unique reduced A-path bridging to
// q's start, then the representative of q, canonicalized.
RelClass rel_product(const GraphComplex& g, const RelClass& p, const RelClass& q);

// Inverse class (reversed representative).
RelClass rel_inverse(const GraphComplex& g, const RelClass& p);

// All distinct classes whose canonical representative has length <= max_len.
std::set<RelClass> enumerate_classes(const GraphComplex& g, std::uint32_t max_len);

// Checks that [loop at x0] -> class is injective and multiplicative on all
// reduced loops of length <= max_len, and that every class of the
// enumerated window is hit by a loop of length <= max_len + 2*diam(A).
bool basepoint_iso_check(const GraphComplex& g, std::uint32_t x0, std::uint32_t max_len);

// Reduced loops at x0 of length <= max_len, lexicographic order.
std::vector<EdgePath> enumerate_loops(const GraphComplex& g, std::uint32_t x0,
                                      std::uint32_t max_len);

}  // namespace idemsplit
