#include "idemsplit/graph_pi1.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace idemsplit {

namespace {

struct UnionFind {
  explicit UnionFind(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // Returns false if u and v were already joined.
  bool unite(std::uint32_t u, std::uint32_t v) {
    std::uint32_t ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

void require_valid(const GraphComplex& g) {
  if (!validate(g)) {
    throw std::invalid_argument("graph: connectivity or base-subtree invariant fails");
  }
}

}  // namespace

// Unique reduced path inside the base subtree from u to v (BFS over base
// edges). Both must be base vertices of a validated graph.
EdgePath base_path(const GraphComplex& g, std::uint32_t u, std::uint32_t v) {
  if (u == v) return {};
  std::map<std::uint32_t, SignedEdge> parent_edge;
  std::queue<std::uint32_t> queue;
  queue.push(u);
  std::set<std::uint32_t> seen{u};
  while (!queue.empty() && !seen.contains(v)) {
    std::uint32_t cur = queue.front();
    queue.pop();
    for (const SignedEdge& e : g.out_edges(cur)) {
      if (!g.is_base_edge(e.id)) continue;
      std::uint32_t nxt = g.target(e);
      if (seen.contains(nxt)) continue;
      seen.insert(nxt);
      parent_edge[nxt] = e;
      queue.push(nxt);
    }
  }
  if (!seen.contains(v)) {
    throw std::invalid_argument("graph: base subgraph does not connect the endpoints");
  }
  EdgePath rev;
  for (std::uint32_t cur = v; cur != u;) {
    SignedEdge e = parent_edge.at(cur);
    rev.push_back(e);
    cur = g.source(e);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

namespace {

std::uint32_t base_diameter(const GraphComplex& g) {
  std::uint32_t diam = 0;
  for (std::uint32_t u : g.base_vertices()) {
    for (std::uint32_t v : g.base_vertices()) {
      if (u < v) {
        diam = std::max(diam, static_cast<std::uint32_t>(base_path(g, u, v).size()));
      }
    }
  }
  return diam;
}

}  // namespace

GraphComplex::GraphComplex(std::uint32_t vertex_count, std::vector<GraphEdge> edges,
                           std::set<std::uint32_t> base_edge_ids,
                           std::optional<std::uint32_t> base_vertex)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      base_edge_ids_(std::move(base_edge_ids)),
      base_vertex_(base_vertex) {
  if (vertex_count_ == 0) throw std::invalid_argument("graph: need at least one vertex");
  std::set<std::uint32_t> ids;
  for (const GraphEdge& e : edges_) {
    if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (!ids.insert(e.id).second) {
      throw std::invalid_argument("graph: duplicate edge id");
    }
  }
  for (std::uint32_t id : base_edge_ids_) {
    if (!ids.contains(id)) throw std::invalid_argument("graph: unknown base edge id");
  }
  if (base_vertex_.has_value() && *base_vertex_ >= vertex_count_) {
    throw std::invalid_argument("graph: base vertex out of range");
  }
  for (const GraphEdge& e : edges_) {
    if (is_base_edge(e.id)) {
      base_vertices_.insert(e.tail);
      base_vertices_.insert(e.head);
    }
  }
  if (base_vertices_.empty() && base_vertex_.has_value()) {
    base_vertices_.insert(*base_vertex_);
  }
  adjacency_.assign(vertex_count_, {});
  for (const GraphEdge& e : edges_) {
    adjacency_[e.tail].push_back(SignedEdge{e.id, true});
    adjacency_[e.head].push_back(SignedEdge{e.id, false});
  }
  for (auto& out : adjacency_) {
    std::sort(out.begin(), out.end(), [](const SignedEdge& a, const SignedEdge& b) {
      if (a.id != b.id) return a.id < b.id;
      return a.forward && !b.forward;
    });
  }
}

const GraphEdge& GraphComplex::edge(std::uint32_t id) const {
  for (const GraphEdge& e : edges_) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("graph: unknown edge id");
}

std::uint32_t GraphComplex::source(const SignedEdge& e) const {
  const GraphEdge& rec = edge(e.id);
  return e.forward ? rec.tail : rec.head;
}

std::uint32_t GraphComplex::target(const SignedEdge& e) const {
  const GraphEdge& rec = edge(e.id);
  return e.forward ? rec.head : rec.tail;
}

const std::vector<SignedEdge>& GraphComplex::out_edges(std::uint32_t v) const {
  if (v >= vertex_count_) throw std::out_of_range("graph: vertex out of range");
  return adjacency_[v];
}

bool validate(const GraphComplex& g) {
  // X connected.
  UnionFind uf(g.vertex_count());
  for (const GraphEdge& e : g.edges()) uf.unite(e.tail, e.head);
  for (std::uint32_t v = 1; v < g.vertex_count(); ++v) {
    if (uf.find(v) != uf.find(0)) return false;
  }
  // A non-empty.
  if (g.base_vertices().empty()) return false;
  // A acyclic (a self-loop or a repeated join closes a cycle) ...
  UnionFind base_uf(g.vertex_count());
  for (const GraphEdge& e : g.edges()) {
    if (g.is_base_edge(e.id) && !base_uf.unite(e.tail, e.head)) return false;
  }
  // ... and connected.
  std::uint32_t root = base_uf.find(*g.base_vertices().begin());
  for (std::uint32_t v : g.base_vertices()) {
    if (base_uf.find(v) != root) return false;
  }
  // When A is specified both ways, the lone vertex must lie in A.
  if (g.base_vertex().has_value() && !g.base_edge_ids().empty() &&
      !g.base_vertices().contains(*g.base_vertex())) {
    return false;
  }
  return true;
}

EdgePath reduce_path(const GraphComplex& g, const EdgePath& p) {
  EdgePath out;
  std::optional<std::uint32_t> cursor;
  for (const SignedEdge& e : p) {
    if (cursor.has_value() && g.source(e) != *cursor) {
      throw std::invalid_argument("path: consecutive edges are not incident");
    }
    cursor = g.target(e);
    if (!out.empty() && out.back().id == e.id && out.back().forward != e.forward) {
      out.pop_back();
    } else {
      out.push_back(e);
    }
  }
  return out;
}

RelClass class_of(const GraphComplex& g, const EdgePath& p) {
  require_valid(g);
  if (!p.empty()) {
    if (!g.base_vertices().contains(g.source(p.front())) ||
        !g.base_vertices().contains(g.target(p.back()))) {
      throw std::invalid_argument("class_of: path endpoint not in the base subgraph");
    }
  }
  EdgePath r = reduce_path(g, p);
  std::size_t lo = 0, hi = r.size();
  while (lo < hi && g.is_base_edge(r[lo].id)) ++lo;
  while (hi > lo && g.is_base_edge(r[hi - 1].id)) --hi;
  return RelClass(EdgePath(r.begin() + static_cast<std::ptrdiff_t>(lo),
                           r.begin() + static_cast<std::ptrdiff_t>(hi)));
}

RelClass rel_product(const GraphComplex& g, const RelClass& p, const RelClass& q) {
  require_valid(g);
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  EdgePath joined = p.canonical();
  EdgePath bridge = base_path(g, g.target(p.canonical().back()), g.source(q.canonical().front()));
  joined.insert(joined.end(), bridge.begin(), bridge.end());
  joined.insert(joined.end(), q.canonical().begin(), q.canonical().end());
  return class_of(g, joined);
}

RelClass rel_inverse(const GraphComplex& g, const RelClass& p) {
  EdgePath rev;
  rev.reserve(p.canonical().size());
  for (auto it = p.canonical().rbegin(); it != p.canonical().rend(); ++it) {
    rev.push_back(SignedEdge{it->id, !it->forward});
  }
  return class_of(g, rev);
}

namespace {

// Depth-first growth of reduced paths; reports every visited path through
// `emit` (which sees the path and its current endpoint).
template <typename Emit>
void grow_paths(const GraphComplex& g, std::uint32_t at, std::uint32_t remaining,
                EdgePath& path, const Emit& emit) {
  emit(path, at);
  if (remaining == 0) return;
  for (const SignedEdge& e : g.out_edges(at)) {
    if (!path.empty() && path.back().id == e.id && path.back().forward != e.forward) {
      continue;  // immediate backtrack
    }
    path.push_back(e);
    grow_paths(g, g.target(e), remaining - 1, path, emit);
    path.pop_back();
  }
}

}  // namespace

std::set<RelClass> enumerate_classes(const GraphComplex& g, std::uint32_t max_len) {
  require_valid(g);
  std::set<RelClass> out;
  out.insert(RelClass{});
  for (std::uint32_t start : g.base_vertices()) {
    EdgePath path;
    grow_paths(g, start, max_len, path, [&](const EdgePath& p, std::uint32_t at) {
      if (p.empty()) return;
      if (g.is_base_edge(p.front().id) || g.is_base_edge(p.back().id)) return;
      if (!g.base_vertices().contains(at)) return;
      out.insert(class_of(g, p));
    });
  }
  return out;
}

std::vector<EdgePath> enumerate_loops(const GraphComplex& g, std::uint32_t x0,
                                      std::uint32_t max_len) {
  std::vector<EdgePath> out;
  EdgePath path;
  grow_paths(g, x0, max_len, path, [&](const EdgePath& p, std::uint32_t at) {
    if (at == x0) out.push_back(p);
  });
  return out;
}

bool basepoint_iso_check(const GraphComplex& g, std::uint32_t x0, std::uint32_t max_len) {
  require_valid(g);
  if (!g.base_vertices().contains(x0)) {
    throw std::invalid_argument("basepoint_iso_check: x0 not a vertex of the base subgraph");
  }
  std::vector<EdgePath> loops = enumerate_loops(g, x0, max_len);
  std::vector<RelClass> classes;
  classes.reserve(loops.size());
  for (const EdgePath& l : loops) classes.push_back(class_of(g, l));

  // Injectivity: distinct reduced loops are distinct elements of the
  // based fundamental group, so they must land on distinct classes.
  std::map<RelClass, const EdgePath*> image;
  for (std::size_t t = 0; t < loops.size(); ++t) {
    auto [it, inserted] = image.emplace(classes[t], &loops[t]);
    if (!inserted && *it->second != loops[t]) return false;
  }

  // Multiplicativity against the relative product.
  for (std::size_t a = 0; a < loops.size(); ++a) {
    for (std::size_t b = 0; b < loops.size(); ++b) {
      EdgePath concat = loops[a];
      concat.insert(concat.end(), loops[b].begin(), loops[b].end());
      if (class_of(g, concat) != rel_product(g, classes[a], classes[b])) return false;
    }
  }

  // Every class of the window is hit by a loop of bounded length.
  std::uint32_t diam = base_diameter(g);
  for (const RelClass& cls : enumerate_classes(g, max_len)) {
    EdgePath loop;
    if (!cls.is_identity()) {
      loop = base_path(g, x0, g.source(cls.canonical().front()));
      loop.insert(loop.end(), cls.canonical().begin(), cls.canonical().end());
      EdgePath back = base_path(g, g.target(cls.canonical().back()), x0);
      loop.insert(loop.end(), back.begin(), back.end());
    }
    if (loop.size() > max_len + 2 * static_cast<std::size_t>(diam)) return false;
    if (class_of(g, loop) != cls) return false;
  }
  return true;
}

}  // namespace idemsplit
