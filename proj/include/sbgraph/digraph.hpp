#pragma once

// Immutable simple directed graphs, filtered views over them, and the
// undirected view obtained by forgetting arc directions.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sbgraph/error.hpp"

namespace sbgraph {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;
// External vertex name as it appears in edge-list files.
using Label = std::uint64_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline Arc reversed(Arc a) { return {a.head, a.tail}; }

namespace detail {

inline std::uint64_t arc_key(VertexId tail, VertexId head) {
  return (std::uint64_t{tail} << 32) | head;
}

// Compressed adjacency: offsets[v]..offsets[v+1] indexes into ids.
struct Csr {
  std::vector<std::uint32_t> offsets;
  std::vector<ArcId> ids;

  std::span<const ArcId> row(VertexId v) const {
    return {ids.data() + offsets[v], ids.data() + offsets[v + 1]};
  }
};

template <class KeyFn>
Csr build_csr(std::size_t n, const std::vector<Arc>& arcs, KeyFn key) {
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  for (const Arc& a : arcs) ++csr.offsets[key(a) + 1];
  for (std::size_t v = 0; v < n; ++v) csr.offsets[v + 1] += csr.offsets[v];
  csr.ids.resize(arcs.size());
  std::vector<std::uint32_t> fill(csr.offsets.begin(), csr.offsets.end() - 1);
  for (ArcId id = 0; id < arcs.size(); ++id) csr.ids[fill[key(arcs[id])]++] = id;
  return csr;
}

}  // namespace detail

// A simple digraph on vertices 0..n-1. Arcs keep construction order, which
// every algorithm in the library uses as its tie-breaking order.
class Digraph {
 public:
  Digraph() = default;

  // Duplicate arcs are dropped (first occurrence kept, see
  // duplicates_dropped()). Self-loops and out-of-range endpoints throw
  // GraphError. `labels`, when non-empty, names every vertex.
  Digraph(std::size_t vertex_count, std::span<const Arc> arcs,
          std::vector<Label> labels = {})
      : n_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count > std::size_t{UINT32_MAX})
      throw GraphError("vertex count exceeds 32-bit id space");
    if (!labels_.empty() && labels_.size() != n_)
      throw GraphError("label count " + std::to_string(labels_.size()) +
                       " does not match vertex count " + std::to_string(n_));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(arcs.size() * 2);
    arcs_.reserve(arcs.size());
    for (const Arc& a : arcs) {
      if (a.tail >= n_ || a.head >= n_)
        throw GraphError("arc (" + std::to_string(a.tail) + "," +
                         std::to_string(a.head) + ") has endpoint outside 0.." +
                         std::to_string(n_ == 0 ? 0 : n_ - 1));
      if (a.tail == a.head)
        throw GraphError("self-loop at vertex " + std::to_string(a.tail));
      if (!seen.insert(detail::arc_key(a.tail, a.head)).second) {
        ++duplicates_;
        continue;
      }
      arcs_.push_back(a);
    }
    out_ = detail::build_csr(n_, arcs_, [](const Arc& a) { return a.tail; });
    in_ = detail::build_csr(n_, arcs_, [](const Arc& a) { return a.head; });
  }

  Digraph(std::size_t vertex_count, std::initializer_list<Arc> arcs)
      : Digraph(vertex_count, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::size_t duplicates_dropped() const { return duplicates_; }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_[id]; }

  // Arc ids leaving / entering v, in construction order.
  std::span<const ArcId> out_arcs(VertexId v) const { return out_.row(v); }
  std::span<const ArcId> in_arcs(VertexId v) const { return in_.row(v); }

  std::optional<ArcId> find_arc(VertexId tail, VertexId head) const {
    if (tail >= n_ || head >= n_) return std::nullopt;
    for (ArcId id : out_arcs(tail))
      if (arcs_[id].head == head) return id;
    return std::nullopt;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }
  Label label(VertexId v) const { return labels_.empty() ? Label{v} : labels_[v]; }

  std::optional<VertexId> vertex_of(Label label) const {
    if (labels_.empty())
      return label < n_ ? std::optional<VertexId>(static_cast<VertexId>(label))
                        : std::nullopt;
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
  }

  // View interface (see DigraphView): a Digraph is its own unfiltered view.
  const Digraph& base() const { return *this; }
  bool has_vertex(VertexId) const { return true; }
  bool has_arc(ArcId) const { return true; }
  std::size_t live_vertex_count() const { return n_; }

  // Missing labels compare equal to explicit identity labels.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    if (a.n_ != b.n_ || a.arcs_ != b.arcs_) return false;
    for (VertexId v = 0; v < a.n_; ++v)
      if (a.label(v) != b.label(v)) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Label> labels_;
  std::size_t duplicates_ = 0;
  detail::Csr out_;
  detail::Csr in_;
};

// A read-only filter over a Digraph. Vertex ids keep the base graph's id
// space; filtered-out vertices and arcs are skipped by every algorithm that
// accepts a view.
template <class V>
concept DigraphView = requires(const V& view, VertexId v, ArcId a) {
  { view.base() } -> std::same_as<const Digraph&>;
  { view.has_vertex(v) } -> std::convertible_to<bool>;
  { view.has_arc(a) } -> std::convertible_to<bool>;
  { view.live_vertex_count() } -> std::convertible_to<std::size_t>;
};

// G minus one arc.
class WithoutArc {
 public:
  WithoutArc(const Digraph& g, ArcId skip) : g_(&g), skip_(skip) {}

  const Digraph& base() const { return *g_; }
  bool has_vertex(VertexId) const { return true; }
  bool has_arc(ArcId a) const { return a != skip_; }
  std::size_t live_vertex_count() const { return g_->vertex_count(); }

 private:
  const Digraph* g_;
  ArcId skip_;
};

// G minus one vertex and its incident arcs.
class WithoutVertex {
 public:
  WithoutVertex(const Digraph& g, VertexId skip) : g_(&g), skip_(skip) {}

  const Digraph& base() const { return *g_; }
  bool has_vertex(VertexId v) const { return v != skip_; }
  bool has_arc(ArcId a) const {
    const Arc& arc = g_->arc(a);
    return arc.tail != skip_ && arc.head != skip_;
  }
  std::size_t live_vertex_count() const { return g_->vertex_count() - 1; }

 private:
  const Digraph* g_;
  VertexId skip_;
};

// Spanning subgraph (V, S) for a mutable arc subset S.
class ArcSubset {
 public:
  explicit ArcSubset(const Digraph& g) : g_(&g), keep_(g.arc_count(), 0) {}

  void insert(ArcId a) {
    if (!keep_[a]) {
      keep_[a] = 1;
      ++size_;
    }
  }
  bool contains(ArcId a) const { return keep_[a] != 0; }
  std::size_t size() const { return size_; }

  std::vector<ArcId> ids() const {
    std::vector<ArcId> out;
    out.reserve(size_);
    for (ArcId a = 0; a < keep_.size(); ++a)
      if (keep_[a]) out.push_back(a);
    return out;
  }

  const Digraph& base() const { return *g_; }
  bool has_vertex(VertexId) const { return true; }
  bool has_arc(ArcId a) const { return keep_[a] != 0; }
  std::size_t live_vertex_count() const { return g_->vertex_count(); }

 private:
  const Digraph* g_;
  std::vector<char> keep_;
  std::size_t size_ = 0;
};

// G_r: every arc inverted. Arc id i of the result is the reversal of arc i.
inline Digraph reverse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) arcs.push_back(reversed(a));
  return Digraph(g.vertex_count(), arcs, g.labels());
}

inline Digraph delete_arc(const Digraph& g, Arc e) {
  auto id = g.find_arc(e.tail, e.head);
  if (!id)
    throw PreconditionError("arc_absent", "arc (" + std::to_string(e.tail) + "," +
                                              std::to_string(e.head) +
                                              ") is not in the graph");
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count() - 1);
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (a != *id) arcs.push_back(g.arc(a));
  return Digraph(g.vertex_count(), arcs, g.labels());
}

// A subgraph on re-densified ids; original[new_id] is the id in the source.
struct Subgraph {
  Digraph graph;
  std::vector<VertexId> original;
};

// Subgraph induced by `vertices` (any order, duplicates ignored). New ids
// follow ascending original id.
inline Subgraph induced_subgraph(const Digraph& g, std::span<const VertexId> vertices) {
  constexpr VertexId kAbsent = UINT32_MAX;
  std::vector<VertexId> to_new(g.vertex_count(), kAbsent);
  for (VertexId v : vertices) {
    if (v >= g.vertex_count())
      throw PreconditionError("invalid_vertex", "vertex " + std::to_string(v) + " out of range");
    to_new[v] = 0;
  }
  Subgraph sub;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (to_new[v] != kAbsent) {
      to_new[v] = static_cast<VertexId>(sub.original.size());
      sub.original.push_back(v);
    }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs())
    if (to_new[a.tail] != kAbsent && to_new[a.head] != kAbsent)
      arcs.push_back({to_new[a.tail], to_new[a.head]});
  std::vector<Label> labels;
  if (g.has_labels())
    for (VertexId v : sub.original) labels.push_back(g.label(v));
  sub.graph = Digraph(sub.original.size(), arcs, std::move(labels));
  return sub;
}

inline Subgraph delete_vertex(const Digraph& g, VertexId w) {
  if (w >= g.vertex_count())
    throw PreconditionError("invalid_vertex", "vertex " + std::to_string(w) + " out of range");
  if (g.vertex_count() < 2)
    throw PreconditionError("too_few_vertices", "cannot delete a vertex from a graph with n < 2");
  std::vector<VertexId> keep;
  keep.reserve(g.vertex_count() - 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != w) keep.push_back(v);
  return induced_subgraph(g, keep);
}

// Copies the live part of a view into a standalone graph on the same id
// space (filtered-out vertices become isolated).
template <DigraphView View>
Digraph materialize(const View& view) {
  const Digraph& g = view.base();
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (view.has_arc(a)) arcs.push_back(g.arc(a));
  return Digraph(g.vertex_count(), arcs, g.labels());
}

enum class Direction { forward, backward };

// Vertices reachable from `root` along live arcs (backward: vertices that
// reach `root`). Result is indexed by vertex id.
template <DigraphView View>
std::vector<char> reachable(const View& view, VertexId root, Direction dir = Direction::forward) {
  const Digraph& g = view.base();
  std::vector<char> seen(g.vertex_count(), 0);
  if (!view.has_vertex(root)) return seen;
  std::vector<VertexId> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto arcs = dir == Direction::forward ? g.out_arcs(v) : g.in_arcs(v);
    for (ArcId a : arcs) {
      if (!view.has_arc(a)) continue;
      VertexId next = dir == Direction::forward ? g.arc(a).head : g.arc(a).tail;
      if (!seen[next]) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

// Simple undirected graph: {u,v} is an edge iff u != v were joined by at
// least one arc. Edges are stored normalized (first < second).
class UndirectedView {
 public:
  struct Incidence {
    VertexId neighbor;
    std::size_t edge;
  };

  UndirectedView() = default;

  UndirectedView(std::size_t vertex_count,
                 std::span<const std::pair<VertexId, VertexId>> edges)
      : adjacency_(vertex_count) {
    std::unordered_set<std::uint64_t> seen;
    for (auto [u, v] : edges) {
      if (u >= vertex_count || v >= vertex_count)
        throw GraphError("undirected edge endpoint out of range");
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (!seen.insert(detail::arc_key(u, v)).second) continue;
      adjacency_[u].push_back({v, edges_.size()});
      adjacency_[v].push_back({u, edges_.size()});
      edges_.emplace_back(u, v);
    }
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  std::span<const Incidence> neighbors(VertexId v) const { return adjacency_[v]; }

 private:
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

// Underlying graph of the live part of a view. Edge order follows the first
// arc (in construction order) that produces it.
template <DigraphView View>
UndirectedView underlying(const View& view) {
  const Digraph& g = view.base();
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.arc_count());
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (view.has_arc(a)) edges.emplace_back(g.arc(a).tail, g.arc(a).head);
  return UndirectedView(g.vertex_count(), edges);
}

// Sorted arcs (as endpoint pairs) for a set of arc ids.
inline std::vector<Arc> arcs_of(const Digraph& g, std::span<const ArcId> ids) {
  std::vector<Arc> out;
  out.reserve(ids.size());
  for (ArcId id : ids) out.push_back(g.arc(id));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sbgraph
