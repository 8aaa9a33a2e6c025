#pragma once

// Strong connectivity, undirected blocks, the strongly-biconnected predicate
// and the two-tree strong-connectivity certificate.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "sbgraph/digraph.hpp"

namespace sbgraph {

// ---------------------------------------------------------------------------
// Strong connectivity

template <DigraphView View>
std::optional<VertexId> first_live_vertex(const View& view) {
  for (VertexId v = 0; v < view.base().vertex_count(); ++v)
    if (view.has_vertex(v)) return v;
  return std::nullopt;
}

// `to` cannot be reached from `from`.
struct Unreachable {
  VertexId from;
  VertexId to;

  friend bool operator==(const Unreachable&, const Unreachable&) = default;
};

// A vertex whose removal disconnects the underlying graph.
struct CutVertex {
  VertexId vertex;

  friend bool operator==(const CutVertex&, const CutVertex&) = default;
};

template <DigraphView View>
std::optional<Unreachable> find_unreachable_pair(const View& view) {
  auto root = first_live_vertex(view);
  if (!root) return std::nullopt;
  const std::size_t n = view.base().vertex_count();
  auto forward = reachable(view, *root, Direction::forward);
  for (VertexId v = 0; v < n; ++v)
    if (view.has_vertex(v) && !forward[v]) return Unreachable{*root, v};
  auto backward = reachable(view, *root, Direction::backward);
  for (VertexId v = 0; v < n; ++v)
    if (view.has_vertex(v) && !backward[v]) return Unreachable{v, *root};
  return std::nullopt;
}

// True iff every live vertex reaches every other (n <= 1 is trivially true).
template <DigraphView View>
bool is_strongly_connected(const View& view) {
  return !find_unreachable_pair(view).has_value();
}

// Tarjan's algorithm without recursion. Components come out in reverse
// topological order of the condensation; vertices inside a component are
// sorted ascending.
template <DigraphView View>
std::vector<std::vector<VertexId>> strongly_connected_components(const View& view) {
  const Digraph& g = view.base();
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> component_stack;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<std::vector<VertexId>> components;
  std::uint32_t counter = 0;

  for (VertexId start = 0; start < n; ++start) {
    if (!view.has_vertex(start) || index[start] != kUnvisited) continue;
    frames.push_back({start, 0});
    index[start] = low[start] = counter++;
    component_stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto out = g.out_arcs(f.v);
      if (f.next < out.size()) {
        ArcId a = out[f.next++];
        if (!view.has_arc(a)) continue;
        VertexId w = g.arc(a).head;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          component_stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      VertexId v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> component;
        VertexId w;
        do {
          w = component_stack.back();
          component_stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

// ---------------------------------------------------------------------------
// Undirected biconnectivity

struct BlockDecomposition {
  // Vertex sets of the blocks, each sorted; an isolated vertex is a block of
  // its own with no edges.
  std::vector<std::vector<VertexId>> blocks;
  // Edge ids (into UndirectedView::edges()) of each block.
  std::vector<std::vector<std::size_t>> block_edges;
  std::vector<VertexId> cut_vertices;
  std::vector<std::pair<VertexId, VertexId>> bridges;
};

// Hopcroft-Tarjan low-link decomposition with an explicit edge stack.
// Blocks are emitted in the order the DFS closes them.
inline BlockDecomposition block_decomposition(const UndirectedView& u) {
  const std::size_t n = u.vertex_count();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> disc(n, kUnvisited), low(n, 0);
  struct Frame {
    VertexId v;
    std::size_t parent_edge;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<std::size_t> edge_stack;
  std::vector<char> in_block(n, 0);
  std::vector<std::uint32_t> block_count(n, 0);
  BlockDecomposition out;
  std::uint32_t timer = 0;

  auto close_block = [&](std::size_t through_edge) {
    std::vector<std::size_t> edges;
    std::vector<VertexId> vertices;
    std::size_t e;
    do {
      e = edge_stack.back();
      edge_stack.pop_back();
      edges.push_back(e);
      for (VertexId x : {u.edges()[e].first, u.edges()[e].second})
        if (!in_block[x]) {
          in_block[x] = 1;
          vertices.push_back(x);
        }
    } while (e != through_edge);
    for (VertexId x : vertices) {
      in_block[x] = 0;
      ++block_count[x];
    }
    std::sort(vertices.begin(), vertices.end());
    std::sort(edges.begin(), edges.end());
    if (edges.size() == 1) out.bridges.push_back(u.edges()[edges.front()]);
    out.blocks.push_back(std::move(vertices));
    out.block_edges.push_back(std::move(edges));
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    disc[root] = low[root] = timer++;
    if (u.neighbors(root).empty()) {
      out.blocks.push_back({root});
      out.block_edges.emplace_back();
      ++block_count[root];
      continue;
    }
    frames.push_back({root, kNoEdge, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nbrs = u.neighbors(f.v);
      if (f.next < nbrs.size()) {
        auto inc = nbrs[f.next++];
        if (inc.edge == f.parent_edge) continue;
        VertexId w = inc.neighbor;
        if (disc[w] == kUnvisited) {
          edge_stack.push_back(inc.edge);
          disc[w] = low[w] = timer++;
          frames.push_back({w, inc.edge, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(inc.edge);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      VertexId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) close_block(done.parent_edge);
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (block_count[v] >= 2) out.cut_vertices.push_back(v);
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

// Connected with no cut vertex. K1 and K2 count as biconnected; the empty
// graph does too.
inline bool is_biconnected(const UndirectedView& u) {
  if (u.vertex_count() <= 1) return true;
  auto decomposition = block_decomposition(u);
  return decomposition.blocks.size() == 1;
}

// First cut vertex found by a DFS over the underlying graph of the live
// part of `view`, or nullopt if there is none. Connectivity is not checked
// here; callers establish it through strong connectivity.
template <DigraphView View>
std::optional<VertexId> find_underlying_cut_vertex(const View& view) {
  std::optional<VertexId> cut;
  const Digraph& g = view.base();
  const std::size_t n = g.vertex_count();
  auto root = first_live_vertex(view);
  if (!root) return cut;
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, kUnvisited), low(n, 0);
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::uint32_t timer = 0;
  std::size_t root_children = 0;
  disc[*root] = low[*root] = timer++;
  constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();
  frames.push_back({*root, kNoParent, 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    auto out = g.out_arcs(f.v);
    auto in = g.in_arcs(f.v);
    if (f.next < out.size() + in.size()) {
      std::size_t i = f.next++;
      ArcId a = i < out.size() ? out[i] : in[i - out.size()];
      if (!view.has_arc(a)) continue;
      VertexId w = i < out.size() ? g.arc(a).head : g.arc(a).tail;
      // Antiparallel arcs collapse into one undirected edge, so every arc
      // back to the DFS parent is the tree edge.
      if (w == f.parent) continue;
      if (disc[w] == kUnvisited) {
        disc[w] = low[w] = timer++;
        if (f.v == *root) ++root_children;
        frames.push_back({w, f.v, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    VertexId parent = frames.back().v;
    low[parent] = std::min(low[parent], low[done.v]);
    if (parent != *root && low[done.v] >= disc[parent] && !cut) cut = parent;
  }
  if (root_children >= 2 && !cut) cut = *root;
  return cut;
}

enum class FailureKind { not_strongly_connected, underlying_not_biconnected };

inline const char* to_string(FailureKind kind) {
  return kind == FailureKind::not_strongly_connected ? "NOT_STRONGLY_CONNECTED"
                                                     : "UNDERLYING_NOT_BICONNECTED";
}

// Why a graph is not strongly biconnected, with a checkable witness.
struct Failure {
  FailureKind kind;
  // Unreachable for not_strongly_connected; CutVertex otherwise. An
  // underlying graph that is disconnected (possible only when the digraph is
  // not strongly connected) is reported as not_strongly_connected.
  std::variant<Unreachable, CutVertex> witness;

  friend bool operator==(const Failure&, const Failure&) = default;
};

// nullopt iff the live part of `view` is strongly biconnected.
template <DigraphView View>
std::optional<Failure> strong_biconnectivity_failure(const View& view) {
  if (auto pair = find_unreachable_pair(view))
    return Failure{FailureKind::not_strongly_connected, *pair};
  if (auto cut = find_underlying_cut_vertex(view))
    return Failure{FailureKind::underlying_not_biconnected, CutVertex{*cut}};
  return std::nullopt;
}

// Strongly connected and the underlying graph is biconnected.
template <DigraphView View>
bool is_strongly_biconnected(const View& view) {
  return !strong_biconnectivity_failure(view).has_value();
}

// True iff `failure` really holds for the live part of `view`.
template <DigraphView View>
bool verify_failure(const View& view, const Failure& failure) {
  if (const auto* pair = std::get_if<Unreachable>(&failure.witness)) {
    if (failure.kind != FailureKind::not_strongly_connected) return false;
    if (!view.has_vertex(pair->from) || !view.has_vertex(pair->to)) return false;
    return !reachable(view, pair->from)[pair->to];
  }
  const auto& cut = std::get<CutVertex>(failure.witness);
  if (failure.kind != FailureKind::underlying_not_biconnected) return false;
  if (!view.has_vertex(cut.vertex) || view.live_vertex_count() < 3) return false;
  // Removing the cut vertex must leave the underlying graph disconnected.
  const Digraph& g = view.base();
  std::vector<char> seen(g.vertex_count(), 0);
  seen[cut.vertex] = 1;
  std::optional<VertexId> start;
  for (VertexId v = 0; v < g.vertex_count() && !start; ++v)
    if (view.has_vertex(v) && v != cut.vertex) start = v;
  std::vector<VertexId> stack{*start};
  seen[*start] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto visit = [&](ArcId a, VertexId w) {
      if (view.has_arc(a) && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    };
    for (ArcId a : g.out_arcs(v)) visit(a, g.arc(a).head);
    for (ArcId a : g.in_arcs(v)) visit(a, g.arc(a).tail);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (view.has_vertex(v) && !seen[v]) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Strong-connectivity certificate

struct ScssCertificate {
  VertexId root = 0;
  // DFS out-tree of G from root.
  std::vector<ArcId> forward_tree_arcs;
  // Arcs of G whose reversals form a DFS out-tree of G_r from root.
  std::vector<ArcId> backward_tree_arcs;
  // Sorted union of the two trees.
  std::vector<ArcId> certificate_arcs;
};

// Tree arcs of a depth-first search from `root`, children visited in
// adjacency order. Listed in discovery order.
inline std::vector<ArcId> dfs_tree_arcs(const Digraph& g, VertexId root) {
  std::vector<ArcId> tree;
  std::vector<char> seen(g.vertex_count(), 0);
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> frames{{root, 0}};
  seen[root] = 1;
  while (!frames.empty()) {
    Frame& f = frames.back();
    auto out = g.out_arcs(f.v);
    if (f.next == out.size()) {
      frames.pop_back();
      continue;
    }
    ArcId a = out[f.next++];
    VertexId w = g.arc(a).head;
    if (!seen[w]) {
      seen[w] = 1;
      tree.push_back(a);
      frames.push_back({w, 0});
    }
  }
  return tree;
}

inline ScssCertificate scss_certificate(const Digraph& g, VertexId y) {
  if (y >= g.vertex_count())
    throw PreconditionError("invalid_vertex", "root " + std::to_string(y) + " out of range");
  if (!is_strongly_connected(g))
    throw PreconditionError("not_strongly_connected",
                            "certificate requires a strongly connected graph");
  ScssCertificate cert;
  cert.root = y;
  cert.forward_tree_arcs = dfs_tree_arcs(g, y);
  // Arc ids of reverse(g) coincide with those of g.
  cert.backward_tree_arcs = dfs_tree_arcs(reverse(g), y);
  cert.certificate_arcs = cert.forward_tree_arcs;
  cert.certificate_arcs.insert(cert.certificate_arcs.end(), cert.backward_tree_arcs.begin(),
                               cert.backward_tree_arcs.end());
  std::sort(cert.certificate_arcs.begin(), cert.certificate_arcs.end());
  cert.certificate_arcs.erase(
      std::unique(cert.certificate_arcs.begin(), cert.certificate_arcs.end()),
      cert.certificate_arcs.end());
  return cert;
}

}  // namespace sbgraph
