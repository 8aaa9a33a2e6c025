#pragma once

// Strong bridges and strong articulation points of strongly connected
// digraphs, via dominator trees of G and G_r from a fixed root.

#include <algorithm>
#include <vector>

#include "sbgraph/connectivity.hpp"
#include "sbgraph/dominators.hpp"

namespace sbgraph {

struct CriticalSets {
  std::vector<ArcId> strong_bridges;                 // sorted
  std::vector<VertexId> strong_articulation_points;  // sorted

  std::size_t sap_count() const { return strong_articulation_points.size(); }

  friend bool operator==(const CriticalSets&, const CriticalSets&) = default;
};

namespace detail {

inline void require_strongly_connected(const Digraph& g, const char* what) {
  if (!is_strongly_connected(g))
    throw PreconditionError("not_strongly_connected",
                            std::string(what) + " requires a strongly connected graph");
}

constexpr VertexId kCriticalRoot = 0;

}  // namespace detail

// Arcs whose deletion destroys strong connectivity.
inline std::vector<ArcId> strong_bridges(const Digraph& g) {
  detail::require_strongly_connected(g, "strong_bridges");
  if (g.vertex_count() == 0) return {};
  // Arc ids of reverse(g) coincide with those of g, so a flowgraph bridge of
  // the reverse graph is directly the id of the original arc.
  auto bridges = flowgraph_bridges(g, detail::kCriticalRoot);
  auto back = flowgraph_bridges(reverse(g), detail::kCriticalRoot);
  bridges.insert(bridges.end(), back.begin(), back.end());
  std::sort(bridges.begin(), bridges.end());
  bridges.erase(std::unique(bridges.begin(), bridges.end()), bridges.end());
  return bridges;
}

// Vertices whose deletion destroys strong connectivity. Requires n >= 3.
inline std::vector<VertexId> strong_articulation_points(const Digraph& g) {
  detail::require_strongly_connected(g, "strong_articulation_points");
  if (g.vertex_count() < 3)
    throw PreconditionError("too_few_vertices",
                            "strong articulation points need at least 3 vertices");
  const VertexId s = detail::kCriticalRoot;
  std::vector<char> marked(g.vertex_count(), 0);
  // A non-root vertex is a SAP iff it has a child in the dominator tree of G
  // or of G_r rooted at s.
  auto mark_internal = [&](const Digraph& graph) {
    auto tree = dominator_tree(graph, s);
    for (VertexId idom : tree.idoms())
      if (idom != DominatorTree::kNone && idom != s) marked[idom] = 1;
  };
  mark_internal(g);
  mark_internal(reverse(g));
  if (!is_strongly_connected(WithoutVertex(g, s))) marked[s] = 1;
  std::vector<VertexId> points;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (marked[v]) points.push_back(v);
  return points;
}

inline CriticalSets critical_sets(const Digraph& g) {
  return {strong_bridges(g), strong_articulation_points(g)};
}

}  // namespace sbgraph
