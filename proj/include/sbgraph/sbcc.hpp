#pragma once

// Strongly biconnected components of a strongly connected digraph.

#include <algorithm>
#include <vector>

#include "sbgraph/connectivity.hpp"

namespace sbgraph {

struct SbccCover {
  // Each component sorted ascending.
  std::vector<std::vector<VertexId>> components;
  // membership[v]: ascending indices of the components containing v.
  std::vector<std::vector<std::size_t>> membership;

  std::size_t count() const { return components.size(); }

  friend bool operator==(const SbccCover&, const SbccCover&) = default;

  // True iff some component contains both u and w.
  bool share_component(VertexId u, VertexId w) const {
    const auto& a = membership[u];
    const auto& b = membership[w];
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return true;
      *i < *j ? ++i : ++j;
    }
    return false;
  }
};

inline std::size_t count(const SbccCover& cover) { return cover.count(); }

inline SbccCover make_cover(std::size_t vertex_count,
                            std::vector<std::vector<VertexId>> components) {
  SbccCover cover;
  cover.components = std::move(components);
  cover.membership.resize(vertex_count);
  for (std::size_t c = 0; c < cover.components.size(); ++c) {
    std::sort(cover.components[c].begin(), cover.components[c].end());
    for (VertexId v : cover.components[c]) cover.membership[v].push_back(c);
  }
  return cover;
}

// In a strongly connected digraph a directed path between two vertices of
// one block can leave the block only through a cut vertex and must come back
// through the same one, so every block induces a strongly connected
// subgraph. Any vertex set inducing a strongly biconnected subgraph lies in
// one block, hence the components are exactly the blocks of the underlying
// graph.
template <DigraphView View>
SbccCover strongly_biconnected_components(const View& view) {
  if (view.live_vertex_count() != view.base().vertex_count())
    throw PreconditionError("filtered_vertices",
                            "components are defined on views that keep every vertex");
  if (!is_strongly_connected(view))
    throw PreconditionError("not_strongly_connected",
                            "strongly biconnected components need a strongly connected graph");
  auto blocks = block_decomposition(underlying(view));
  return make_cover(view.base().vertex_count(), std::move(blocks.blocks));
}

}  // namespace sbgraph
