#pragma once

// Brute-force reference implementations. Each element is tested by
// materializing the residual graph and re-running the definition; nothing
// here touches dominators, blocks or the sparse certificate.

#include <bit>
#include <cstdint>
#include <vector>

#include "sbgraph/connectivity.hpp"
#include "sbgraph/critical.hpp"
#include "sbgraph/digraph.hpp"
#include "sbgraph/sbcc.hpp"

namespace sbgraph::oracle {

inline constexpr std::size_t kMaxSbccVertices = 12;

namespace detail {

inline void require_sb(const Digraph& g, const char* what) {
  if (!is_strongly_connected(g))
    throw PreconditionError("not_strongly_connected",
                            std::string(what) + " requires a strongly biconnected graph");
  if (!is_biconnected(underlying(g)))
    throw PreconditionError("underlying_not_biconnected",
                            std::string(what) + " requires a strongly biconnected graph");
}

}  // namespace detail

inline std::vector<ArcId> naive_b_bridges(const Digraph& g) {
  detail::require_sb(g, "naive_b_bridges");
  std::vector<ArcId> out;
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (!is_strongly_biconnected(delete_arc(g, g.arc(a)))) out.push_back(a);
  return out;
}

inline std::vector<VertexId> naive_b_articulation_points(const Digraph& g) {
  detail::require_sb(g, "naive_b_articulation_points");
  if (g.vertex_count() < 4)
    throw PreconditionError("too_few_vertices",
                            "b-articulation points need at least 4 vertices");
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!is_strongly_biconnected(delete_vertex(g, v).graph)) out.push_back(v);
  return out;
}

inline CriticalSets naive_critical_sets(const Digraph& g) {
  if (!is_strongly_connected(g))
    throw PreconditionError("not_strongly_connected",
                            "naive_critical_sets requires a strongly connected graph");
  CriticalSets sets;
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (!is_strongly_connected(delete_arc(g, g.arc(a)))) sets.strong_bridges.push_back(a);
  if (g.vertex_count() >= 2)
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!is_strongly_connected(delete_vertex(g, v).graph))
        sets.strong_articulation_points.push_back(v);
  return sets;
}

// Every maximal vertex set inducing a strongly biconnected subgraph, found by
// enumerating subsets largest first.
inline SbccCover naive_sbcc(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxSbccVertices)
    throw PreconditionError("size_guard", "naive_sbcc enumerates subsets; n = " +
                                              std::to_string(n) + " exceeds " +
                                              std::to_string(kMaxSbccVertices));
  if (!is_strongly_connected(g))
    throw PreconditionError("not_strongly_connected",
                            "naive_sbcc requires a strongly connected graph");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<std::uint32_t> found;
  std::vector<std::vector<VertexId>> components;
  for (std::uint32_t mask : masks) {
    bool covered = false;
    for (std::uint32_t f : found)
      if ((mask & f) == mask) {
        covered = true;
        break;
      }
    if (covered) continue;
    std::vector<VertexId> vertices;
    for (VertexId v = 0; v < n; ++v)
      if (mask >> v & 1U) vertices.push_back(v);
    if (is_strongly_biconnected(induced_subgraph(g, vertices).graph)) {
      found.push_back(mask);
      components.push_back(std::move(vertices));
    }
  }
  return make_cover(n, std::move(components));
}

}  // namespace sbgraph::oracle
