#pragma once

// b-bridges and b-articulation points of strongly biconnected digraphs: the
// arcs and vertices whose removal destroys strong biconnectivity.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sbgraph/connectivity.hpp"
#include "sbgraph/critical.hpp"
#include "sbgraph/sbcc.hpp"

namespace sbgraph {

// Record of growing the certificate E_y into a strongly biconnected
// spanning subgraph.
struct AugmentationTrace {
  VertexId root = 0;
  // E_y before augmentation, sorted.
  std::vector<ArcId> initial_arcs;
  // One arc per iteration, in the order added.
  std::vector<ArcId> added_arcs;
  // Number of strongly biconnected components of (V, E_y) each time the loop
  // condition is evaluated; entry i precedes added_arcs[i], the last entry
  // is the terminating count (1).
  std::vector<std::size_t> component_counts;

  // Final E_y, sorted.
  std::vector<ArcId> final_arcs() const {
    std::vector<ArcId> arcs = initial_arcs;
    arcs.insert(arcs.end(), added_arcs.begin(), added_arcs.end());
    std::sort(arcs.begin(), arcs.end());
    return arcs;
  }
};

namespace detail {

inline void require_strongly_biconnected(const Digraph& g, const std::string& what) {
  if (auto failure = strong_biconnectivity_failure(g)) {
    bool connectivity = failure->kind == FailureKind::not_strongly_connected;
    throw PreconditionError(
        connectivity ? "not_strongly_connected" : "underlying_not_biconnected",
        what + " requires a strongly biconnected graph; " +
            (connectivity ? "the graph is not strongly connected"
                          : "the underlying graph is not biconnected"));
  }
}

}  // namespace detail

// Adds arcs of E \ E_y to the certificate until (V, E_y) is strongly
// biconnected. Each round takes the first arc in input order whose
// endpoints share no component; such an arc closes a cycle through two
// components and merges them, so the count drops every round.
inline AugmentationTrace augment_to_strongly_biconnected(const Digraph& g,
                                                         const ScssCertificate& certificate) {
  detail::require_strongly_biconnected(g, "augmentation");
  if (certificate.root >= g.vertex_count())
    throw PreconditionError("invalid_certificate", "certificate root out of range");
  AugmentationTrace trace;
  trace.root = certificate.root;
  ArcSubset spanning(g);
  for (ArcId a : certificate.certificate_arcs) {
    if (a >= g.arc_count())
      throw PreconditionError("invalid_certificate", "certificate arc id out of range");
    spanning.insert(a);
  }
  trace.initial_arcs = spanning.ids();

  while (true) {
    SbccCover cover = strongly_biconnected_components(spanning);
    trace.component_counts.push_back(cover.count());
    if (cover.count() <= 1) break;
    // Endpoints sharing no component is the same as lying in distinct
    // components C1, C2 with neither endpoint in C1 n C2.
    std::optional<ArcId> pick;
    for (ArcId a = 0; a < g.arc_count() && !pick; ++a) {
      if (spanning.contains(a)) continue;
      const Arc& arc = g.arc(a);
      if (!cover.share_component(arc.tail, arc.head)) pick = a;
    }
    if (!pick)
      throw InternalError("no arc merges two strongly biconnected components of (V, E_y) with " +
                          std::to_string(cover.count()) + " components");
    spanning.insert(*pick);
    trace.added_arcs.push_back(*pick);
  }
  return trace;
}

struct BBridgeResult {
  std::vector<ArcId> b_bridges;       // sorted
  std::vector<ArcId> strong_bridges;  // sorted
  AugmentationTrace trace;
};

// All b-bridges in O(nm): strong bridges, plus every other arc of the
// sparse strongly biconnected subgraph E_y whose deletion breaks strong
// biconnectivity. Arcs outside E_y never do, since E_y survives them.
inline BBridgeResult b_bridges_fast(const Digraph& g) {
  detail::require_strongly_biconnected(g, "b_bridges_fast");
  if (g.vertex_count() < 3)
    throw PreconditionError("too_few_vertices", "b-bridges need at least 3 vertices");
  BBridgeResult result;
  result.strong_bridges = strong_bridges(g);

  const VertexId y = 0;
  result.trace = augment_to_strongly_biconnected(g, scss_certificate(g, y));

  std::vector<char> in_b(g.arc_count(), 0);
  for (ArcId a : result.strong_bridges) in_b[a] = 1;
  for (ArcId a : result.trace.final_arcs()) {
    if (in_b[a]) continue;
    if (!is_strongly_biconnected(WithoutArc(g, a))) in_b[a] = 1;
  }
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (in_b[a]) result.b_bridges.push_back(a);
  return result;
}

// All b-articulation points: the strong articulation points plus every other
// vertex whose deletion breaks strong biconnectivity. Requires n >= 4.
inline std::vector<VertexId> b_articulation_points(const Digraph& g) {
  detail::require_strongly_biconnected(g, "b_articulation_points");
  if (g.vertex_count() < 4)
    throw PreconditionError("too_few_vertices",
                            "b-articulation points need at least 4 vertices");
  std::vector<char> marked(g.vertex_count(), 0);
  for (VertexId v : strong_articulation_points(g)) marked[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!marked[v] && !is_strongly_biconnected(WithoutVertex(g, v))) marked[v] = 1;
  std::vector<VertexId> points;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (marked[v]) points.push_back(v);
  return points;
}

struct ArcWitness {
  ArcId arc;
  // Why G \ {arc} is not strongly biconnected (ids in G's id space).
  Failure failure;
};

struct VertexWitness {
  VertexId vertex;
  // Why G \ {vertex} is not strongly biconnected (ids in G's id space).
  Failure failure;
};

struct BResilienceReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool strongly_connected = false;
  bool strongly_biconnected = false;
  // Set when the graph itself is not strongly biconnected.
  std::optional<Failure> failure;

  // Present when strongly connected (articulation points also need n >= 3).
  std::optional<std::vector<ArcId>> strong_bridges;
  std::optional<std::vector<VertexId>> strong_articulation_points;
  std::optional<SbccCover> sbcc;

  // Present when strongly biconnected and n >= 3.
  std::optional<std::vector<ArcId>> b_bridges;
  std::optional<std::vector<VertexId>> b_articulation_points;
  std::optional<AugmentationTrace> trace;
  std::vector<ArcWitness> b_bridge_witnesses;
  std::vector<VertexWitness> b_articulation_point_witnesses;

  bool is_2edge_sb = false;
  bool is_2vertex_sb = false;
  // Conventions that affected the result.
  std::vector<std::string> notes;
};

// Full classification of any digraph; never throws on graph shape.
inline BResilienceReport classify(const Digraph& g) {
  BResilienceReport report;
  report.n = g.vertex_count();
  report.m = g.arc_count();
  report.failure = strong_biconnectivity_failure(g);
  report.strongly_connected =
      !report.failure || report.failure->kind != FailureKind::not_strongly_connected;
  report.strongly_biconnected = !report.failure;

  if (report.strongly_connected) {
    report.strong_bridges = strong_bridges(g);
    if (report.n >= 3) report.strong_articulation_points = strong_articulation_points(g);
    report.sbcc = strongly_biconnected_components(g);
  }
  if (!report.strongly_biconnected) return report;
  if (report.n < 3) {
    report.notes.push_back("n < 3: graphs this small are never 2-edge- or 2-vertex-strongly "
                           "biconnected; b-sets are not computed");
    return report;
  }

  auto bridges = b_bridges_fast(g);
  for (ArcId a : bridges.b_bridges)
    report.b_bridge_witnesses.push_back({a, *strong_biconnectivity_failure(WithoutArc(g, a))});
  report.b_bridges = std::move(bridges.b_bridges);
  report.trace = std::move(bridges.trace);

  if (report.n >= 4) {
    report.b_articulation_points = b_articulation_points(g);
  } else {
    // Two vertices remain after a deletion; a 2-cycle counts as strongly
    // biconnected since its underlying graph K2 is taken as biconnected.
    std::vector<VertexId> points;
    for (VertexId v = 0; v < report.n; ++v)
      if (!is_strongly_biconnected(WithoutVertex(g, v))) points.push_back(v);
    report.b_articulation_points = std::move(points);
    report.notes.push_back("n = 3: deleting a vertex leaves two vertices; a 2-cycle counts as "
                           "strongly biconnected (K2 is taken as biconnected)");
  }
  for (VertexId v : *report.b_articulation_points)
    report.b_articulation_point_witnesses.push_back(
        {v, *strong_biconnectivity_failure(WithoutVertex(g, v))});

  report.is_2edge_sb = report.b_bridges->empty();
  report.is_2vertex_sb = report.b_articulation_points->empty();
  return report;
}

}  // namespace sbgraph
