#pragma once

// Shared fixtures: the three example figures (loaded from data/), small named
// graphs, and label-based lookups.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sbgraph/sbgraph.hpp"

#ifndef SBGRAPH_DATA_DIR
#error "SBGRAPH_DATA_DIR must point at the data/ directory"
#endif

namespace sbgraph::testing {

inline std::string data_path(const std::string& name) {
  return std::string(SBGRAPH_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Digraph load_fixture(const std::string& name) {
  return parse_edge_list(read_file(data_path(name))).graph;
}

inline Digraph fig1() { return load_fixture("fig1.edges"); }
inline Digraph fig2() { return load_fixture("fig2.edges"); }
inline Digraph fig3() { return load_fixture("fig3.edges"); }

inline VertexId vid(const Digraph& g, Label label) { return *g.vertex_of(label); }

inline ArcId aid(const Digraph& g, Label tail, Label head) {
  return *g.find_arc(vid(g, tail), vid(g, head));
}

inline std::vector<ArcId> aids(const Digraph& g, std::vector<LabelArc> arcs) {
  std::vector<ArcId> out;
  for (auto [t, h] : arcs) out.push_back(aid(g, t, h));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexId> vids(const Digraph& g, std::vector<Label> labels) {
  std::vector<VertexId> out;
  for (Label l : labels) out.push_back(vid(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

inline Digraph cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < n; ++v) arcs.push_back({v, static_cast<VertexId>((v + 1) % n)});
  return Digraph(n, arcs);
}

// Both orientations of every undirected edge, in the given order.
inline Digraph bidirected(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return Digraph(n, arcs);
}

inline Digraph bidirected_triangle() { return bidirected(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Digraph bidirected_path(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return bidirected(n, edges);
}
inline Digraph bidirected_cycle(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return bidirected(n, edges);
}
inline Digraph complete_bidirected(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return bidirected(n, edges);
}
// Two bidirected triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline Digraph bowtie() { return bidirected(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

template <class T>
std::vector<std::vector<T>> sorted_sets(std::vector<std::vector<T>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace sbgraph::testing
