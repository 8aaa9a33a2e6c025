#pragma once

// Dominator trees of flowgraphs and the arcs that lie on every path from
// the root to some vertex.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sbgraph/digraph.hpp"

namespace sbgraph {

class DominatorTree {
 public:
  static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  DominatorTree(VertexId root, std::vector<VertexId> idom, std::vector<char> reachable)
      : root_(root), idom_(std::move(idom)), reachable_(std::move(reachable)) {
    number_tree();
  }

  VertexId root() const { return root_; }
  std::size_t vertex_count() const { return idom_.size(); }
  bool is_reachable(VertexId v) const { return reachable_[v] != 0; }

  // Immediate dominator; nullopt for the root and unreachable vertices.
  std::optional<VertexId> idom(VertexId v) const {
    if (idom_[v] == kNone) return std::nullopt;
    return idom_[v];
  }

  // Raw array with kNone for the root and unreachable vertices.
  const std::vector<VertexId>& idoms() const { return idom_; }

  // u dominates v (reflexive). Both must be reachable from the root.
  bool dominates(VertexId u, VertexId v) const {
    if (u >= vertex_count() || v >= vertex_count() || !reachable_[u] || !reachable_[v])
      throw PreconditionError("unreachable_vertex",
                              "dominance query on vertex not reachable from root " +
                                  std::to_string(root_));
    return enter_[u] <= enter_[v] && exit_[v] <= exit_[u];
  }

 private:
  void number_tree() {
    const std::size_t n = idom_.size();
    std::vector<std::uint32_t> child_offset(n + 1, 0);
    for (VertexId v = 0; v < n; ++v)
      if (idom_[v] != kNone) ++child_offset[idom_[v] + 1];
    for (std::size_t v = 0; v < n; ++v) child_offset[v + 1] += child_offset[v];
    std::vector<VertexId> children(child_offset[n]);
    std::vector<std::uint32_t> fill(child_offset.begin(), child_offset.end() - 1);
    for (VertexId v = 0; v < n; ++v)
      if (idom_[v] != kNone) children[fill[idom_[v]]++] = v;

    enter_.assign(n, 0);
    exit_.assign(n, 0);
    std::uint32_t clock = 0;
    std::vector<std::pair<VertexId, std::uint32_t>> stack{{root_, child_offset[root_]}};
    enter_[root_] = clock++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < child_offset[v + 1]) {
        VertexId c = children[next++];
        enter_[c] = clock++;
        stack.emplace_back(c, child_offset[c]);
      } else {
        exit_[v] = clock++;
        stack.pop_back();
      }
    }
  }

  VertexId root_;
  std::vector<VertexId> idom_;
  std::vector<char> reachable_;
  std::vector<std::uint32_t> enter_;
  std::vector<std::uint32_t> exit_;
};

// Semi-NCA: semidominators by Lengauer-Tarjan path compression, then each
// idom as the nearest ancestor of the DFS parent whose preorder number does
// not exceed the semidominator.
inline DominatorTree dominator_tree(const Digraph& g, VertexId root) {
  const std::size_t n = g.vertex_count();
  if (root >= n)
    throw PreconditionError("invalid_vertex", "root " + std::to_string(root) + " out of range");
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  // Depth-first preorder. Below, everything is indexed by preorder number.
  std::vector<std::uint32_t> pre(n, kNone);
  std::vector<VertexId> order;
  std::vector<std::uint32_t> parent;
  order.reserve(n);
  parent.reserve(n);
  {
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    pre[root] = 0;
    order.push_back(root);
    parent.push_back(kNone);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto out = g.out_arcs(v);
      if (next == out.size()) {
        stack.pop_back();
        continue;
      }
      VertexId w = g.arc(out[next++]).head;
      if (pre[w] == kNone) {
        pre[w] = static_cast<std::uint32_t>(order.size());
        parent.push_back(pre[v]);
        order.push_back(w);
        stack.emplace_back(w, 0);
      }
    }
  }

  const std::size_t count = order.size();
  std::vector<std::uint32_t> semi(count), label(count), ancestor(count, kNone), idom(count);
  for (std::uint32_t i = 0; i < count; ++i) semi[i] = label[i] = i;

  std::vector<std::uint32_t> path;
  auto eval = [&](std::uint32_t v) {
    if (ancestor[v] == kNone) return v;
    path.clear();
    for (std::uint32_t x = v; ancestor[ancestor[x]] != kNone; x = ancestor[x]) path.push_back(x);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      std::uint32_t a = ancestor[*it];
      if (semi[label[a]] < semi[label[*it]]) label[*it] = label[a];
      ancestor[*it] = ancestor[a];
    }
    return label[v];
  };

  for (std::uint32_t i = static_cast<std::uint32_t>(count) - 1; i >= 1; --i) {
    for (ArcId a : g.in_arcs(order[i])) {
      std::uint32_t p = pre[g.arc(a).tail];
      if (p == kNone) continue;
      semi[i] = std::min(semi[i], semi[eval(p)]);
    }
    ancestor[i] = parent[i];
  }

  for (std::uint32_t i = 1; i < count; ++i) {
    std::uint32_t j = parent[i];
    while (j > semi[i]) j = idom[j];
    idom[i] = j;
  }

  std::vector<VertexId> result(n, DominatorTree::kNone);
  std::vector<char> reach(n, 0);
  for (std::uint32_t i = 0; i < count; ++i) reach[order[i]] = 1;
  for (std::uint32_t i = 1; i < count; ++i) result[order[i]] = order[idom[i]];
  return DominatorTree(root, std::move(result), std::move(reach));
}

// Arcs lying on every path from `root` to their head. Arc (u,v) qualifies
// iff u = idom(v) and v dominates every other predecessor of v.
inline std::vector<ArcId> flowgraph_bridges(const Digraph& g, VertexId root,
                                            const DominatorTree& tree) {
  std::vector<ArcId> bridges;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!tree.is_reachable(v))
      throw PreconditionError("unreachable_vertex",
                              "vertex " + std::to_string(v) + " unreachable from root " +
                                  std::to_string(root));
    auto dominator = tree.idom(v);
    if (!dominator) continue;
    std::optional<ArcId> candidate;
    bool all_others_dominated = true;
    for (ArcId a : g.in_arcs(v)) {
      VertexId w = g.arc(a).tail;
      if (w == *dominator)
        candidate = a;
      else if (!tree.dominates(v, w))
        all_others_dominated = false;
    }
    if (candidate && all_others_dominated) bridges.push_back(*candidate);
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

inline std::vector<ArcId> flowgraph_bridges(const Digraph& g, VertexId root) {
  return flowgraph_bridges(g, root, dominator_tree(g, root));
}

}  // namespace sbgraph
