#pragma once

// Reproducible random strongly biconnected digraphs.
//
// The stream is fully specified so that other implementations can reproduce
// generated corpora bit for bit:
//   * seeding: the four xoshiro256** state words are four consecutive
//     splitmix64 outputs (increment 0x9E3779B97F4A7C15, multipliers
//     0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30/27/31) starting
//     from the user seed;
//   * next(): xoshiro256** (output rotl(s1 * 5, 7) * 9, shifts 17 and 45);
//   * uniform(b): draw r = next() until r >= (2^64 - b) mod b, return r mod b.

#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "sbgraph/connectivity.hpp"
#include "sbgraph/digraph.hpp"
#include "sbgraph/sbcc.hpp"

namespace sbgraph {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) {
    SplitMix64 mix(seed);
    for (auto& word : s_) word = mix.next();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next(); }

  std::uint64_t next() {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
  }

  // Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t s_[4];
};

// A strongly biconnected digraph on exactly n vertices with at most m arcs
// (fewer only if m exceeds n(n-1)). Arcs in order: a random directed
// Hamiltonian cycle, uniform random extra arcs, then repair arcs joining
// vertices that share no strongly biconnected component until the graph is
// strongly biconnected.
inline Digraph generate(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("invalid_parameters", "generate requires n >= 3");
  if (m < n + 2) throw PreconditionError("invalid_parameters", "generate requires m >= n + 2");
  if (n > (std::size_t{1} << 20))
    throw PreconditionError("invalid_parameters", "generate supports at most 2^20 vertices");
  const std::size_t target = std::min<std::size_t>(m, n * (n - 1));
  Xoshiro256 rng(seed);

  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  for (std::size_t i = n - 1; i >= 1; --i) std::swap(order[i], order[rng.uniform(i + 1)]);

  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> present;
  auto add = [&](VertexId u, VertexId w) {
    if (u == w || !present.insert(detail::arc_key(u, w)).second) return false;
    arcs.push_back({u, w});
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) add(order[i], order[(i + 1) % n]);

  // A fixed attempt budget keeps the stream length independent of luck on
  // dense targets.
  for (std::size_t attempts = 64 * target + 1024; arcs.size() < target && attempts > 0; --attempts) {
    auto u = static_cast<VertexId>(rng.uniform(n));
    auto w = static_cast<VertexId>(rng.uniform(n));
    add(u, w);
  }

  Digraph g(n, arcs);
  // The Hamiltonian cycle already makes g strongly biconnected, so repair
  // rounds only run if the base construction changes.
  while (!is_strongly_biconnected(g) && arcs.size() < n * (n - 1)) {
    SbccCover cover = strongly_biconnected_components(g);
    while (true) {
      auto u = static_cast<VertexId>(rng.uniform(n));
      auto w = static_cast<VertexId>(rng.uniform(n));
      if (u != w && !cover.share_component(u, w)) {
        add(u, w);
        break;
      }
    }
    g = Digraph(n, arcs);
  }
  return g;
}

}  // namespace sbgraph
