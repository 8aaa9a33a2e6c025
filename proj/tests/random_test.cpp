#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace sbgraph {
namespace {

TEST(SplitMix64, ReferenceOutputs) {
  // First outputs for seed 0 from the published reference implementation.
  SplitMix64 mix(0);
  EXPECT_EQ(mix.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(mix.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(mix.next(), 0x06C45D188009454FULL);
}

TEST(Xoshiro256, DeterministicAndUsableAsUrbg) {
  Xoshiro256 a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(Xoshiro256(42).next(), c.next());
  Xoshiro256 rng(7);
  std::uniform_int_distribution<int> dist(0, 9);
  for (int i = 0; i < 100; ++i) {
    int x = dist(rng);
    EXPECT_GE(x, 0);
    EXPECT_LE(x, 9);
  }
}

TEST(Xoshiro256, UniformStaysInRangeAndHitsEveryValue) {
  Xoshiro256 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    auto x = rng.uniform(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(rng.uniform(1), 0u);
}

TEST(Generate, SizesAndStrongBiconnectivity) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::size_t n = 3 + seed % 30;
    std::size_t m = n + 2 + seed % (2 * n);
    auto g = generate(n, m, seed);
    EXPECT_EQ(g.vertex_count(), n);
    EXPECT_EQ(g.arc_count(), std::min(m, n * (n - 1)));
    EXPECT_EQ(g.duplicates_dropped(), 0u);
    EXPECT_TRUE(reference::strongly_biconnected(g)) << "seed " << seed;
  }
}

TEST(Generate, Reproducible) {
  EXPECT_EQ(generate(20, 50, 9), generate(20, 50, 9));
  EXPECT_NE(generate(20, 50, 9), generate(20, 50, 10));
}

TEST(Generate, CapsAtCompleteDigraph) {
  auto g = generate(4, 100, 3);
  EXPECT_EQ(g.arc_count(), 12u);
}

TEST(Generate, FirstNArcsFormHamiltonianCycle) {
  auto g = generate(10, 25, 5);
  std::vector<int> out(10, 0), in(10, 0);
  for (ArcId a = 0; a < 10; ++a) {
    ++out[g.arc(a).tail];
    ++in[g.arc(a).head];
  }
  for (int v = 0; v < 10; ++v) {
    EXPECT_EQ(out[v], 1);
    EXPECT_EQ(in[v], 1);
  }
  EXPECT_TRUE(reference::strongly_connected(Digraph(10, std::span(g.arcs()).first(10))));
}

TEST(Generate, RejectsInvalidParameters) {
  EXPECT_THROW(generate(2, 10, 0), PreconditionError);
  EXPECT_THROW(generate(5, 6, 0), PreconditionError);
}

}  // namespace
}  // namespace sbgraph
