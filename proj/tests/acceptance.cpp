// Acceptance checks AC1-AC8. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace {

using namespace sbgraph;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few mismatch descriptions of one criterion.
struct Check {
  bool ok = true;
  std::vector<std::string> problems;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

bool contains(const std::vector<ArcId>& v, ArcId a) {
  return std::find(v.begin(), v.end(), a) != v.end();
}

// The AC4/AC6 corpus: 600 instances with n in [3, 40], m in [n+2, 3n].
struct Instance {
  std::uint64_t seed;
  Digraph graph;
};

std::vector<Instance> random_suite() {
  std::vector<Instance> suite;
  Xoshiro256 pick(20240601);
  for (std::uint64_t i = 0; i < 600; ++i) {
    std::size_t n = 3 + pick.uniform(38);
    std::size_t m = n + 2 + pick.uniform(2 * n - 1);
    std::uint64_t seed = pick.next();
    suite.push_back({seed, generate(n, m, seed)});
  }
  return suite;
}

std::string where(const Instance& inst) {
  return "n=" + std::to_string(inst.graph.vertex_count()) +
         " m=" + std::to_string(inst.graph.arc_count()) + " seed=" + std::to_string(inst.seed);
}

Check ac1() {
  Check c;
  auto g = testing::fig1();
  c.expect(g.vertex_count() == 9 && g.arc_count() == 25, "fixture is not 9 vertices / 25 arcs");
  auto start = Clock::now();
  auto fast = b_bridges_fast(g);
  double elapsed = seconds_since(start);
  c.expect(strong_bridges(g).empty(), "strong bridges not empty");
  c.expect(fast.b_bridges == oracle::naive_b_bridges(g), "fast b-bridges differ from oracle");
  c.expect(contains(fast.b_bridges, testing::aid(g, 5, 6)), "(5,6) not a b-bridge");
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  return c;
}

Check ac2() {
  Check c;
  auto g = testing::fig2();
  c.expect(g.vertex_count() == 6 && g.arc_count() == 17, "fixture is not 6 vertices / 17 arcs");
  c.expect(strong_articulation_points(g).empty(), "strong articulation points not empty");
  auto points = b_articulation_points(g);
  c.expect(std::find(points.begin(), points.end(), testing::vid(g, 6)) != points.end(),
           "6 not a b-articulation point");
  c.expect(points == oracle::naive_b_articulation_points(g), "fast set differs from oracle");
  c.expect(!classify(g).is_2vertex_sb, "classify reports is_2vertex_sb");
  return c;
}

Check ac3() {
  Check c;
  auto g = testing::fig3();
  auto fast = b_bridges_fast(g);
  ArcId two_seven = testing::aid(g, 2, 7);
  ArcId five_six = testing::aid(g, 5, 6);
  c.expect(contains(fast.strong_bridges, two_seven) && contains(fast.b_bridges, two_seven),
           "(2,7) not in strong_bridges and b_bridges");
  c.expect(contains(fast.b_bridges, five_six) && !contains(fast.strong_bridges, five_six),
           "(5,6) not in b_bridges \\ strong_bridges");
  c.expect(fast.b_bridges == oracle::naive_b_bridges(g), "fast b-bridges differ from oracle");
  c.expect(fast.strong_bridges == oracle::naive_critical_sets(g).strong_bridges,
           "strong bridges differ from oracle");
  return c;
}

Check ac4(const std::vector<Instance>& suite, double& elapsed) {
  Check c;
  auto start = Clock::now();
  std::size_t vertex_cases = 0;
  for (const auto& inst : suite) {
    const auto& g = inst.graph;
    c.expect(is_strongly_biconnected(g), "generator output not SB: " + where(inst));
    c.expect(b_bridges_fast(g).b_bridges == oracle::naive_b_bridges(g),
             "b-bridges mismatch: " + where(inst));
    auto naive = oracle::naive_critical_sets(g);
    c.expect(strong_bridges(g) == naive.strong_bridges, "strong bridges mismatch: " + where(inst));
    c.expect(strong_articulation_points(g) == naive.strong_articulation_points,
             "SAP mismatch: " + where(inst));
    if (g.vertex_count() >= 4) {
      ++vertex_cases;
      c.expect(b_articulation_points(g) == oracle::naive_b_articulation_points(g),
               "b-articulation points mismatch: " + where(inst));
    }
  }
  elapsed = seconds_since(start);
  c.expect(suite.size() >= 500, "fewer than 500 instances");
  c.expect(vertex_cases > 0, "no n >= 4 instances");
  c.expect(elapsed < 60.0, "suite took " + std::to_string(elapsed) + " s");
  return c;
}

Check ac5(std::size_t& instances) {
  Check c;
  instances = 0;
  auto compare = [&](const Digraph& g, const std::string& label) {
    ++instances;
    auto fast = testing::sorted_sets(strongly_biconnected_components(g).components);
    auto naive = testing::sorted_sets(oracle::naive_sbcc(g).components);
    c.expect(fast == naive, "SBCC mismatch: " + label);
  };
  // Strongly connected graphs with cut vertices, and strongly biconnected
  // ones, so both multi- and single-component covers are exercised.
  for (std::uint64_t seed = 0; seed < 300; ++seed)
    compare(reference::random_strongly_connected(1 + seed % 10, seed % 5, seed),
            "cactus seed=" + std::to_string(seed));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::size_t n = 3 + seed % 8;
    compare(generate(n, n + 2 + seed % n, seed), "generated seed=" + std::to_string(seed));
  }
  c.expect(instances >= 200, "fewer than 200 instances");
  return c;
}

Check ac6(const std::vector<Instance>& suite) {
  Check c;
  for (const auto& inst : suite) {
    const auto& g = inst.graph;
    const std::size_t n = g.vertex_count();
    auto fast = b_bridges_fast(g);
    c.expect(std::includes(fast.b_bridges.begin(), fast.b_bridges.end(),
                           fast.strong_bridges.begin(), fast.strong_bridges.end()),
             "strong bridges not contained in b-bridges: " + where(inst));
    const auto& counts = fast.trace.component_counts;
    bool decreasing = true;
    for (std::size_t i = 1; i < counts.size(); ++i) decreasing &= counts[i] < counts[i - 1];
    c.expect(decreasing && counts.back() == 1, "component counts not strictly decreasing: " +
                                                   where(inst));
    c.expect(fast.trace.added_arcs.size() <= n - 1, "more than n-1 augmentation steps: " +
                                                        where(inst));
    auto final_arcs = fast.trace.final_arcs();
    c.expect(final_arcs.size() <= 3 * (n - 1), "|E_y| > 3(n-1): " + where(inst));

    std::vector<ArcId> outside;
    for (ArcId a = 0; a < g.arc_count(); ++a)
      if (!std::binary_search(final_arcs.begin(), final_arcs.end(), a)) outside.push_back(a);
    if (n > 12 && outside.size() > 10) {
      Xoshiro256 rng(inst.seed);
      std::shuffle(outside.begin(), outside.end(), rng);
      outside.resize(10);
    }
    for (ArcId a : outside)
      c.expect(reference::strongly_biconnected(delete_arc(g, g.arc(a))),
               "arc outside E_y is a b-bridge: " + where(inst));
  }
  return c;
}

Check ac7(std::vector<double>& times) {
  Check c;
  const std::pair<std::size_t, std::size_t> sizes[] = {{500, 5000}, {1000, 10000}, {2000, 20000}};
  times.clear();
  for (auto [n, m] : sizes) {
    auto g = generate(n, m, 7);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      auto start = Clock::now();
      auto result = b_bridges_fast(g);
      best = std::min(best, seconds_since(start));
      c.expect(result.trace.component_counts.back() == 1, "augmentation did not finish");
    }
    times.push_back(best);
  }
  for (std::size_t i = 1; i < times.size(); ++i)
    c.expect(times[i] <= 6.0 * times[i - 1],
             "ratio " + std::to_string(times[i] / times[i - 1]) + " between sizes " +
                 std::to_string(i) + " and " + std::to_string(i + 1));
  c.expect(times.back() < 30.0, "largest size took " + std::to_string(times.back()) + " s");
  return c;
}

Check ac8(const std::vector<Instance>& suite, std::size_t& graphs) {
  Check c;
  graphs = 0;
  auto compare = [&](const Digraph& g, VertexId root, const std::string& label) {
    ++graphs;
    auto tree = dominator_tree(g, root);
    auto expected = reference::fixed_point_idoms(g, root);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      c.expect(tree.idom(v) == expected[v], "idom mismatch: " + label);
    auto reach = reachable(g, root);
    if (std::count(reach.begin(), reach.end(), 1) == static_cast<long>(g.vertex_count()))
      c.expect(flowgraph_bridges(g, root) == reference::deletion_flowgraph_bridges(g, root),
               "flowgraph bridge mismatch: " + label);
  };
  for (const auto& inst : suite) {
    if (inst.graph.vertex_count() > 9) continue;
    for (VertexId r = 0; r < inst.graph.vertex_count(); ++r) {
      compare(inst.graph, r, where(inst));
      compare(reverse(inst.graph), r, "reverse " + where(inst));
    }
  }
  // Non-strongly-connected flowgraphs exercise unreachable vertices and
  // richer dominator trees.
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::size_t n = 1 + seed % 9;
    compare(reference::random_rooted(n, seed % 10, seed), 0, "rooted seed=" + std::to_string(seed));
    compare(reference::random_digraph(n, 2 * n, seed), static_cast<VertexId>(seed % n),
            "arbitrary seed=" + std::to_string(seed));
  }
  return c;
}

int report(const char* id, const Check& c, const std::string& detail) {
  std::printf("[%s] %s %s\n", c.ok ? "PASS" : "FAIL", id, detail.c_str());
  for (const auto& p : c.problems) std::printf("       %s\n", p.c_str());
  return c.ok ? 0 : 1;
}

std::string fixed(double x, int digits = 3) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, x);
  return buffer;
}

}  // namespace

int main() {
  int failures = 0;
  auto run = [&](const char* id, const std::function<int()>& body) {
    try {
      failures += body();
    } catch (const std::exception& e) {
      std::printf("[FAIL] %s exception: %s\n", id, e.what());
      ++failures;
    }
  };

  run("AC1", [] { return report("AC1", ac1(), "Figure 1: no strong bridges, b-bridge (5,6)"); });
  run("AC2", [] {
    return report("AC2", ac2(), "Figure 2: no SAPs, 6 is a b-articulation point");
  });
  run("AC3", [] {
    return report("AC3", ac3(),
                  "Figure 3: (2,7) strong and b-bridge, (5,6) b-bridge only (fixture has " +
                      std::to_string(testing::fig3().arc_count()) + " arcs)");
  });

  std::vector<Instance> suite;
  run("AC4", [&] {
    suite = random_suite();
    double elapsed = 0;
    auto c = ac4(suite, elapsed);
    return report("AC4", c,
                  std::to_string(suite.size()) + " generated graphs match the oracles in " +
                      fixed(elapsed, 2) + " s");
  });
  run("AC5", [] {
    std::size_t instances = 0;
    auto c = ac5(instances);
    return report("AC5", c, std::to_string(instances) + " strongly connected graphs, n <= 10");
  });
  run("AC6", [&] {
    return report("AC6", ac6(suite), "augmentation properties on " + std::to_string(suite.size()) +
                                         " graphs");
  });
  run("AC7", [] {
    std::vector<double> times;
    auto c = ac7(times);
    std::string detail = "best-of-3 seconds at n=500/1000/2000:";
    for (double t : times) detail += " " + fixed(t);
    return report("AC7", c, detail);
  });
  run("AC8", [&] {
    std::size_t graphs = 0;
    auto c = ac8(suite, graphs);
    return report("AC8", c, std::to_string(graphs) + " dominator trees against fixed point");
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
