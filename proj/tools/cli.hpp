#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage, 2 unreadable or
// malformed input, 3 input outside an analysis' domain.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbgraph/sbgraph.hpp"

namespace sbgraph::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3 };

namespace detail {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

inline EdgeListDocument load(const std::string& path, Context& ctx) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << ctx.in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  auto doc = parse_edge_list(text);
  for (const auto& warning : doc.warnings) ctx.err << "warning: " << warning << '\n';
  return doc;
}

inline void print_arcs(Context& ctx, const Digraph& g, const char* key,
                       std::span<const ArcId> arcs, nlohmann::json extra = nlohmann::json::object()) {
  auto labelled = label_arcs(g, arcs);
  if (ctx.json()) {
    extra[key] = labelled;
    ctx.out << extra.dump() << '\n';
    return;
  }
  for (const auto& a : labelled) ctx.out << a[0] << ' ' << a[1] << '\n';
}

inline void print_vertices(Context& ctx, const Digraph& g, const char* key,
                           std::span<const VertexId> vertices) {
  auto labelled = label_vertices(g, vertices);
  if (ctx.json()) {
    ctx.out << nlohmann::json{{key, labelled}}.dump() << '\n';
    return;
  }
  for (Label v : labelled) ctx.out << v << '\n';
}

inline void print_components(Context& ctx, const Digraph& g, const SbccCover& cover) {
  auto labelled = label_components(g, cover);
  if (ctx.json()) {
    ctx.out << nlohmann::json{{"sbcc", labelled}}.dump() << '\n';
    return;
  }
  for (const auto& c : labelled) ctx.out << format_vertices(c) << '\n';
}

inline std::string describe(const FailureDocument& f) {
  if (f.kind == "NOT_STRONGLY_CONNECTED")
    return "not strongly connected (" + std::to_string(f.witness[1]) + " unreachable from " +
           std::to_string(f.witness[0]) + ")";
  return "strongly connected, underlying graph not biconnected (cut vertex " +
         std::to_string(f.witness[0]) + ")";
}

inline int check(Context& ctx, const Digraph& g) {
  auto failure = strong_biconnectivity_failure(g);
  std::optional<FailureDocument> doc;
  if (failure) doc = failure_document(g, *failure);
  bool connected = !failure || failure->kind != FailureKind::not_strongly_connected;
  if (ctx.json()) {
    nlohmann::json j{{"n", g.vertex_count()},
                     {"m", g.arc_count()},
                     {"strongly_connected", connected},
                     {"strongly_biconnected", !failure},
                     {"failure", doc ? to_json(*doc) : nlohmann::json(nullptr)}};
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << "vertices: " << g.vertex_count() << "\narcs: " << g.arc_count() << '\n';
    ctx.out << "status: " << (doc ? describe(*doc) : "strongly biconnected") << '\n';
  }
  return kOk;
}

}  // namespace detail

// Runs one invocation; `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  using detail::Context;
  Context ctx{in, out, err};
  CLI::App app{"Resilience analysis of strongly biconnected digraphs", "sbgraph"};
  app.require_subcommand(1);

  std::string input;
  bool trace = false;
  bool highlight = false;
  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  std::uint64_t gen_seed = 0;

  auto add_common = [&](CLI::App* sub, bool with_trace = false) {
    sub->add_option("input", input, "Edge-list file ('-' for stdin)")->required();
    sub->add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_trace) sub->add_flag("--trace", trace, "Include the augmentation trace");
  };

  // Each action receives the parsed graph and returns an exit code.
  std::function<int(const Digraph&)> action;

  auto* check = app.add_subcommand("check", "Report strong connectivity and biconnectivity");
  add_common(check);
  check->callback([&] { action = [&](const Digraph& g) { return detail::check(ctx, g); }; });

  auto* bb = app.add_subcommand("b-bridges", "Arcs whose removal destroys strong biconnectivity");
  add_common(bb, true);
  bb->callback([&] {
    action = [&](const Digraph& g) {
      auto result = b_bridges_fast(g);
      nlohmann::json extra = nlohmann::json::object();
      auto trace_doc = trace_document(g, result.trace);
      if (trace) extra["trace"] = to_json(trace_doc);
      detail::print_arcs(ctx, g, "b_bridges", result.b_bridges, extra);
      if (trace && !ctx.json()) {
        ctx.out << "# trace root " << trace_doc.root << ", added "
                << format_arcs(trace_doc.added_arcs) << ", component counts";
        for (auto c : trace_doc.component_counts) ctx.out << ' ' << c;
        ctx.out << '\n';
      }
      return int{kOk};
    };
  });

  auto* bap = app.add_subcommand("b-articulation-points",
                                 "Vertices whose removal destroys strong biconnectivity");
  add_common(bap);
  bap->callback([&] {
    action = [&](const Digraph& g) {
      detail::print_vertices(ctx, g, "b_articulation_points", b_articulation_points(g));
      return int{kOk};
    };
  });

  auto* sb = app.add_subcommand("strong-bridges", "Arcs whose removal destroys strong connectivity");
  add_common(sb);
  sb->callback([&] {
    action = [&](const Digraph& g) {
      detail::print_arcs(ctx, g, "strong_bridges", strong_bridges(g));
      return int{kOk};
    };
  });

  auto* sap = app.add_subcommand("strong-articulation-points",
                                 "Vertices whose removal destroys strong connectivity");
  add_common(sap);
  sap->callback([&] {
    action = [&](const Digraph& g) {
      detail::print_vertices(ctx, g, "strong_articulation_points", strong_articulation_points(g));
      return int{kOk};
    };
  });

  auto* sbcc = app.add_subcommand("sbcc", "Strongly biconnected components");
  add_common(sbcc);
  sbcc->callback([&] {
    action = [&](const Digraph& g) {
      detail::print_components(ctx, g, strongly_biconnected_components(g));
      return int{kOk};
    };
  });

  auto* analyze = app.add_subcommand("analyze", "Full resilience report");
  add_common(analyze, true);
  analyze->callback([&] {
    action = [&](const Digraph& g) {
      auto doc = make_report_document(g, classify(g), trace);
      if (ctx.json())
        ctx.out << to_json(doc).dump(2) << '\n';
      else
        ctx.out << to_text(doc);
      return int{kOk};
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference analyses");
  oracle_cmd->require_subcommand(1);
  auto add_oracle = [&](const char* name, const char* help, std::function<int(const Digraph&)> fn) {
    auto* sub = oracle_cmd->add_subcommand(name, help);
    add_common(sub);
    sub->callback([&action, fn] { action = fn; });
  };
  add_oracle("b-bridges", "Test every arc by deletion", [&](const Digraph& g) {
    detail::print_arcs(ctx, g, "b_bridges", oracle::naive_b_bridges(g));
    return int{kOk};
  });
  add_oracle("b-articulation-points", "Test every vertex by deletion", [&](const Digraph& g) {
    detail::print_vertices(ctx, g, "b_articulation_points", oracle::naive_b_articulation_points(g));
    return int{kOk};
  });
  add_oracle("strong-bridges", "Test every arc by deletion", [&](const Digraph& g) {
    detail::print_arcs(ctx, g, "strong_bridges", oracle::naive_critical_sets(g).strong_bridges);
    return int{kOk};
  });
  add_oracle("strong-articulation-points", "Test every vertex by deletion", [&](const Digraph& g) {
    detail::print_vertices(ctx, g, "strong_articulation_points",
                           oracle::naive_critical_sets(g).strong_articulation_points);
    return int{kOk};
  });
  add_oracle("sbcc", "Enumerate vertex subsets (n <= 12)", [&](const Digraph& g) {
    detail::print_components(ctx, g, oracle::naive_sbcc(g));
    return int{kOk};
  });

  auto* dot = app.add_subcommand("dot", "Render the graph in Graphviz DOT");
  dot->add_option("input", input, "Edge-list file ('-' for stdin)")->required();
  dot->add_flag("--highlight", highlight, "Mark b-bridges and b-articulation points");
  dot->callback([&] {
    action = [&](const Digraph& g) {
      ctx.out << (highlight ? emit_dot(g, classify(g)) : emit_dot(g));
      return int{kOk};
    };
  });

  bool run_gen = false;
  auto* gen = app.add_subcommand("gen", "Generate a random strongly biconnected digraph");
  gen->add_option("--n", gen_n, "Vertex count (>= 3)")->required();
  gen->add_option("--m", gen_m, "Maximum arc count (>= n + 2)")->required();
  gen->add_option("--seed", gen_seed, "64-bit seed");
  gen->callback([&] { run_gen = true; });

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto report_precondition = [&](const PreconditionError& e) {
    err << "error: " << e.what() << "\nreason: " << e.reason() << '\n';
    if (ctx.json())
      out << nlohmann::json{{"error", "precondition"}, {"reason", e.reason()}, {"message", e.what()}}
                 .dump()
          << '\n';
    return int{kPrecondition};
  };

  if (run_gen) {
    try {
      out << "# generated --n " << gen_n << " --m " << gen_m << " --seed " << gen_seed << '\n'
          << serialize_edge_list(generate(gen_n, gen_m, gen_seed));
    } catch (const PreconditionError& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    return kOk;
  }

  Digraph g;
  try {
    g = detail::load(input, ctx).graph;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
  try {
    return action(g);
  } catch (const PreconditionError& e) {
    return report_precondition(e);
  }
}

inline int run_command(const std::vector<std::string>& args) {
  return run_command(args, std::cin, std::cout, std::cerr);
}

}  // namespace sbgraph::cli
