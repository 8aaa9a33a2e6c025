#pragma once

// Edge-list files, label-space report documents (JSON and text) and DOT
// rendering.
//
// Edge-list format, one item per line (LF or CRLF):
//   # comment              ignored, also allowed after an item
//   nodes <k>              optional, before any arc: declares labels 0..k-1
//   <u> <v>                arc from label u to label v (non-negative integers)
// Labels map to dense vertex ids in order of first appearance.

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "sbgraph/b_resilience.hpp"
#include "sbgraph/digraph.hpp"

namespace sbgraph {

// ---------------------------------------------------------------------------
// Edge lists

struct EdgeListDocument {
  Digraph graph;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\f\v";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::optional<std::uint64_t> parse_u64(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace detail

inline EdgeListDocument parse_edge_list(std::string_view text) {
  EdgeListDocument doc;
  std::vector<Label> labels;
  std::unordered_map<Label, VertexId> ids;
  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> seen;
  bool header_allowed = true;

  auto id_of = [&](Label label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    auto tokens = detail::split_ws(line);
    if (tokens.front() == "nodes") {
      if (!header_allowed) throw ParseError(line_no, "'nodes' must precede every arc line");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'nodes <count>'");
      auto count = detail::parse_u64(tokens[1]);
      if (!count || *count > UINT32_MAX) throw ParseError(line_no, "invalid node count");
      for (Label l = 0; l < *count; ++l) id_of(l);
      header_allowed = false;
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two vertex labels, got " +
                                    std::to_string(tokens.size()) + " tokens");
    auto u = detail::parse_u64(tokens[0]);
    auto v = detail::parse_u64(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "vertex labels must be non-negative integers");
    if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
    header_allowed = false;
    Arc arc{id_of(*u), id_of(*v)};
    if (!seen.insert(detail::arc_key(arc.tail, arc.head)).second) {
      doc.warnings.push_back("line " + std::to_string(line_no) + ": duplicate arc " +
                             std::to_string(*u) + " " + std::to_string(*v) + " dropped");
      continue;
    }
    arcs.push_back(arc);
  }
  const std::size_t n = labels.size();
  doc.graph = Digraph(n, arcs, std::move(labels));
  return doc;
}

// Inverse of parse_edge_list up to the label-to-id mapping. Graphs whose
// labels are the identity get a 'nodes' header so isolated vertices survive.
inline std::string serialize_edge_list(const Digraph& g) {
  bool identity = true;
  for (VertexId v = 0; v < g.vertex_count() && identity; ++v) identity = g.label(v) == v;
  std::ostringstream out;
  out << "# " << g.vertex_count() << " vertices, " << g.arc_count() << " arcs\n";
  if (identity) {
    out << "nodes " << g.vertex_count() << "\n";
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.out_arcs(v).empty() && g.in_arcs(v).empty())
        throw Error("isolated vertex with label " + std::to_string(g.label(v)) +
                    " cannot be written without an identity labelling");
  }
  for (const Arc& a : g.arcs()) out << g.label(a.tail) << ' ' << g.label(a.head) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Report documents

using LabelArc = std::array<Label, 2>;

struct FailureDocument {
  std::string kind;  // NOT_STRONGLY_CONNECTED | UNDERLYING_NOT_BICONNECTED
  // [from, to] with `to` unreachable from `from`, or [cut_vertex].
  std::vector<Label> witness;

  friend bool operator==(const FailureDocument&, const FailureDocument&) = default;
};

struct ArcWitnessDocument {
  LabelArc arc;
  FailureDocument failure;

  friend bool operator==(const ArcWitnessDocument&, const ArcWitnessDocument&) = default;
};

struct VertexWitnessDocument {
  Label vertex;
  FailureDocument failure;

  friend bool operator==(const VertexWitnessDocument&, const VertexWitnessDocument&) = default;
};

struct TraceDocument {
  Label root = 0;
  std::vector<LabelArc> initial_arcs;
  std::vector<LabelArc> added_arcs;  // in the order added
  std::vector<std::size_t> component_counts;

  friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

// A BResilienceReport in label space with every list sorted ascending
// (except the trace's added_arcs, which keep their order).
struct ReportDocument {
  std::size_t n = 0;
  std::size_t m = 0;
  bool strongly_connected = false;
  bool strongly_biconnected = false;
  std::optional<FailureDocument> failure;
  std::optional<std::vector<LabelArc>> strong_bridges;
  std::optional<std::vector<Label>> strong_articulation_points;
  std::optional<std::vector<std::vector<Label>>> sbcc;
  std::optional<std::vector<LabelArc>> b_bridges;
  std::optional<std::vector<Label>> b_articulation_points;
  std::vector<ArcWitnessDocument> b_bridge_witnesses;
  std::vector<VertexWitnessDocument> b_articulation_point_witnesses;
  bool is_2edge_sb = false;
  bool is_2vertex_sb = false;
  std::vector<std::string> notes;
  std::optional<TraceDocument> trace;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline LabelArc label_arc(const Digraph& g, ArcId a) {
  return {g.label(g.arc(a).tail), g.label(g.arc(a).head)};
}

inline std::vector<LabelArc> label_arcs(const Digraph& g, std::span<const ArcId> ids) {
  std::vector<LabelArc> out;
  out.reserve(ids.size());
  for (ArcId a : ids) out.push_back(label_arc(g, a));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Label> label_vertices(const Digraph& g, std::span<const VertexId> ids) {
  std::vector<Label> out;
  out.reserve(ids.size());
  for (VertexId v : ids) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Label>> label_components(const Digraph& g, const SbccCover& cover) {
  std::vector<std::vector<Label>> out;
  for (const auto& component : cover.components) out.push_back(label_vertices(g, component));
  std::sort(out.begin(), out.end());
  return out;
}

inline FailureDocument failure_document(const Digraph& g, const Failure& failure) {
  FailureDocument doc{to_string(failure.kind), {}};
  if (const auto* pair = std::get_if<Unreachable>(&failure.witness))
    doc.witness = {g.label(pair->from), g.label(pair->to)};
  else
    doc.witness = {g.label(std::get<CutVertex>(failure.witness).vertex)};
  return doc;
}

inline TraceDocument trace_document(const Digraph& g, const AugmentationTrace& trace) {
  TraceDocument doc;
  doc.root = g.label(trace.root);
  doc.initial_arcs = label_arcs(g, trace.initial_arcs);
  for (ArcId a : trace.added_arcs) doc.added_arcs.push_back(label_arc(g, a));
  doc.component_counts = trace.component_counts;
  return doc;
}

inline ReportDocument make_report_document(const Digraph& g, const BResilienceReport& report,
                                           bool include_trace = false) {
  ReportDocument doc;
  doc.n = report.n;
  doc.m = report.m;
  doc.strongly_connected = report.strongly_connected;
  doc.strongly_biconnected = report.strongly_biconnected;
  if (report.failure) doc.failure = failure_document(g, *report.failure);
  if (report.strong_bridges) doc.strong_bridges = label_arcs(g, *report.strong_bridges);
  if (report.strong_articulation_points)
    doc.strong_articulation_points = label_vertices(g, *report.strong_articulation_points);
  if (report.sbcc) doc.sbcc = label_components(g, *report.sbcc);
  if (report.b_bridges) doc.b_bridges = label_arcs(g, *report.b_bridges);
  if (report.b_articulation_points)
    doc.b_articulation_points = label_vertices(g, *report.b_articulation_points);
  for (const auto& w : report.b_bridge_witnesses)
    doc.b_bridge_witnesses.push_back({label_arc(g, w.arc), failure_document(g, w.failure)});
  std::sort(doc.b_bridge_witnesses.begin(), doc.b_bridge_witnesses.end(),
            [](const auto& a, const auto& b) { return a.arc < b.arc; });
  for (const auto& w : report.b_articulation_point_witnesses)
    doc.b_articulation_point_witnesses.push_back(
        {g.label(w.vertex), failure_document(g, w.failure)});
  std::sort(doc.b_articulation_point_witnesses.begin(), doc.b_articulation_point_witnesses.end(),
            [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  doc.is_2edge_sb = report.is_2edge_sb;
  doc.is_2vertex_sb = report.is_2vertex_sb;
  doc.notes = report.notes;
  if (include_trace && report.trace) doc.trace = trace_document(g, *report.trace);
  return doc;
}

// JSON: object keys come out in alphabetical order (nlohmann::json sorts
// them); absent analyses are null.
inline nlohmann::json to_json(const FailureDocument& f) {
  return {{"kind", f.kind}, {"witness", f.witness}};
}

inline nlohmann::json to_json(const TraceDocument& t) {
  return {{"added_arcs", t.added_arcs},
          {"component_counts", t.component_counts},
          {"initial_arcs", t.initial_arcs},
          {"root", t.root}};
}

inline nlohmann::json to_json(const ReportDocument& r) {
  using nlohmann::json;
  auto optional = [](const auto& value) -> json {
    if (!value) return nullptr;
    return json(*value);
  };
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["strongly_connected"] = r.strongly_connected;
  j["strongly_biconnected"] = r.strongly_biconnected;
  j["failure"] = r.failure ? to_json(*r.failure) : json(nullptr);
  j["strong_bridges"] = optional(r.strong_bridges);
  j["strong_articulation_points"] = optional(r.strong_articulation_points);
  j["sbcc"] = optional(r.sbcc);
  j["b_bridges"] = optional(r.b_bridges);
  j["b_articulation_points"] = optional(r.b_articulation_points);
  j["b_bridge_witnesses"] = json::array();
  for (const auto& w : r.b_bridge_witnesses)
    j["b_bridge_witnesses"].push_back({{"arc", w.arc}, {"failure", to_json(w.failure)}});
  j["b_articulation_point_witnesses"] = json::array();
  for (const auto& w : r.b_articulation_point_witnesses)
    j["b_articulation_point_witnesses"].push_back(
        {{"vertex", w.vertex}, {"failure", to_json(w.failure)}});
  j["is_2edge_sb"] = r.is_2edge_sb;
  j["is_2vertex_sb"] = r.is_2vertex_sb;
  j["notes"] = r.notes;
  if (r.trace) j["trace"] = to_json(*r.trace);
  return j;
}

inline FailureDocument failure_from_json(const nlohmann::json& j) {
  return {j.at("kind").get<std::string>(), j.at("witness").get<std::vector<Label>>()};
}

inline ReportDocument report_from_json(const nlohmann::json& j) {
  ReportDocument r;
  auto optional = [&]<class T>(const char* key, std::optional<T>& out) {
    if (!j.at(key).is_null()) out = j.at(key).get<T>();
  };
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.strongly_connected = j.at("strongly_connected").get<bool>();
  r.strongly_biconnected = j.at("strongly_biconnected").get<bool>();
  if (!j.at("failure").is_null()) r.failure = failure_from_json(j.at("failure"));
  optional("strong_bridges", r.strong_bridges);
  optional("strong_articulation_points", r.strong_articulation_points);
  optional("sbcc", r.sbcc);
  optional("b_bridges", r.b_bridges);
  optional("b_articulation_points", r.b_articulation_points);
  for (const auto& w : j.at("b_bridge_witnesses"))
    r.b_bridge_witnesses.push_back(
        {w.at("arc").get<LabelArc>(), failure_from_json(w.at("failure"))});
  for (const auto& w : j.at("b_articulation_point_witnesses"))
    r.b_articulation_point_witnesses.push_back(
        {w.at("vertex").get<Label>(), failure_from_json(w.at("failure"))});
  r.is_2edge_sb = j.at("is_2edge_sb").get<bool>();
  r.is_2vertex_sb = j.at("is_2vertex_sb").get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("trace")) {
    const auto& t = j.at("trace");
    TraceDocument trace;
    trace.root = t.at("root").get<Label>();
    trace.initial_arcs = t.at("initial_arcs").get<std::vector<LabelArc>>();
    trace.added_arcs = t.at("added_arcs").get<std::vector<LabelArc>>();
    trace.component_counts = t.at("component_counts").get<std::vector<std::size_t>>();
    r.trace = std::move(trace);
  }
  return r;
}

// Text rendering ------------------------------------------------------------

inline std::string format_arcs(std::span<const LabelArc> arcs) {
  if (arcs.empty()) return "(none)";
  std::string out;
  for (const auto& a : arcs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a[0]) + "->" + std::to_string(a[1]);
  }
  return out;
}

inline std::string format_vertices(std::span<const Label> vertices) {
  if (vertices.empty()) return "(none)";
  std::string out;
  for (Label v : vertices) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline std::string format_components(const std::vector<std::vector<Label>>& components) {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += ' ';
    out += '{' + format_vertices(c) + '}';
  }
  return out.empty() ? "(none)" : out;
}

inline std::string format_failure(const FailureDocument& f) {
  std::string out = f.kind;
  if (f.witness.size() == 2)
    out += " (" + std::to_string(f.witness[1]) + " unreachable from " +
           std::to_string(f.witness[0]) + ")";
  else if (f.witness.size() == 1)
    out += " (cut vertex " + std::to_string(f.witness[0]) + ")";
  return out;
}

inline std::string to_text(const ReportDocument& r) {
  std::ostringstream out;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "n: " << r.n << '\n' << "m: " << r.m << '\n';
  out << "strongly_connected: " << flag(r.strongly_connected) << '\n';
  out << "strongly_biconnected: " << flag(r.strongly_biconnected) << '\n';
  if (r.failure) out << "failure: " << format_failure(*r.failure) << '\n';
  auto na = std::string("n/a");
  out << "strong_bridges: " << (r.strong_bridges ? format_arcs(*r.strong_bridges) : na) << '\n';
  out << "strong_articulation_points: "
      << (r.strong_articulation_points ? format_vertices(*r.strong_articulation_points) : na)
      << '\n';
  out << "sbcc: " << (r.sbcc ? format_components(*r.sbcc) : na) << '\n';
  out << "b_bridges: " << (r.b_bridges ? format_arcs(*r.b_bridges) : na) << '\n';
  out << "b_articulation_points: "
      << (r.b_articulation_points ? format_vertices(*r.b_articulation_points) : na) << '\n';
  out << "is_2edge_sb: " << flag(r.is_2edge_sb) << '\n';
  out << "is_2vertex_sb: " << flag(r.is_2vertex_sb) << '\n';
  for (const auto& w : r.b_bridge_witnesses)
    out << "witness " << w.arc[0] << "->" << w.arc[1] << ": " << format_failure(w.failure) << '\n';
  for (const auto& w : r.b_articulation_point_witnesses)
    out << "witness " << w.vertex << ": " << format_failure(w.failure) << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  if (r.trace) {
    out << "trace.root: " << r.trace->root << '\n';
    out << "trace.initial_arcs: " << format_arcs(r.trace->initial_arcs) << '\n';
    out << "trace.added_arcs: " << format_arcs(r.trace->added_arcs) << '\n';
    out << "trace.component_counts:";
    for (auto c : r.trace->component_counts) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {

inline std::string emit_dot(const Digraph& g, const BResilienceReport* report) {
  std::vector<char> b_bridge(g.arc_count(), 0), strong(g.arc_count(), 0);
  std::vector<char> b_point(g.vertex_count(), 0);
  if (report) {
    if (report->b_bridges)
      for (ArcId a : *report->b_bridges) b_bridge[a] = 1;
    if (report->strong_bridges)
      for (ArcId a : *report->strong_bridges) strong[a] = 1;
    if (report->b_articulation_points)
      for (VertexId v : *report->b_articulation_points) b_point[v] = 1;
  }
  std::ostringstream out;
  out << "digraph G {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.label(v) << '"';
    if (b_point[v]) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    out << "  \"" << g.label(arc.tail) << "\" -> \"" << g.label(arc.head) << '"';
    if (b_bridge[a] && strong[a])
      out << " [color=red, style=\"bold,dashed\"]";
    else if (b_bridge[a])
      out << " [color=red, style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace detail

inline std::string emit_dot(const Digraph& g) { return detail::emit_dot(g, nullptr); }

// b-bridges bold red (strong bridges also dashed), b-articulation points
// double-circled.
inline std::string emit_dot(const Digraph& g, const BResilienceReport& report) {
  return detail::emit_dot(g, &report);
}

}  // namespace sbgraph
