#include "surfcut/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "surfcut/error.hpp"

namespace surfcut {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  EmbeddedGraph run() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      line_ = line_no;
      handle(split(text_.substr(pos, end - pos)));
      pos = end + 1;
    }
    if (!header_) fail(1, 1, "missing 'multicut 1' header");
    if (!have_vertices_) fail(line_, 1, "missing 'vertices' line");
    for (int v = 0; v < graph_.vertex_count; ++v)
      if (!rotated_[v]) fail(line_, 1, "no rotation for vertex " + std::to_string(v));
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(int line, int column, const std::string& what) {
    throw ParseError(line, column, what);
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) { fail(line_, t.column, what); }

  static std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
      out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    return out;
  }

  std::int64_t integer(const Token& t, const std::string& field) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail(t, field + ": expected an integer, got '" + std::string(t.text) + "'");
    return value;
  }

  int vertex(const Token& t, const std::string& field) {
    std::int64_t v = integer(t, field);
    if (v < 0 || v >= graph_.vertex_count) fail(t, field + ": vertex " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  }

  void arity(const std::vector<Token>& tokens, std::size_t low, std::size_t high) {
    if (tokens.size() < low || tokens.size() > high)
      fail(tokens[0], std::string(tokens[0].text) + ": wrong number of fields");
  }

  void handle(const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    const std::string_view key = tokens[0].text;
    if (!header_) {
      if (key != "multicut") fail(tokens[0], "expected 'multicut 1' header");
      arity(tokens, 2, 2);
      if (integer(tokens[1], "version") != 1) fail(tokens[1], "version: only version 1 is supported");
      header_ = true;
      return;
    }
    if (key == "vertices") {
      arity(tokens, 2, 2);
      if (have_vertices_) fail(tokens[0], "vertices: declared twice");
      std::int64_t n = integer(tokens[1], "vertices");
      if (n < 1) fail(tokens[1], "vertices: must be positive");
      graph_.vertex_count = static_cast<int>(n);
      graph_.rotation.assign(n, {});
      rotated_.assign(n, 0);
      have_vertices_ = true;
      return;
    }
    if (!have_vertices_) fail(tokens[0], "'vertices' must come before '" + std::string(key) + "'");
    if (key == "edge") {
      arity(tokens, 5, 6);
      Edge e;
      e.name = std::string(tokens[1].text);
      if (edge_id_.count(e.name)) fail(tokens[1], "edge: name '" + e.name + "' used twice");
      e.u = vertex(tokens[2], "edge u");
      e.v = vertex(tokens[3], "edge v");
      e.weight = integer(tokens[4], "edge weight");
      if (e.weight < 0) fail(tokens[4], "edge weight: must be nonnegative");
      if (tokens.size() == 6) {
        std::int64_t s = integer(tokens[5], "edge sign");
        if (s != 1 && s != -1) fail(tokens[5], "edge sign: must be 1 or -1");
        e.sign = static_cast<int>(s);
      }
      edge_id_[e.name] = graph_.edge_count();
      graph_.edges.push_back(std::move(e));
    } else if (key == "rotation") {
      arity(tokens, 2, 1 << 20);
      const int v = vertex(tokens[1], "rotation vertex");
      if (rotated_[v]) fail(tokens[1], "rotation: vertex " + std::to_string(v) + " listed twice");
      rotated_[v] = 1;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.text.size() < 2 || (t.text[0] != '+' && t.text[0] != '-'))
          fail(t, "rotation dart: expected +name or -name, got '" + std::string(t.text) + "'");
        auto it = edge_id_.find(std::string(t.text.substr(1)));
        if (it == edge_id_.end()) fail(t, "rotation dart: unknown edge '" + std::string(t.text.substr(1)) + "'");
        const int dart = 2 * it->second + (t.text[0] == '-' ? 1 : 0);
        if (!darts_.insert(dart).second) fail(t, "rotation dart: '" + std::string(t.text) + "' listed twice");
        if (graph_.dart_vertex(dart) != v)
          fail(t, "rotation dart: '" + std::string(t.text) + "' does not end at vertex " + std::to_string(v));
        graph_.rotation[v].push_back(dart);
      }
    } else if (key == "terminals") {
      arity(tokens, 1, 1 << 20);
      if (have_terminals_) fail(tokens[0], "terminals: declared twice");
      have_terminals_ = true;
      std::set<int> seen;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const int t = vertex(tokens[i], "terminals");
        if (!seen.insert(t).second) fail(tokens[i], "terminals: vertex " + std::to_string(t) + " listed twice");
        graph_.terminals.push_back(t);
      }
    } else if (key == "pair") {
      arity(tokens, 3, 3);
      const int a = vertex(tokens[1], "pair");
      const int b = vertex(tokens[2], "pair");
      if (!graph_.is_terminal(a)) fail(tokens[1], "pair: vertex " + std::to_string(a) + " is not a terminal");
      if (!graph_.is_terminal(b)) fail(tokens[2], "pair: vertex " + std::to_string(b) + " is not a terminal");
      if (a == b) fail(tokens[2], "pair: terminals must differ");
      graph_.pairs.emplace_back(a, b);
    } else {
      fail(tokens[0], "unknown field '" + std::string(key) + "'");
    }
  }

  std::string_view text_;
  int line_ = 0;
  bool header_ = false;
  bool have_vertices_ = false;
  bool have_terminals_ = false;
  EmbeddedGraph graph_;
  std::vector<char> rotated_;
  std::map<std::string, int> edge_id_;
  std::set<int> darts_;
};

std::string dart_name(const EmbeddedGraph& graph, int dart) {
  return (dart_end(dart) == 0 ? "+" : "-") + graph.edges[dart_edge(dart)].name;
}

// The JSON encoding is turned into text lines so that both encodings share
// one set of checks.
std::string json_to_text(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, "invalid JSON");
  }
  auto field = [&](const char* name) -> const json& {
    if (!doc.is_object() || !doc.contains(name)) throw ParseError(1, 1, std::string("missing field '") + name + "'");
    return doc.at(name);
  };
  std::ostringstream out;
  try {
    out << "multicut " << field("version").get<std::int64_t>() << "\n";
    out << "vertices " << field("vertices").get<std::int64_t>() << "\n";
    for (const auto& e : field("edges")) {
      out << "edge " << e.at("name").get<std::string>() << " " << e.at("u").get<std::int64_t>() << " "
          << e.at("v").get<std::int64_t>() << " " << e.at("weight").get<std::int64_t>();
      if (e.contains("sign")) out << " " << e.at("sign").get<std::int64_t>();
      out << "\n";
    }
    const auto& rotation = field("rotation");
    for (std::size_t v = 0; v < rotation.size(); ++v) {
      out << "rotation " << v;
      for (const auto& d : rotation[v]) out << " " << d.get<std::string>();
      out << "\n";
    }
    if (doc.contains("terminals")) {
      out << "terminals";
      for (const auto& t : doc.at("terminals")) out << " " << t.get<std::int64_t>();
      out << "\n";
    }
    if (doc.contains("pairs")) {
      for (const auto& p : doc.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw ParseError(1, 1, "pairs: each pair needs two vertices");
        out << "pair " << p[0].get<std::int64_t>() << " " << p[1].get<std::int64_t>() << "\n";
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(1, 1, std::string("malformed field: ") + e.what());
  }
  return out.str();
}

}  // namespace

EmbeddedGraph parse_instance(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    const std::string converted = json_to_text(text);
    return TextParser(converted).run();
  }
  return TextParser(text).run();
}

std::string write_instance(const EmbeddedGraph& graph) {
  std::ostringstream out;
  out << "multicut 1\n";
  out << "vertices " << graph.vertex_count << "\n";
  for (const auto& e : graph.edges) {
    out << "edge " << e.name << " " << e.u << " " << e.v << " " << e.weight;
    if (e.sign != 1) out << " " << e.sign;
    out << "\n";
  }
  for (int v = 0; v < graph.vertex_count; ++v) {
    out << "rotation " << v;
    for (int d : graph.rotation[v]) out << " " << dart_name(graph, d);
    out << "\n";
  }
  if (!graph.terminals.empty()) {
    out << "terminals";
    for (int t : graph.terminals) out << " " << t;
    out << "\n";
  }
  for (const auto& [a, b] : graph.pairs) out << "pair " << a << " " << b << "\n";
  return out.str();
}

std::string render_result(const EmbeddedGraph& graph, const SolveReport& report,
                          OutputFormat format, bool with_time) {
  const auto& r = report.result;
  if (format == OutputFormat::kDot) {
    std::set<int> cut(r.edges.begin(), r.edges.end());
    std::ostringstream out;
    out << "graph multicut {\n";
    out << "  label=\"weight " << r.weight << "\";\n";
    for (int v = 0; v < graph.vertex_count; ++v) {
      out << "  v" << v;
      if (graph.is_terminal(v)) out << " [shape=doublecircle]";
      out << ";\n";
    }
    for (int e = 0; e < graph.edge_count(); ++e) {
      const auto& edge = graph.edges[e];
      out << "  v" << edge.u << " -- v" << edge.v << " [label=\"" << edge.name << ":" << edge.weight << "\"";
      if (cut.count(e)) out << ", color=red, penwidth=3";
      out << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  using nlohmann::ordered_json;
  ordered_json doc;
  doc["weight"] = r.weight;
  ordered_json names = ordered_json::array();
  for (int e : r.edges) names.push_back(graph.edges[e].name);
  doc["edges"] = names;
  doc["edge_ids"] = r.edges;
  if (r.certificate) {
    ordered_json crossings = ordered_json::object();
    for (int e = 0; e < graph.edge_count(); ++e)
      if (r.certificate->crossings[e] > 0) crossings[graph.edges[e].name] = r.certificate->crossings[e];
    doc["certificate"] = {{"topology", r.certificate->topology}, {"crossings", crossings}};
  }
  const auto& s = report.stats;
  ordered_json stats;
  stats["genus"] = s.genus;
  stats["terminals"] = s.terminals;
  stats["cut_edges"] = s.cut_edges;
  stats["disk_faces"] = s.disk_faces;
  stats["bounds"] = {{"tree", s.bound_tree}, {"cross", s.bound_cross}, {"vert", s.bound_vert},
                     {"points", s.bound_points}};
  stats["partitions"] = s.partitions;
  stats["valid"] = s.valid;
  stats["minimal"] = s.minimal;
  stats["enumerated"] = s.enumerated;
  stats["topology_cap"] = s.topology_cap;
  stats["within_cap"] = static_cast<double>(s.enumerated) <= s.topology_cap;
  stats["solved"] = s.solved;
  stats["pruned"] = s.pruned;
  stats["best_topology"] = s.best_topology;
  stats["max_width"] = s.max_width;
  stats["dp_states"] = s.dp_states;
  if (with_time) stats["seconds"] = s.seconds;
  doc["stats"] = stats;
  if (report.oracle_weight) doc["oracle_weight"] = *report.oracle_weight;
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

}  // namespace surfcut
