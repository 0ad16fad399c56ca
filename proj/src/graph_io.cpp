#include "wti/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wti {

namespace {

std::uint64_t parse_weight(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer() || j.is_number_float())
    fail(errc::parse_error, "weight of " + where + " must be an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  auto w = j.get<std::int64_t>();
  if (w <= 0) fail(errc::nonpositive_weight, where + " has weight " + std::to_string(w));
  return static_cast<std::uint64_t>(w);
}

} // namespace

WeightedGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, e.what()); // message carries the byte position
  }
  if (!doc.is_object()) fail(errc::parse_error, "top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    fail(errc::parse_error, "missing \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) fail(errc::parse_error, "vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  if (vertices.empty()) fail(errc::parse_error, "no vertices declared");
  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail(errc::parse_error, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("w"))
        fail(errc::parse_error, "each edge needs \"u\", \"v\", \"w\"");
      if (!e["u"].is_string() || !e["v"].is_string())
        fail(errc::parse_error, "edge endpoints must be strings");
      EdgeSpec spec;
      spec.u = e["u"].get<std::string>();
      spec.v = e["v"].get<std::string>();
      spec.w = parse_weight(e["w"], "edge " + spec.u + " " + spec.v);
      edges.push_back(std::move(spec));
    }
  }
  return WeightedGraph::build(vertices, edges);
}

WeightedGraph parse_graph_text(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  auto declare = [&](const std::string& label) {
    for (const std::string& v : vertices)
      if (v == label) return;
    vertices.push_back(label);
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok.size() == 1) {
      declare(tok[0]);
      continue;
    }
    if (tok.size() != 3)
      fail(errc::parse_error, "line " + std::to_string(lineno) +
                                  ": expected \"u v w\" or a single vertex label");
    std::uint64_t w = 0;
    try {
      std::size_t pos = 0;
      long long sw = std::stoll(tok[2], &pos);
      if (pos != tok[2].size()) throw std::invalid_argument(tok[2]);
      if (sw <= 0)
        fail(errc::nonpositive_weight,
             "line " + std::to_string(lineno) + ": weight " + tok[2]);
      w = static_cast<std::uint64_t>(sw);
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error,
           "line " + std::to_string(lineno) + ": bad weight '" + tok[2] + "'");
    }
    declare(tok[0]);
    declare(tok[1]);
    edges.push_back(EdgeSpec{tok[0], tok[1], w});
  }
  if (vertices.empty()) fail(errc::parse_error, "no vertices declared");
  return WeightedGraph::build(vertices, edges);
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  fail(errc::parse_error, "'" + path + "' is empty");
}

std::string to_json(const WeightedGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const WeightedEdge& e : g.edges()) {
    nlohmann::ordered_json je;
    je["u"] = g.label(e.u);
    je["v"] = g.label(e.v);
    je["w"] = e.w;
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

std::string to_text(const WeightedGraph& g) {
  std::ostringstream out;
  std::vector<char> touched(g.vertex_count(), 0);
  for (const WeightedEdge& e : g.edges()) {
    touched[e.u.index] = touched[e.v.index] = 1;
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.w << '\n';
  }
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
    if (!touched[i]) out << g.labels()[i] << '\n';
  return out.str();
}

} // namespace wti
