#include "graphfp/io.hpp"

#include <fstream>

#include "graphfp/error.hpp"

namespace graphfp {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorKind::Parse, std::string("missing key '") + key + "'");
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_string()) throw Error(ErrorKind::Parse, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

Scalar parse_coefficient(const std::string& re, const std::string& im) {
  try {
    return Scalar::parse(re, im);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + file.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "'" + file.string() + "': " + e.what());
  }
}

DirectedGraph load_graph(const json& doc) {
  const auto& vs = require(doc, "vertices");
  if (!vs.is_array()) throw Error(ErrorKind::Parse, "'vertices' must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) throw Error(ErrorKind::Parse, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    const auto& es = doc.at("edges");
    if (!es.is_array()) throw Error(ErrorKind::Parse, "'edges' must be an array");
    for (const auto& e : es)
      edges.push_back({require_string(e, "id"), require_string(e, "src"), require_string(e, "rng")});
  }
  return DirectedGraph(std::move(vertices), edges);
}

DirectedGraph load_graph_file(const std::filesystem::path& file) {
  return load_graph(read_json_file(file));
}

json graph_to_json(const DirectedGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.vertex_name(v));
  doc["edges"] = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    doc["edges"].push_back(
        {{"id", edge.id}, {"src", g.vertex_name(edge.src)}, {"rng", g.vertex_name(edge.rng)}});
  }
  return doc;
}

FourierExpr parse_element(const DirectedGraph& g, const json& doc) {
  const auto& terms = require(doc, "terms");
  if (!terms.is_array()) throw Error(ErrorKind::Parse, "'terms' must be an array");
  FourierExpr a;
  for (const auto& t : terms) {
    auto path = parse_path(g, require_string(t, "path"));
    bool star = false;
    if (t.contains("star")) {
      if (!t.at("star").is_boolean()) throw Error(ErrorKind::Parse, "'star' must be a boolean");
      star = t.at("star").get<bool>();
    }
    std::string re = t.contains("re") ? require_string(t, "re") : "0";
    std::string im = t.contains("im") ? require_string(t, "im") : "0";
    a.add(star ? Letter::annihilate(std::move(path)) : Letter::create(std::move(path)),
          parse_coefficient(re, im));
  }
  return a;
}

FourierExpr load_element_file(const DirectedGraph& g, const std::filesystem::path& file) {
  return parse_element(g, read_json_file(file));
}

json element_to_json(const DirectedGraph& g, const FourierExpr& a) {
  json doc;
  doc["terms"] = json::array();
  for (const auto& [l, p] : a.terms()) {
    doc["terms"].push_back({{"path", format_path(g, l.path())},
                            {"star", l.star()},
                            {"re", p.re().get_str()},
                            {"im", p.im().get_str()}});
  }
  return doc;
}

json diagonal_to_json(const DirectedGraph& g, const DiagonalElement& d) {
  json doc = json::object();
  for (const auto& [v, q] : d.terms())
    doc[g.vertex_name(v)] = {{"re", q.re().get_str()}, {"im", q.im().get_str()}};
  return doc;
}

}  // namespace graphfp
