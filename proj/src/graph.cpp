#include "graphfp/graph.hpp"

#include <algorithm>

#include "graphfp/error.hpp"

namespace graphfp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::Inadmissible: return "Inadmissible";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownPath: return "UnknownPath";
    case ErrorKind::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::TruncationRisk: return "TruncationRisk";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

DirectedGraph::DirectedGraph(std::vector<std::string> vertices,
                             const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second)
      throw Error(ErrorKind::DuplicateId, "vertex '" + vertices_[v] + "'");
  }
  out_.resize(vertices_.size());
  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (vertex_index_.contains(spec.id) || edge_index_.contains(spec.id))
      throw Error(ErrorKind::DuplicateId, "edge '" + spec.id + "'");
    auto src = find_vertex(spec.src);
    auto rng = find_vertex(spec.rng);
    if (!src || !rng)
      throw Error(ErrorKind::DanglingEndpoint,
                  "edge '" + spec.id + "' references undeclared vertex '" +
                      (src ? spec.rng : spec.src) + "'");
    auto id = static_cast<EdgeId>(edges_.size());
    edge_index_.emplace(spec.id, id);
    edges_.push_back(Edge{spec.id, *src, *rng});
    out_[*src].push_back(id);
  }
}

std::optional<VertexId> DirectedGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> DirectedGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId DirectedGraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorKind::UnknownVertex, "'" + std::string(name) + "'");
  return *v;
}

Path Path::from_edges(const DirectedGraph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw Error(ErrorKind::UnknownPath, "empty edge word");
  for (EdgeId e : edges) {
    if (e >= g.edge_count())
      throw Error(ErrorKind::UnknownPath, "edge index out of range");
  }
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (g.edge(edges[i - 1]).rng != g.edge(edges[i]).src)
      throw Error(ErrorKind::Inadmissible, "edges '" + g.edge(edges[i - 1]).id +
                                               "' and '" + g.edge(edges[i]).id +
                                               "' do not chain");
  }
  std::vector<VertexId> verts{g.edge(edges.front()).src};
  for (EdgeId e : edges) verts.push_back(g.edge(e).rng);
  return Path(std::move(verts), std::move(edges));
}

std::optional<Path> Path::strip_prefix(const Path& p) const {
  if (p.source() != source()) return std::nullopt;
  if (p.length() > length() || !std::equal(p.edges_.begin(), p.edges_.end(), edges_.begin()))
    return std::nullopt;
  return Path(std::vector<VertexId>(verts_.begin() + p.length(), verts_.end()),
              std::vector<EdgeId>(edges_.begin() + p.length(), edges_.end()));
}

std::optional<Path> Path::strip_suffix(const Path& p) const {
  if (p.range() != range()) return std::nullopt;
  if (p.length() > length() ||
      !std::equal(p.edges_.rbegin(), p.edges_.rend(), edges_.rbegin()))
    return std::nullopt;
  return drop_back(p.length());
}

Path Path::drop_back(std::size_t k) const {
  return Path(std::vector<VertexId>(verts_.begin(), verts_.end() - k),
              std::vector<EdgeId>(edges_.begin(), edges_.end() - k));
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (a.is_vertex() != b.is_vertex()) return a.is_vertex() ? std::strong_ordering::less
                                                           : std::strong_ordering::greater;
  if (a.is_vertex()) return a.source() <=> b.source();
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.edges_ <=> b.edges_;
}

std::optional<Path> concat(const Path& p, const Path& q) {
  if (p.range() != q.source()) return std::nullopt;
  if (p.is_vertex()) return q;
  if (q.is_vertex()) return p;
  std::vector<EdgeId> edges = p.edges_;
  edges.insert(edges.end(), q.edges_.begin(), q.edges_.end());
  std::vector<VertexId> verts = p.verts_;
  verts.insert(verts.end(), q.verts_.begin() + 1, q.verts_.end());
  return Path(std::move(verts), std::move(edges));
}

Diagram diagram(const DirectedGraph& g, const Path& w) {
  (void)g;
  return Diagram{{w.visited().begin(), w.visited().end()}, {w.edges().begin(), w.edges().end()}};
}

bool diagram_distinct(const DirectedGraph& g, const Path& w1, const Path& w2) {
  return diagram(g, w1) != diagram(g, w2);
}

std::vector<Path> enumerate_semigroupoid(const DirectedGraph& g, std::size_t max_len) {
  std::vector<Path> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(Path::vertex(v));
  if (max_len == 0) return out;

  // Extending a lexicographically sorted level by out-edges in id order keeps
  // the next level sorted.
  std::vector<Path> level;
  for (EdgeId e = 0; e < g.edge_count(); ++e) level.push_back(Path::from_edges(g, {e}));
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& w : level) {
      for (EdgeId e : g.out_edges(w.range())) {
        next.push_back(*concat(w, Path::from_edges(g, {e})));
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

void check_vertex(const DirectedGraph& g, VertexId v) {
  if (v >= g.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v));
}

}  // namespace

std::vector<Path> loops_at(const DirectedGraph& g, VertexId v, std::size_t max_len) {
  return paths_from_to(g, v, v, max_len);
}

std::vector<Path> paths_from_to(const DirectedGraph& g, VertexId from, VertexId to,
                                std::size_t max_len) {
  check_vertex(g, from);
  check_vertex(g, to);
  std::vector<Path> out;
  for (auto& w : enumerate_semigroupoid(g, max_len)) {
    if (!w.is_vertex() && w.source() == from && w.range() == to) out.push_back(std::move(w));
  }
  return out;
}

std::string format_path(const DirectedGraph& g, const Path& w) {
  if (w.is_vertex()) return g.vertex_name(w.source());
  std::string s;
  for (EdgeId e : w.edges()) {
    if (!s.empty()) s += '.';
    s += g.edge(e).id;
  }
  return s;
}

Path parse_path(const DirectedGraph& g, std::string_view text) {
  if (text.find('.') == std::string_view::npos) {
    if (auto v = g.find_vertex(text)) return Path::vertex(*v);
  }
  std::vector<EdgeId> edges;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto token = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
    auto e = g.find_edge(token);
    if (!e) throw Error(ErrorKind::UnknownPath, "'" + std::string(token) + "' in '" +
                                                   std::string(text) + "'");
    edges.push_back(*e);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Path::from_edges(g, std::move(edges));
}

}  // namespace graphfp
