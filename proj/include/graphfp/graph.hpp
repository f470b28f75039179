#ifndef GRAPHFP_GRAPH_HPP
#define GRAPHFP_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace graphfp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string rng;
};

struct Edge {
  std::string id;
  VertexId src;
  VertexId rng;
};

/// Finite directed graph. Vertices and edges keep document order; their
/// position in that order is their id.
class DirectedGraph {
 public:
  /// @throw Error(DuplicateId) if an id repeats (vertex and edge ids share
  ///        one namespace so that path strings are unambiguous)
  /// @throw Error(DanglingEndpoint) if an edge names an undeclared vertex
  /// @throw Error(EmptyGraph) if there are no vertices
  DirectedGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// @throw Error(UnknownVertex)
  VertexId vertex(std::string_view name) const;

  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(v); }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// Element of the free semigroupoid: a vertex, or a nonempty admissible
/// edge word. Carries its own source and range so path arithmetic needs no
/// graph.
class Path {
 public:
  static Path vertex(VertexId v) { return Path({v}, {}); }

  /// @throw Error(Inadmissible) if consecutive edges do not chain, or
  ///        Error(UnknownPath) if @p edges is empty
  static Path from_edges(const DirectedGraph& g, std::vector<EdgeId> edges);

  VertexId source() const { return verts_.front(); }
  VertexId range() const { return verts_.back(); }
  /// s(e_1), r(e_1), ..., r(e_k)
  const std::vector<VertexId>& visited() const { return verts_; }
  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }
  const std::vector<EdgeId>& edges() const { return edges_; }

  /// If this path is p.q for some q, returns q (a vertex when q is empty).
  std::optional<Path> strip_prefix(const Path& p) const;

  /// If this path is q.p for some q, returns q.
  std::optional<Path> strip_suffix(const Path& p) const;

  /// Drops the last @p k edges (k <= length()).
  Path drop_back(std::size_t k) const;

  /// Vertices first (by id), then by length, then lexicographically by edge
  /// ids.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) = default;

 private:
  Path(std::vector<VertexId> verts, std::vector<EdgeId> edges)
      : verts_(std::move(verts)), edges_(std::move(edges)) {}

  friend std::optional<Path> concat(const Path& p, const Path& q);

  std::vector<VertexId> verts_;
  std::vector<EdgeId> edges_;
};

/// Product in the free semigroupoid; nullopt when r(p) != s(q).
std::optional<Path> concat(const Path& p, const Path& q);

/// Vertices visited and edges traversed, without multiplicity.
struct Diagram {
  std::set<VertexId> vertices;
  std::set<EdgeId> edges;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;
};

Diagram diagram(const DirectedGraph& g, const Path& w);

bool diagram_distinct(const DirectedGraph& g, const Path& w1, const Path& w2);

/// All of F+(G) up to length @p max_len in Path order.
std::vector<Path> enumerate_semigroupoid(const DirectedGraph& g, std::size_t max_len);

/// Nonvertex paths w with s(w) = r(w) = v and |w| <= max_len.
/// @throw Error(UnknownVertex)
std::vector<Path> loops_at(const DirectedGraph& g, VertexId v, std::size_t max_len);

/// Nonvertex paths from @p from to @p to with |w| <= max_len.
/// @throw Error(UnknownVertex)
std::vector<Path> paths_from_to(const DirectedGraph& g, VertexId from, VertexId to,
                                std::size_t max_len);

/// "v" for a vertex, "e1.e2" for an edge word.
std::string format_path(const DirectedGraph& g, const Path& w);

/// Inverse of format_path.
/// @throw Error(UnknownPath) or Error(Inadmissible)
Path parse_path(const DirectedGraph& g, std::string_view text);

}  // namespace graphfp

#endif  // GRAPHFP_GRAPH_HPP
