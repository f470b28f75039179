#include "graphfp/compress.hpp"

#include <algorithm>

#include "graphfp/error.hpp"

namespace graphfp {

VertexSet::VertexSet(const DirectedGraph& g, std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::SizeOutOfRange, "empty vertex set");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] >= g.vertex_count())
      throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(vertices_[i]));
    if (std::find(vertices_.begin(), vertices_.begin() + i, vertices_[i]) !=
        vertices_.begin() + i)
      throw Error(ErrorKind::DuplicateId, "vertex '" + g.vertex_name(vertices_[i]) +
                                              "' listed twice");
  }
}

bool VertexSet::contains(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

DiagonalElement VertexSet::projection() const {
  DiagonalElement p;
  for (VertexId v : vertices_) p.add(v, Scalar(1));
  return p;
}

// L_u L_w^{u_w} L_u survives iff w = u w u, for vertices and both letter kinds.
FourierExpr diagonal_compress(const FourierExpr& a, const VertexSet& V) {
  FourierExpr out;
  for (const auto& [l, p] : a.terms()) {
    const Path& w = l.path();
    if (w.source() == w.range() && V.contains(w.source())) out.add(l, p);
  }
  return out;
}

FourierExpr off_diagonal_compress(const FourierExpr& a, VertexId v1, VertexId v2) {
  if (v1 == v2)
    throw Error(ErrorKind::SameVertex, "off-diagonal compression needs two distinct vertices");
  FourierExpr out;
  for (const auto& [l, p] : a.terms()) {
    if (l.is_vertex()) continue;
    const Path& w = l.path();
    // L_w* = L_{r(w)} L_w* L_{s(w)}, so the annihilation side needs w = v2 w v1.
    bool keep = l.star() ? (w.source() == v2 && w.range() == v1)
                         : (w.source() == v1 && w.range() == v2);
    if (keep) out.add(l, p);
  }
  return out;
}

ProjectionParts projection_compress(const FourierExpr& a, const VertexSet& V) {
  ProjectionParts parts;
  parts.diag = diagonal_compress(a, V);
  for (VertexId vi : V.vertices())
    for (VertexId vj : V.vertices())
      if (vi != vj) parts.offdiag += off_diagonal_compress(a, vi, vj);
  parts.full = parts.diag + parts.offdiag;
  return parts;
}

bool check_offdiag_vanishing(const DirectedGraph& g, const FourierExpr& a, VertexId v1,
                             VertexId v2, int n_max, const DiagonalSampler& samples,
                             Model model) {
  (void)g;
  auto x = off_diagonal_compress(a, v1, v2);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& tuple : samples(n)) {
      MomentArgs args;
      for (int i = 0; i < n; ++i) args.push_back({tuple[i], x});
      if (!expectation_of_product(args, model).is_zero()) return false;
      if (!cumulant(args, model).is_zero()) return false;
    }
  }
  return true;
}

const char* to_string(Freeness f) { return f == Freeness::Free ? "Free" : "Unknown"; }

namespace {

// First pair (x, y) in X x Y with equal diagrams.
std::optional<std::pair<Path, Path>> shared_diagram(const DirectedGraph& g,
                                                    const std::set<Path>& X,
                                                    const std::set<Path>& Y) {
  for (const auto& x : X)
    for (const auto& y : Y)
      if (!diagram_distinct(g, x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

std::string shared_reason(const DirectedGraph& g, const char* what,
                          const std::pair<Path, Path>& pair) {
  return std::string(what) + ": " + format_path(g, pair.first) + " and " +
         format_path(g, pair.second) + " have the same diagram";
}

std::set<VertexId> vertices_in(const FourierExpr& a, const VertexSet& V) {
  std::set<VertexId> out;
  for (VertexId v : support(a).vertices)
    if (V.contains(v)) out.insert(v);
  return out;
}

std::optional<VertexId> common_vertex(const std::set<VertexId>& x, const std::set<VertexId>& y) {
  for (VertexId v : x)
    if (y.contains(v)) return v;
  return std::nullopt;
}

FreenessVerdict free_with(std::string reason) { return {Freeness::Free, std::move(reason)}; }
FreenessVerdict unknown_with(std::string reason) {
  return {Freeness::Unknown, std::move(reason)};
}

// Loops and non-loop paths of an already compressed element must be
// diagram-distinct across the two sides; reports the first offending pair.
std::optional<std::string> compressed_conflict(const DirectedGraph& g, const FourierExpr& x,
                                               const FourierExpr& y) {
  auto split = [](const FourierExpr& e) {
    std::pair<std::set<Path>, std::set<Path>> out;  // loops, non-loops
    for (const auto& w : support(e).paths())
      (w.source() == w.range() ? out.first : out.second).insert(w);
    return out;
  };
  auto [x_loops, x_other] = split(x);
  auto [y_loops, y_other] = split(y);
  if (auto p = shared_diagram(g, x_loops, y_loops)) return shared_reason(g, "loop families", *p);
  if (auto p = shared_diagram(g, x_other, y_other))
    return shared_reason(g, "non-loop parts", *p);
  if (auto p = shared_diagram(g, x_loops, y_other))
    return shared_reason(g, "loop vs non-loop part", *p);
  if (auto p = shared_diagram(g, x_other, y_loops))
    return shared_reason(g, "non-loop vs loop part", *p);
  return std::nullopt;
}

}  // namespace

FreenessVerdict freeness_sufficient(const DirectedGraph& g, const FourierExpr& a,
                                    const FourierExpr& b) {
  if (auto p = shared_diagram(g, support(a).paths(), support(b).paths()))
    return unknown_with(shared_reason(g, "supports", *p));
  return free_with("FP supports are diagram-distinct");
}

FreenessVerdict freeness_sufficient_diagonal(const DirectedGraph& g, const FourierExpr& a,
                                             const FourierExpr& b, const VertexSet& V) {
  if (auto v = common_vertex(vertices_in(a, V), vertices_in(b, V)))
    return unknown_with("vertex " + g.vertex_name(*v) + " is in V n V(G:a) n V(G:b)");
  auto pa = diagonal_compress(a, V);
  auto pb = diagonal_compress(b, V);
  if (auto why = compressed_conflict(g, pa, pb)) return unknown_with(*why);
  return free_with("disjoint V-vertex supports and diagram-distinct loop families at V");
}

FreenessVerdict freeness_sufficient_projection(const DirectedGraph& g, const FourierExpr& a,
                                               const FourierExpr& b, const VertexSet& V) {
  if (auto v = common_vertex(vertices_in(a, V), vertices_in(b, V)))
    return unknown_with("vertex " + g.vertex_name(*v) + " is in V n V(G:a) n V(G:b)");
  auto pa = projection_compress(a, V).full;
  auto pb = projection_compress(b, V).full;
  if (auto why = compressed_conflict(g, pa, pb)) return unknown_with(*why);
  return free_with(
      "disjoint V-vertex supports, diagram-distinct loop families and non-loop parts");
}

FreenessVerdict freeness_sufficient_two_projections(const DirectedGraph& g,
                                                    const FourierExpr& a,
                                                    const VertexSet& V1,
                                                    const VertexSet& V2) {
  if (auto v = common_vertex(vertices_in(a, V1), vertices_in(a, V2)))
    return unknown_with("vertex " + g.vertex_name(*v) + " is in V1 n V2 n V(G:a)");
  auto pa = projection_compress(a, V1).full;
  auto qa = projection_compress(a, V2).full;
  if (auto why = compressed_conflict(g, pa, qa)) return unknown_with(*why);
  return free_with("disjoint vertex supports and diagram-distinct loop families");
}

DiagonalElement projection_first_cumulant(const FourierExpr& a, const VertexSet& V,
                                          const DiagonalElement& d) {
  DiagonalElement out;
  for (const auto& [v, q] : d.terms()) {
    if (!V.contains(v)) continue;
    auto p = a.coefficient(Letter::create(Path::vertex(v)));
    if (!p.is_zero()) out.add(v, q * p);
  }
  return out;
}

CumulantEqualityResult cumulant_equality_check(const DirectedGraph& g, const FourierExpr& a,
                                               const VertexSet& V, int n_max,
                                               const DiagonalSampler& samples, Model model) {
  (void)g;
  auto parts = projection_compress(a, V);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& tuple : samples(n)) {
      MomentArgs compressed, diagonal;
      for (int i = 0; i < n; ++i) {
        compressed.push_back({tuple[i], parts.full});
        diagonal.push_back({tuple[i], parts.diag});
      }
      auto lhs = cumulant(compressed, model);
      auto rhs = cumulant(diagonal, model);
      bool ok = lhs == rhs;
      if (ok && n == 1) ok = lhs == projection_first_cumulant(a, V, tuple[0]);
      if (!ok) return {false, CumulantMismatch{n, tuple, std::move(lhs), std::move(rhs)}};
    }
  }
  return {};
}

}  // namespace graphfp
