#ifndef GRAPHFP_TESTS_FIXTURES_HPP
#define GRAPHFP_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "graphfp/compress.hpp"
#include "graphfp/cumulant.hpp"
#include "graphfp/expr.hpp"
#include "graphfp/graph.hpp"

namespace graphfp::testing {

/// One vertex v, one loop l.
inline DirectedGraph g1() { return DirectedGraph({"v"}, {{"l", "v", "v"}}); }

/// v1 --e--> v2
inline DirectedGraph g2() { return DirectedGraph({"v1", "v2"}, {{"e", "v1", "v2"}}); }

/// One vertex with loops l1, l2.
inline DirectedGraph two_loops() {
  return DirectedGraph({"v"}, {{"l1", "v", "v"}, {"l2", "v", "v"}});
}

/// Loops l1, l2 at u and an edge e: u -> w.
inline DirectedGraph two_loops_plus_edge() {
  return DirectedGraph({"u", "w"}, {{"l1", "u", "u"}, {"l2", "u", "u"}, {"e", "u", "w"}});
}

/// Disjoint union of G1 (vertex v, loop l) and G2 (v1 --e--> v2).
inline DirectedGraph g1_plus_g2() {
  return DirectedGraph({"v", "v1", "v2"}, {{"l", "v", "v"}, {"e", "v1", "v2"}});
}

/// Seeded random graph with the given vertex and edge counts (loops and
/// parallel edges allowed).
inline DirectedGraph random_graph(std::size_t vertices, std::size_t edges, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices; ++i) names.push_back("x" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < edges; ++i)
    specs.push_back({"f" + std::to_string(i), names[pick(rng)], names[pick(rng)]});
  return DirectedGraph(names, specs);
}

inline Path path(const DirectedGraph& g, const std::string& text) { return parse_path(g, text); }
inline Letter L(const DirectedGraph& g, const std::string& text) {
  return Letter::create(path(g, text));
}
inline Letter Ls(const DirectedGraph& g, const std::string& text) {
  return Letter::annihilate(path(g, text));
}
inline FourierExpr X(const Letter& l, long c = 1) { return FourierExpr::of(l, Scalar(c)); }
inline DiagonalElement P(const DirectedGraph& g, const std::string& v) {
  return DiagonalElement::projection(g.vertex(v));
}
inline DiagonalElement one(const DirectedGraph& g) { return DiagonalElement::identity(g); }

/// Random Fourier expansion with 1..max_terms terms over paths of length
/// <= max_len, small integer or Gaussian-integer coefficients.
class ExprGenerator {
 public:
  ExprGenerator(const DirectedGraph& g, unsigned seed, std::size_t max_len = 2)
      : g_(g), rng_(seed), paths_(enumerate_semigroupoid(g, max_len)) {}

  FourierExpr next(std::size_t max_terms = 5, bool complex = false) {
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    std::uniform_int_distribution<std::size_t> which(0, paths_.size() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::bernoulli_distribution coin(0.5);
    FourierExpr a;
    for (std::size_t k = count(rng_); k-- > 0;) {
      const Path& w = paths_[which(rng_)];
      Letter l = coin(rng_) ? Letter::annihilate(w) : Letter::create(w);
      long re = coeff(rng_);
      if (re == 0) re = 1;
      a.add(l, complex ? Scalar(re, coeff(rng_)) : Scalar(re));
    }
    return a;
  }

  /// Nonempty random subset of the vertices.
  VertexSet vertex_set() {
    std::vector<VertexId> vs;
    std::bernoulli_distribution coin(0.5);
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
      if (coin(rng_)) vs.push_back(v);
    if (vs.empty()) vs.push_back(std::uniform_int_distribution<VertexId>(
        0, static_cast<VertexId>(g_.vertex_count() - 1))(rng_));
    return VertexSet(g_, vs);
  }

  DiagonalElement diagonal() {
    std::uniform_int_distribution<long> coeff(-2, 2);
    DiagonalElement d;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) d.add(v, Scalar(coeff(rng_)));
    return d;
  }

  std::mt19937& rng() { return rng_; }

 private:
  const DirectedGraph& g_;
  std::mt19937 rng_;
  std::vector<Path> paths_;
};

/// All words of exactly k letters drawn from @p alphabet.
inline std::vector<Word> all_words(const std::vector<Letter>& alphabet, std::size_t k) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (const auto& l : alphabet) {
        auto x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

/// Every L_w and L_w* for w in F+(G) with |w| <= max_len (vertices once).
inline std::vector<Letter> alphabet(const DirectedGraph& g, std::size_t max_len) {
  std::vector<Letter> out;
  for (const auto& w : enumerate_semigroupoid(g, max_len)) {
    out.push_back(Letter::create(w));
    if (!w.is_vertex()) out.push_back(Letter::annihilate(w));
  }
  return out;
}

}  // namespace graphfp::testing

#endif  // GRAPHFP_TESTS_FIXTURES_HPP
