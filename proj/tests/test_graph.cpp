#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "graphfp/error.hpp"

using namespace graphfp;
using namespace graphfp::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no graphfp::Error thrown");
  return ErrorKind::Parse;
}

std::vector<std::string> names(const DirectedGraph& g, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_path(g, p));
  return out;
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK(g1().vertex_count() == 1);
  CHECK(g2().edge_count() == 1);
  CHECK(kind_of([] { DirectedGraph({"v"}, {{"e", "v", "w"}}); }) == ErrorKind::DanglingEndpoint);
  CHECK(kind_of([] { DirectedGraph({}, {}); }) == ErrorKind::EmptyGraph);
  CHECK(kind_of([] { DirectedGraph({"v", "v"}, {}); }) == ErrorKind::DuplicateId);
  CHECK(kind_of([] { DirectedGraph({"v"}, {{"v", "v", "v"}}); }) == ErrorKind::DuplicateId);
  CHECK(kind_of([] { g1().vertex("nope"); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("concatenation") {
  auto G1 = g1();
  auto G2 = g2();
  auto l2 = concat(path(G1, "l"), path(G1, "l"));
  REQUIRE(l2);
  CHECK(format_path(G1, *l2) == "l.l");
  CHECK_FALSE(concat(path(G2, "e"), path(G2, "e")));
  CHECK(concat(path(G2, "v1"), path(G2, "e")) == path(G2, "e"));
  CHECK(concat(path(G2, "e"), path(G2, "v2")) == path(G2, "e"));
  CHECK_FALSE(concat(path(G2, "v2"), path(G2, "e")));
  CHECK(kind_of([&] { parse_path(G2, "e.e"); }) == ErrorKind::Inadmissible);
  CHECK(kind_of([&] { parse_path(G2, "x"); }) == ErrorKind::UnknownPath);
}

TEST_CASE("concatenation is associative and length-additive") {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    auto g = random_graph(3, 5, seed);
    auto ps = enumerate_semigroupoid(g, 2);
    for (const auto& p : ps)
      for (const auto& q : ps) {
        auto pq = concat(p, q);
        if (pq) CHECK(pq->length() == p.length() + q.length());
        for (const auto& r : ps) {
          auto qr = concat(q, r);
          if (!pq || !qr) continue;
          CHECK(concat(*pq, r) == concat(p, *qr));
        }
      }
  }
}

TEST_CASE("semigroupoid enumeration") {
  auto G1 = g1();
  auto G2 = g2();
  CHECK(names(G1, enumerate_semigroupoid(G1, 2)) == std::vector<std::string>{"v", "l", "l.l"});
  CHECK(names(G2, enumerate_semigroupoid(G2, 3)) == std::vector<std::string>{"v1", "v2", "e"});
  CHECK(names(G1, enumerate_semigroupoid(G1, 0)) == std::vector<std::string>{"v"});
}

TEST_CASE("enumeration agrees with a brute-force edge-sequence filter") {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    auto g = random_graph(3, 4, seed);
    for (std::size_t m = 0; m <= 3; ++m) {
      auto listed = enumerate_semigroupoid(g, m);
      std::set<Path> expected;
      for (VertexId v = 0; v < g.vertex_count(); ++v) expected.insert(Path::vertex(v));
      // every sequence of edge ids of length 1..m, kept when consecutive
      // edges are composable
      std::vector<std::vector<EdgeId>> seqs{{}};
      for (std::size_t k = 1; k <= m; ++k) {
        std::vector<std::vector<EdgeId>> next;
        for (const auto& s : seqs)
          for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto t = s;
            t.push_back(e);
            next.push_back(t);
          }
        seqs = next;
        for (const auto& s : seqs) {
          bool ok = true;
          for (std::size_t i = 0; i + 1 < s.size(); ++i)
            ok = ok && g.edge(s[i]).rng == g.edge(s[i + 1]).src;
          if (ok) expected.insert(Path::from_edges(g, s));
        }
      }
      CHECK(std::set<Path>(listed.begin(), listed.end()) == expected);
      CHECK(listed.size() == expected.size());
      if (m > 0) {
        auto shorter = enumerate_semigroupoid(g, m - 1);
        CHECK(std::equal(shorter.begin(), shorter.end(), listed.begin()));
      }
    }
  }
}

TEST_CASE("diagram distinctness") {
  auto G1 = g1();
  auto G2 = g2();
  auto T = two_loops();
  CHECK_FALSE(diagram_distinct(G1, path(G1, "l"), path(G1, "l.l")));
  CHECK(diagram_distinct(T, path(T, "l1"), path(T, "l2")));
  CHECK(diagram_distinct(G2, path(G2, "e"), path(G2, "v1")));
  CHECK(diagram(G2, path(G2, "v1")).edges.empty());
  auto g = random_graph(3, 5, 11);
  auto ps = enumerate_semigroupoid(g, 2);
  for (const auto& p : ps) {
    CHECK_FALSE(diagram_distinct(g, p, p));
    for (const auto& q : ps) CHECK(diagram_distinct(g, p, q) == diagram_distinct(g, q, p));
  }
}

TEST_CASE("loops and paths between vertices") {
  auto G1 = g1();
  auto G2 = g2();
  CHECK(names(G1, loops_at(G1, G1.vertex("v"), 2)) == std::vector<std::string>{"l", "l.l"});
  CHECK(names(G2, paths_from_to(G2, G2.vertex("v1"), G2.vertex("v2"), 3)) ==
        std::vector<std::string>{"e"});
  CHECK(paths_from_to(G2, G2.vertex("v2"), G2.vertex("v1"), 3).empty());
}

TEST_CASE("prefix and suffix stripping") {
  auto g = two_loops_plus_edge();
  auto w = path(g, "l1.l2.e");
  CHECK(w.strip_prefix(path(g, "l1")) == path(g, "l2.e"));
  CHECK(w.strip_prefix(path(g, "u")) == w);
  CHECK_FALSE(w.strip_prefix(path(g, "l2")));
  CHECK(w.strip_suffix(path(g, "e")) == path(g, "l1.l2"));
  CHECK(w.strip_suffix(w) == path(g, "u"));
  CHECK(w.strip_prefix(w) == path(g, "w"));
}
