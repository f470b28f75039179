#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "graphfp/error.hpp"

using namespace graphfp;
using namespace graphfp::testing;

namespace {

NormalForm vertex(const DirectedGraph& g, const std::string& v) {
  return NormalForm::of(Monomial::vertex(g.vertex(v)));
}

NormalForm pair(const DirectedGraph& g, const std::string& a, const std::string& b) {
  return NormalForm::of(Monomial{path(g, a), path(g, b)});
}

// Word over the letters of length <= 1 written back as a short word.
Word as_word(const NormalForm& nf) {
  if (nf.kind() != NormalForm::Kind::Monomial) return {};
  Word w{Letter::create(nf.monomial().left)};
  if (!nf.monomial().right.is_vertex()) w.push_back(Letter::annihilate(nf.monomial().right));
  return w;
}

}  // namespace

TEST_CASE("reduction examples") {
  auto G1 = g1();
  auto G2 = g2();
  CHECK(reduce(Word{Ls(G2, "e"), L(G2, "e")}, Model::CK) == vertex(G2, "v2"));
  CHECK(reduce(Word{L(G2, "e"), Ls(G2, "e")}, Model::CK) == vertex(G2, "v1"));
  CHECK(reduce(Word{L(G2, "e"), Ls(G2, "e")}, Model::Toeplitz) == pair(G2, "e", "e"));
  CHECK(reduce(Word{L(G2, "e"), L(G2, "e")}, Model::CK).is_zero());
  CHECK(reduce(Word{}, Model::CK).kind() == NormalForm::Kind::Unit);

  Word llls{L(G1, "l"), L(G1, "l"), Ls(G1, "l")};
  CHECK(reduce(llls, Model::Toeplitz) == pair(G1, "l.l", "l"));
  // L_l L_l L_l* = L_l (L_l L_l*) = L_l L_v under the CK relation.
  CHECK(reduce(llls, Model::CK) == NormalForm::of(Monomial::of(L(G1, "l"))));
}

TEST_CASE("vertex letters are idempotent and self-adjoint") {
  auto g = random_graph(3, 4, 3);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto lv = Letter::create(Path::vertex(v));
    CHECK(Letter::annihilate(Path::vertex(v)) == lv);
    CHECK(lv.adjoint() == lv);
    for (Model m : {Model::CK, Model::Toeplitz})
      CHECK(reduce(Word{lv, lv}, m) == NormalForm::of(Monomial::vertex(v)));
  }
}

TEST_CASE("CK on one loop matches the bilateral shift") {
  // L_l is unitary on the single-loop graph, so a nonzero word is determined
  // by its height alone.
  auto g = g1();
  std::vector<Letter> letters{L(g, "l"), Ls(g, "l"), L(g, "l.l"), Ls(g, "l.l"), L(g, "v")};
  for (std::size_t k = 1; k <= 5; ++k)
    for (const auto& w : all_words(letters, k)) {
      long h = lattice_path(w).final_height();
      NormalForm expected = NormalForm::of(Monomial::vertex(0));
      Path shift = Path::vertex(0);
      for (long i = 0; i < std::labs(h); ++i) shift = *concat(shift, path(g, "l"));
      if (h > 0) expected = NormalForm::of(Monomial{shift, Path::vertex(0)});
      if (h < 0) expected = NormalForm::of(Monomial{Path::vertex(0), shift});
      CHECK(reduce(w, Model::CK) == expected);
    }
}

TEST_CASE("lattice paths") {
  auto G1 = g1();
  auto G2 = g2();
  auto lp = lattice_path(Word{L(G2, "e"), Ls(G2, "e")});
  CHECK(lp.steps == std::vector<long>{1, -1});
  CHECK(lp.final_height() == 0);
  lp = lattice_path(Word{L(G1, "l.l"), Ls(G1, "l")});
  CHECK(lp.steps == std::vector<long>{2, -1});
  CHECK(lp.final_height() == 1);
  lp = lattice_path(Word{L(G1, "v")});
  CHECK(lp.steps == std::vector<long>{0});
  CHECK(lp.final_height() == 0);
  CHECK(lattice_path(Word{}).steps.empty());

  lp = lattice_path(Word{Ls(G1, "l"), L(G1, "l.l"), Ls(G1, "l")});
  CHECK(lp.max_prefix_height() == 1);
  CHECK(lp.max_suffix_height() == 1);
}

TEST_CASE("star-axis property examples") {
  auto G1 = g1();
  auto G2 = g2();
  CHECK(has_star_axis_property(Word{Ls(G2, "e"), L(G2, "e")}, Model::CK));
  CHECK_FALSE(has_star_axis_property(Word{L(G2, "e"), L(G2, "e")}, Model::CK));
  CHECK_FALSE(has_star_axis_property(Word{L(G1, "l"), L(G1, "l"), Ls(G1, "l")}, Model::CK));
}

TEST_CASE("CK reduces to a vertex iff the word is nonzero and balanced") {
  for (const auto& g : {g1(), g2()}) {
    auto letters = alphabet(g, 1);
    for (std::size_t k = 1; k <= 6; ++k)
      for (const auto& w : all_words(letters, k)) {
        auto nf = reduce(w, Model::CK);
        bool predicted = !nf.is_zero() && lattice_path(w).final_height() == 0;
        CHECK(nf.is_vertex() == predicted);
      }
  }
}

TEST_CASE("reduction is multiplicative") {
  for (const auto& g : {g1(), g2(), two_loops_plus_edge()}) {
    auto letters = alphabet(g, 1);
    for (Model m : {Model::CK, Model::Toeplitz})
      for (std::size_t k = 1; k <= 4; ++k)
        for (const auto& w : all_words(letters, k))
          for (std::size_t cut = 0; cut <= w.size(); ++cut) {
            Word head(w.begin(), w.begin() + cut);
            auto nf = reduce(head, m);
            if (nf.is_zero()) continue;
            Word rest = as_word(nf);
            rest.insert(rest.end(), w.begin() + cut, w.end());
            CHECK(reduce(rest, m) == reduce(w, m));
          }
  }
}

TEST_CASE("star involution") {
  auto check_all = [](const DirectedGraph& g, Model m) {
    auto letters = alphabet(g, 2);
    for (std::size_t k = 1; k <= 3; ++k)
      for (const auto& w : all_words(letters, k))
        CHECK(reduce(adjoint(w), m) == reduce(w, m).adjoint());
  };
  SECTION("toeplitz on every test graph") {
    for (const auto& g : {g1(), g2(), two_loops_plus_edge(), random_graph(3, 4, 5)})
      check_all(g, Model::Toeplitz);
  }
  SECTION("ck on graphs with at most one edge leaving each vertex") {
    for (const auto& g : {g1(), g2()}) check_all(g, Model::CK);
  }
  SECTION("ck with two loops at one vertex is not associative") {
    // L_l1 L_l1* collapses to L_u, so L_l1 L_l1* L_l2 = L_l2, while the
    // adjoint word starts with L_l2* L_l1 = 0.
    auto g = two_loops();
    Word w{L(g, "l1"), Ls(g, "l1"), L(g, "l2")};
    CHECK(reduce(w, Model::CK) == NormalForm::of(Monomial::of(L(g, "l2"))));
    CHECK(reduce(adjoint(w), Model::CK).is_zero());
  }
}

TEST_CASE("word parsing and formatting") {
  auto g = two_loops_plus_edge();
  auto w = parse_word(g, "L[l1.e]  L*[e] L[u]");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == L(g, "l1.e"));
  CHECK(w[1] == Ls(g, "e"));
  CHECK(w[2] == L(g, "u"));
  CHECK(format_word(g, w) == "L[l1.e] L*[e] L[u]");
  CHECK(parse_word(g, format_word(g, w)) == w);
  CHECK_THROWS_AS(parse_word(g, "L[l1"), Error);
  CHECK_THROWS_AS(parse_word(g, "M[l1]"), Error);
  CHECK_THROWS_AS(parse_word(g, "L[e.l1]"), Error);
}
