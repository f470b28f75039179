#include "verify.hpp"

#include <random>
#include <sstream>

#include "graphfp/fock.hpp"

namespace graphfp::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Info: return "INFO";
  }
  return "?";
}

std::vector<NamedGraph> builtin_graphs() {
  return {
      {"g1", DirectedGraph({"v"}, {{"l", "v", "v"}})},
      {"g2", DirectedGraph({"v1", "v2"}, {{"e", "v1", "v2"}})},
      {"two-loops-edge",
       DirectedGraph({"u", "w"}, {{"l1", "u", "u"}, {"l2", "u", "u"}, {"e", "u", "w"}})},
  };
}

namespace {

class RandomElements {
 public:
  RandomElements(const DirectedGraph& g, unsigned seed)
      : g_(g), rng_(seed), paths_(enumerate_semigroupoid(g, 2)) {}

  FourierExpr next() {
    std::uniform_int_distribution<std::size_t> count(1, 4);
    std::uniform_int_distribution<std::size_t> which(0, paths_.size() - 1);
    std::uniform_int_distribution<long> coeff(1, 3);
    std::bernoulli_distribution coin(0.5);
    FourierExpr a;
    for (std::size_t k = count(rng_); k-- > 0;) {
      const Path& w = paths_[which(rng_)];
      a.add(coin(rng_) ? Letter::annihilate(w) : Letter::create(w),
            Scalar(coin(rng_) ? coeff(rng_) : -coeff(rng_)));
    }
    return a;
  }

  VertexSet vertex_set() {
    std::vector<VertexId> vs;
    std::bernoulli_distribution coin(0.5);
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
      if (coin(rng_)) vs.push_back(v);
    if (vs.empty()) vs.push_back(0);
    return VertexSet(g_, vs);
  }

 private:
  const DirectedGraph& g_;
  std::mt19937 rng_;
  std::vector<Path> paths_;
};

struct Tally {
  long cases = 0;
  long failures = 0;
  std::string witness;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && failures++ == 0) witness = describe();
  }

  CheckResult result(std::string check, const NamedGraph& g, Model m) const {
    std::ostringstream out;
    out << cases << " cases";
    if (failures) out << ", " << failures << " failed; witness: " << witness;
    return {std::move(check), g.name, to_string(m), failures ? Status::Fail : Status::Pass,
            out.str()};
  }
};

std::string vertex_list(const DirectedGraph& g, const VertexSet& V) {
  std::string s;
  for (auto v : V.vertices()) s += (s.empty() ? "" : ",") + g.vertex_name(v);
  return "{" + s + "}";
}

CheckResult check_relations(const NamedGraph& ng, Model m) {
  const auto& g = ng.graph;
  Tally t;
  for (const auto& w : enumerate_semigroupoid(g, 3)) {
    auto c = Letter::create(w);
    auto s = Letter::annihilate(w);
    auto show = [&] { return format_path(g, w); };
    t.record(reduce(Word{s, c}, m) == NormalForm::of(Monomial::vertex(w.range())), show);
    t.record(reduce(Word{c, s, c}, m) == NormalForm::of(Monomial::of(c)), show);
    if (m == Model::CK)
      t.record(reduce(Word{c, s}, m) == NormalForm::of(Monomial::vertex(w.source())), show);
  }
  return t.result("relations", ng, m);
}

// (w1 w2 w3)* reduces to the adjoint of the reduced word.
CheckResult check_star_involution(const NamedGraph& ng, Model m) {
  const auto& g = ng.graph;
  Tally t;
  Word letters;
  for (const auto& w : enumerate_semigroupoid(g, 1)) {
    letters.push_back(Letter::create(w));
    if (!w.is_vertex()) letters.push_back(Letter::annihilate(w));
  }
  for (const auto& x : letters)
    for (const auto& y : letters)
      for (const auto& z : letters) {
        Word w{x, y, z};
        t.record(reduce(adjoint(w), m) == reduce(w, m).adjoint(),
                 [&] { return format_word(g, w); });
      }
  return t.result("star involution", ng, m);
}

DiagonalElement inverted_cumulant(const MomentArgs& args, Model m, const MoebiusFunction& mu) {
  int n = static_cast<int>(args.size());
  DiagonalElement k;
  for (const auto& pi : nc_table(n).partitions)
    k += Scalar(mu(pi)) * nested_expectation(pi, args, m);
  return k;
}

CheckResult check_moebius(const NamedGraph& ng, Model m, const VerifyOptions& o) {
  const auto& g = ng.graph;
  Tally t;
  RandomElements gen(g, o.seed);
  auto id = DiagonalElement::identity(g);
  for (int i = 0; i < o.samples; ++i) {
    auto a = gen.next();
    for (int n = 1; n <= o.n_max; ++n) {
      MomentArgs args(n, Factor{id, a});
      auto direct = nested_expectation(NoncrossingPartition::one(n), args, m);
      DiagonalElement rebuilt;
      for (const auto& pi : nc_table(n).partitions)
        rebuilt += nested_apply(pi, args, [&](std::span<const Factor> block) {
          return inverted_cumulant(MomentArgs(block.begin(), block.end()), m, o.moebius);
        });
      t.record(direct == rebuilt, [&] {
        return "a = " + format_expr(g, a) + ", n = " + std::to_string(n) + ": E = " +
               format_diagonal(g, direct) + ", sum of k_pi = " + format_diagonal(g, rebuilt);
      });
    }
  }
  return t.result("moebius consistency", ng, m);
}

CheckResult check_offdiag(const NamedGraph& ng, Model m, const VerifyOptions& o) {
  const auto& g = ng.graph;
  Tally t;
  RandomElements gen(g, o.seed + 1);
  for (int i = 0; i < o.samples; ++i) {
    auto a = gen.next();
    for (VertexId v1 = 0; v1 < g.vertex_count(); ++v1)
      for (VertexId v2 = 0; v2 < g.vertex_count(); ++v2) {
        if (v1 == v2) continue;
        t.record(check_offdiag_vanishing(g, a, v1, v2, o.n_max, default_sampler(g), m), [&] {
          return "a = " + format_expr(g, a) + ", v1 = " + g.vertex_name(v1) +
                 ", v2 = " + g.vertex_name(v2);
        });
      }
  }
  return t.result("off-diagonal vanishing", ng, m);
}

CheckResult check_compression(const NamedGraph& ng, Model m, const VerifyOptions& o) {
  const auto& g = ng.graph;
  Tally t;
  RandomElements gen(g, o.seed + 2);
  std::vector<VertexId> all;
  for (VertexId v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  std::vector<FourierExpr> elements;
  for (const auto& w : enumerate_semigroupoid(g, 1))
    if (!w.is_vertex())
      elements.push_back(FourierExpr::of(Letter::create(w)) +
                         FourierExpr::of(Letter::annihilate(w)));
  for (int i = 0; i < o.samples; ++i) elements.push_back(gen.next());
  for (const auto& a : elements) {
    for (const auto& V : {VertexSet(g, all), gen.vertex_set()}) {
      auto r = cumulant_equality_check(g, a, V, o.n_max, default_sampler(g), m);
      t.record(r.equal, [&] {
        return "a = " + format_expr(g, a) + ", V = " + vertex_list(g, V) + ", n = " +
               std::to_string(r.witness->n) + ": k(PaP) = " +
               format_diagonal(g, r.witness->compressed) +
               ", k(P_V(a)) = " + format_diagonal(g, r.witness->diagonal);
      });
    }
  }
  return t.result("compression cumulant equality", ng, m);
}

CheckResult check_freeness_soundness(const NamedGraph& ng, Model m, const VerifyOptions& o) {
  const auto& g = ng.graph;
  Tally t;
  std::vector<Path> paths;
  for (const auto& w : enumerate_semigroupoid(g, 2))
    if (!w.is_vertex() && paths.size() < 12) paths.push_back(w);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      auto a = FourierExpr::of(Letter::create(paths[i]));
      auto b = FourierExpr::of(Letter::create(paths[j]));
      if (freeness_sufficient(g, a, b).verdict != Freeness::Free) continue;
      auto r = mixed_cumulants_vanish(g, a, b, std::min(o.n_max, 4), default_sampler(g), m);
      t.record(r.vanish, [&] {
        std::string pattern;
        for (const auto& x : r.witness->pattern) pattern += (pattern.empty() ? "" : " ") + x;
        return "a = " + format_path(g, paths[i]) + ", b = " + format_path(g, paths[j]) +
               ": k(" + pattern + ") = " + format_diagonal(g, r.witness->value);
      });
    }
  return t.result("freeness soundness", ng, m);
}

CheckResult check_oracle(const NamedGraph& ng, const VerifyOptions& o) {
  const auto& g = ng.graph;
  Tally t;
  Word letters;
  for (const auto& w : enumerate_semigroupoid(g, 1)) {
    letters.push_back(Letter::create(w));
    if (!w.is_vertex()) letters.push_back(Letter::annihilate(w));
  }
  FockOracle oracle(g, o.depth);
  auto id = DiagonalElement::identity(g);
  std::vector<Word> words{Word{}};
  for (int k = 1; k <= 4; ++k) {
    std::vector<Word> next;
    for (const auto& w : words)
      for (const auto& l : letters) {
        auto x = w;
        x.push_back(l);
        if (required_depth(x) > o.depth) continue;
        std::vector<Factor> factors;
        for (const auto& y : x) factors.push_back({id, FourierExpr::of(y)});
        auto symbolic = expectation_of_product(factors, Model::Toeplitz);
        auto fock = oracle.expectation(x);
        t.record(symbolic == fock, [&] {
          return format_word(g, x) + ": symbolic " + format_diagonal(g, symbolic) + ", fock " +
                 format_diagonal(g, fock);
        });
        next.push_back(std::move(x));
      }
    words = std::move(next);
  }
  return t.result("fock oracle equivalence", ng, Model::Toeplitz);
}

CheckResult semicircular_info(const VerifyOptions& o) {
  auto g = builtin_graphs().front().graph;
  auto l = parse_path(g, "l");
  auto a = FourierExpr::of(Letter::create(l)) + FourierExpr::of(Letter::annihilate(l));
  std::ostringstream out;
  for (Model m : {Model::CK, Model::Toeplitz}) {
    out << (m == Model::CK ? "" : "; ") << to_string(m) << " moments of L_l + L_l*:";
    for (const auto& x : moment_table(g, a, o.n_max, m)) out << " [" << format_diagonal(g, x) << "]";
  }
  return {"semicircular divergence", "g1", "both", Status::Info, out.str()};
}

}  // namespace

std::vector<CheckResult> run_verify(const std::vector<NamedGraph>& graphs,
                                    const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& ng : graphs) {
    for (Model m : options.models) {
      out.push_back(check_relations(ng, m));
      out.push_back(check_star_involution(ng, m));
      out.push_back(check_moebius(ng, m, options));
      if (ng.graph.vertex_count() > 1) {
        out.push_back(check_offdiag(ng, m, options));
        out.push_back(check_compression(ng, m, options));
      }
      out.push_back(check_freeness_soundness(ng, m, options));
    }
    out.push_back(check_oracle(ng, options));
  }
  if (options.models.size() > 1) out.push_back(semicircular_info(options));
  return out;
}

}  // namespace graphfp::cli
