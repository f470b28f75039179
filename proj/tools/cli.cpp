#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "graphfp/error.hpp"
#include "graphfp/io.hpp"

namespace graphfp::cli {

namespace {

using nlohmann::json;

const char* kModelHelp =
    "ck (default): Cuntz-Krieger axioms, L_w L_w* = L_s(w). "
    "toeplitz: L_w L_w* is the range projection on the graph Fock space; "
    "the two models disagree, e.g. L_l + L_l* is semicircular only under toeplitz";

struct Config {
  std::string graph;
  std::vector<std::string> elements;
  std::string model = "ck";
  int n_max = 4;
  std::size_t depth = 5;
  std::string format = "text";
};

std::vector<Model> models_of(const std::string& name) {
  if (name == "ck") return {Model::CK};
  if (name == "toeplitz") return {Model::Toeplitz};
  return {Model::CK, Model::Toeplitz};
}

json to_json(const DirectedGraph& g, const std::vector<DiagonalElement>& xs) {
  json arr = json::array();
  for (std::size_t i = 0; i < xs.size(); ++i)
    arr.push_back({{"n", i + 1}, {"value", diagonal_to_json(g, xs[i])}});
  return arr;
}

int cmd_table(const Config& c, bool cumulants, std::ostream& out) {
  auto g = load_graph_file(c.graph);
  json doc = json::array();
  for (const auto& file : c.elements) {
    auto a = load_element_file(g, file);
    for (Model m : models_of(c.model)) {
      auto table = cumulants ? cumulant_table(g, a, c.n_max, m) : moment_table(g, a, c.n_max, m);
      if (c.format == "json") {
        doc.push_back({{"element", file},
                       {"model", to_string(m)},
                       {cumulants ? "cumulants" : "moments", to_json(g, table)}});
        continue;
      }
      out << file << " (" << to_string(m) << "): a = " << format_expr(g, a) << "\n";
      for (std::size_t i = 0; i < table.size(); ++i)
        out << "  " << (cumulants ? "k_" : "E_") << i + 1 << " = "
            << format_diagonal(g, table[i]) << "\n";
    }
  }
  if (c.format == "json") out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_compress(const Config& c, const std::string& kind, const std::vector<std::string>& names,
                 std::ostream& out) {
  auto g = load_graph_file(c.graph);
  if (c.elements.size() != 1)
    throw Error(ErrorKind::Parse, "compress takes exactly one element (-a)");
  auto a = load_element_file(g, c.elements.front());
  std::vector<VertexId> vs;
  for (const auto& n : names) vs.push_back(g.vertex(n));

  auto emit = [&](const std::string& label, const FourierExpr& x, json& doc) {
    if (c.format == "json")
      doc[label] = element_to_json(g, x);
    else
      out << label << ": " << format_expr(g, x) << "\n";
  };
  json doc;
  if (kind == "offdiag") {
    if (vs.size() != 2) throw Error(ErrorKind::SizeMismatch, "offdiag takes two vertices");
    auto x = off_diagonal_compress(a, vs[0], vs[1]);
    if (c.format == "json") {
      out << element_to_json(g, x).dump(2) << "\n";
      return kExitOk;
    }
    out << format_expr(g, x) << "\n";
    return kExitOk;
  }
  VertexSet V(g, vs);
  if (kind == "diag") {
    auto x = diagonal_compress(a, V);
    if (c.format == "json")
      out << element_to_json(g, x).dump(2) << "\n";
    else
      out << format_expr(g, x) << "\n";
    return kExitOk;
  }
  auto parts = projection_compress(a, V);
  emit("full", parts.full, doc);
  emit("diag", parts.diag, doc);
  emit("offdiag", parts.offdiag, doc);
  if (c.format == "json") out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_reduce(const Config& c, const std::string& text, std::ostream& out) {
  auto g = load_graph_file(c.graph);
  auto w = parse_word(g, text);
  json doc = json::array();
  for (Model m : models_of(c.model)) {
    auto nf = reduce(w, m);
    if (c.format == "json")
      doc.push_back({{"model", to_string(m)}, {"normal_form", format_normal_form(g, nf)}});
    else
      out << to_string(m) << ": " << format_normal_form(g, nf) << "\n";
  }
  if (c.format == "json") out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const Config& c, VerifyOptions options, std::ostream& out) {
  auto graphs = builtin_graphs();
  if (!c.graph.empty())
    graphs.push_back({std::filesystem::path(c.graph).stem().string(), load_graph_file(c.graph)});
  options.models = models_of(c.model);
  options.n_max = c.n_max;
  options.depth = c.depth;
  auto results = run_verify(graphs, options);

  bool failed = std::any_of(results.begin(), results.end(),
                            [](const auto& r) { return r.status == Status::Fail; });
  if (c.format == "json") {
    json doc = json::array();
    for (const auto& r : results)
      doc.push_back({{"check", r.check},
                     {"graph", r.graph},
                     {"model", r.model},
                     {"status", to_string(r.status)},
                     {"detail", r.detail}});
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      out << to_string(r.status) << "  " << r.check << " [" << r.graph << ", " << r.model
          << "]: " << r.detail << "\n";
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        VerifyOptions verify_options) {
  CLI::App app{"Exact D_G-valued moments, cumulants and compressions on graph algebras",
               "graphfp"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub, bool graph_required, bool elements) {
    auto* g = sub->add_option("-g,--graph", c.graph, "graph JSON file");
    if (graph_required) g->required();
    if (elements) sub->add_option("-a,--element", c.elements, "element JSON file (repeatable)")
          ->required()
          ->allow_extra_args(false);
    sub->add_option("--model", c.model, kModelHelp)
        ->check(CLI::IsMember({"ck", "toeplitz", "both"}));
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* moments = app.add_subcommand("moments", "E(a^n) for n = 1..n_max");
  add_common(moments, true, true);
  auto* cumulants = app.add_subcommand("cumulants", "k_n(a, ..., a) for n = 1..n_max");
  add_common(cumulants, true, true);
  for (auto* sub : {moments, cumulants})
    sub->add_option("-n,--n-max", c.n_max, "highest order")->check(CLI::Range(1, kMaxMomentOrder));

  std::string kind;
  std::vector<std::string> vertices;
  auto* compress = app.add_subcommand("compress", "diagonal, off-diagonal or projection compression");
  add_common(compress, true, true);
  compress->add_option("kind", kind, "diag, offdiag or proj")
      ->required()
      ->check(CLI::IsMember({"diag", "offdiag", "proj"}));
  compress->add_option("vertices", vertices, "vertex ids")->required();

  std::string word;
  auto* reduce_cmd = app.add_subcommand("reduce", "normal form of a word such as 'L[e] L*[e]'");
  add_common(reduce_cmd, true, false);
  reduce_cmd->add_option("word", word, "letters L[path] and L*[path]")->required();

  auto* verify = app.add_subcommand("verify", "run the invariant suite on built-in graphs and -g");
  add_common(verify, false, false);
  verify->add_option("-n,--n-max", c.n_max, "highest order")->check(CLI::Range(1, kMaxMomentOrder));
  verify->add_option("--depth", c.depth, "Fock truncation depth for the oracle check")
      ->check(CLI::Range(std::size_t{1}, kMaxDepth));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (moments->parsed()) return cmd_table(c, false, out);
    if (cumulants->parsed()) return cmd_table(c, true, out);
    if (compress->parsed()) return cmd_compress(c, kind, vertices, out);
    if (reduce_cmd->parsed()) return cmd_reduce(c, word, out);
    return cmd_verify(c, std::move(verify_options), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace graphfp::cli
