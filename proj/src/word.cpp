#include "graphfp/word.hpp"

#include <algorithm>
#include <cctype>

#include "graphfp/error.hpp"

namespace graphfp {

const char* to_string(Model m) { return m == Model::CK ? "ck" : "toeplitz"; }

Monomial Monomial::of(const Letter& l) {
  const Path& w = l.path();
  if (l.star()) return {Path::vertex(w.range()), w};
  return {w, Path::vertex(w.range())};
}

namespace {

// L_a L_{cb}* with c a common suffix of both sides is L_a L_c L_c* L_b*,
// which CK collapses to L_a L_b*.
Monomial cancel_common_suffix(Monomial m) {
  const auto& le = m.left.edges();
  const auto& re = m.right.edges();
  std::size_t k = 0;
  while (k < le.size() && k < re.size() && le[le.size() - 1 - k] == re[re.size() - 1 - k]) ++k;
  if (k == 0) return m;
  return {m.left.drop_back(k), m.right.drop_back(k)};
}

Monomial with_vertex_right(Path left) {
  auto v = left.range();
  return {std::move(left), Path::vertex(v)};
}

}  // namespace

std::optional<Monomial> append(const Monomial& m, const Letter& l, Model model) {
  const Path& q = l.path();
  if (q.is_vertex()) {
    if (m.right.source() != q.source()) return std::nullopt;
    return m;
  }
  if (l.star()) {
    auto right = concat(q, m.right);
    if (!right) return std::nullopt;
    Monomial out{m.left, std::move(*right)};
    if (model == Model::CK) return cancel_common_suffix(std::move(out));
    return out;
  }
  if (m.right.is_vertex()) {
    auto left = concat(m.left, q);
    if (!left) return std::nullopt;
    return with_vertex_right(std::move(*left));
  }
  // L_b* L_q with b nonvertex: q = b.q' gives L_q', b = q.b' gives L_b'*.
  if (auto rest = q.strip_prefix(m.right)) return with_vertex_right(*concat(m.left, *rest));
  if (auto rest = m.right.strip_prefix(q)) return Monomial{m.left, std::move(*rest)};
  return std::nullopt;
}

NormalForm reduce(std::span<const Letter> word, Model model) {
  if (word.empty()) return NormalForm::unit();
  auto state = Monomial::of(word.front());
  for (std::size_t i = 1; i < word.size(); ++i) {
    auto next = append(state, word[i], model);
    if (!next) return NormalForm::zero();
    state = std::move(*next);
  }
  return NormalForm::of(std::move(state));
}

Word adjoint(std::span<const Letter> word) {
  Word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(it->adjoint());
  return out;
}

long LatticePath::final_height() const {
  long h = 0;
  for (long s : steps) h += s;
  return h;
}

long LatticePath::max_prefix_height() const {
  long h = 0, best = 0;
  for (long s : steps) {
    h += s;
    best = std::max(best, h);
  }
  return best;
}

long LatticePath::max_suffix_height() const {
  long h = 0, best = 0;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    h += *it;
    best = std::max(best, h);
  }
  return best;
}

LatticePath lattice_path(std::span<const Letter> word) {
  LatticePath p;
  p.steps.reserve(word.size());
  for (const auto& l : word) p.steps.push_back(l.step());
  return p;
}

bool has_star_axis_property(std::span<const Letter> word, Model model) {
  auto nf = reduce(word, model);
  return nf.kind() == NormalForm::Kind::Unit || nf.is_vertex();
}

Word parse_word(const DirectedGraph& g, std::string_view text) {
  Word out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != 'L')
      throw Error(ErrorKind::Parse, "expected 'L' at offset " + std::to_string(i));
    ++i;
    bool star = false;
    if (i < text.size() && text[i] == '*') {
      star = true;
      ++i;
    }
    if (i >= text.size() || text[i] != '[')
      throw Error(ErrorKind::Parse, "expected '[' at offset " + std::to_string(i));
    auto close = text.find(']', i);
    if (close == std::string_view::npos) throw Error(ErrorKind::Parse, "unterminated '['");
    auto path = parse_path(g, text.substr(i + 1, close - i - 1));
    out.push_back(star ? Letter::annihilate(std::move(path)) : Letter::create(std::move(path)));
    i = close + 1;
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::Parse, "letters must be whitespace separated");
    skip_space();
  }
  return out;
}

std::string format_letter(const DirectedGraph& g, const Letter& l) {
  return std::string(l.star() ? "L*[" : "L[") + format_path(g, l.path()) + "]";
}

std::string format_word(const DirectedGraph& g, std::span<const Letter> word) {
  std::string s;
  for (const auto& l : word) {
    if (!s.empty()) s += ' ';
    s += format_letter(g, l);
  }
  return s;
}

std::string format_normal_form(const DirectedGraph& g, const NormalForm& nf) {
  switch (nf.kind()) {
    case NormalForm::Kind::Zero: return "0";
    case NormalForm::Kind::Unit: return "1";
    case NormalForm::Kind::Monomial: break;
  }
  const auto& m = nf.monomial();
  if (m.is_vertex()) return "L[" + format_path(g, m.left) + "]";
  if (m.right.is_vertex()) return "L[" + format_path(g, m.left) + "]";
  if (m.left.is_vertex()) return "L*[" + format_path(g, m.right) + "]";
  return "L[" + format_path(g, m.left) + "] L*[" + format_path(g, m.right) + "]";
}

}  // namespace graphfp
