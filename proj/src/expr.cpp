#include "graphfp/expr.hpp"

#include <algorithm>
#include <vector>

namespace graphfp {

namespace {

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

// DiagonalElement

DiagonalElement DiagonalElement::identity(const DirectedGraph& g) {
  DiagonalElement d;
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.terms_.emplace(v, Scalar(1));
  return d;
}

DiagonalElement DiagonalElement::single(VertexId v, Scalar q) {
  DiagonalElement d;
  d.add(v, q);
  return d;
}

Scalar DiagonalElement::coefficient(VertexId v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Scalar() : it->second;
}

void DiagonalElement::add(VertexId v, const Scalar& q) { accumulate(terms_, v, q); }

DiagonalElement& DiagonalElement::operator+=(const DiagonalElement& other) {
  for (const auto& [v, q] : other.terms_) add(v, q);
  return *this;
}

DiagonalElement operator-(DiagonalElement a, const DiagonalElement& b) {
  for (const auto& [v, q] : b.terms_) a.add(v, -q);
  return a;
}

DiagonalElement operator*(const DiagonalElement& a, const DiagonalElement& b) {
  DiagonalElement out;
  for (const auto& [v, q] : a.terms_) {
    auto it = b.terms_.find(v);
    if (it != b.terms_.end()) out.add(v, q * it->second);
  }
  return out;
}

DiagonalElement operator*(const Scalar& s, const DiagonalElement& d) {
  DiagonalElement out;
  for (const auto& [v, q] : d.terms_) out.add(v, s * q);
  return out;
}

// FourierExpr

FourierExpr::FourierExpr(const DiagonalElement& d) {
  for (const auto& [v, q] : d.terms()) add(Letter::create(Path::vertex(v)), q);
}

FourierExpr FourierExpr::of(const Letter& l, Scalar coeff) {
  FourierExpr a;
  a.add(l, coeff);
  return a;
}

Scalar FourierExpr::coefficient(const Letter& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Scalar() : it->second;
}

void FourierExpr::add(const Letter& l, const Scalar& coeff) { accumulate(terms_, l, coeff); }

FourierExpr FourierExpr::adjoint() const {
  FourierExpr out;
  for (const auto& [l, p] : terms_) out.add(l.adjoint(), p.conj());
  return out;
}

FourierExpr& FourierExpr::operator+=(const FourierExpr& other) {
  for (const auto& [l, p] : other.terms_) add(l, p);
  return *this;
}

FourierExpr operator-(FourierExpr a, const FourierExpr& b) {
  for (const auto& [l, p] : b.terms_) a.add(l, -p);
  return a;
}

FourierExpr operator*(const Scalar& s, const FourierExpr& a) {
  FourierExpr out;
  for (const auto& [l, p] : a.terms_) out.add(l, s * p);
  return out;
}

// L_v L_w = L_w iff v = s(w); L_v L_w* = L_w* iff v = r(w). Mirror on the right.
FourierExpr left_multiply(const DiagonalElement& d, const FourierExpr& a) {
  FourierExpr out;
  for (const auto& [l, p] : a.terms()) {
    VertexId v = l.star() ? l.path().range() : l.path().source();
    auto q = d.coefficient(v);
    if (!q.is_zero()) out.add(l, q * p);
  }
  return out;
}

FourierExpr right_multiply(const FourierExpr& a, const DiagonalElement& d) {
  FourierExpr out;
  for (const auto& [l, p] : a.terms()) {
    VertexId v = l.star() ? l.path().source() : l.path().range();
    auto q = d.coefficient(v);
    if (!q.is_zero()) out.add(l, p * q);
  }
  return out;
}

// Support

std::set<Path> Support::paths() const {
  std::set<Path> out = star_paths;
  out.insert(nonstar_paths.begin(), nonstar_paths.end());
  return out;
}

Support support(const FourierExpr& a) {
  Support s;
  std::set<Path> creations, annihilations;
  for (const auto& [l, p] : a.terms()) {
    if (l.is_vertex())
      s.vertices.insert(l.path().source());
    else if (l.star())
      annihilations.insert(l.path());
    else
      creations.insert(l.path());
  }
  for (const auto& w : creations) {
    if (annihilations.contains(w))
      s.star_paths.insert(w);
    else
      s.nonstar_paths.insert(w);
  }
  for (const auto& w : annihilations) {
    if (!creations.contains(w)) s.nonstar_paths.insert(w);
  }
  return s;
}

DiagonalElement expectation(const FourierExpr& a) {
  DiagonalElement d;
  for (const auto& [l, p] : a.terms()) {
    if (l.is_vertex()) d.add(l.path().source(), p);
  }
  return d;
}

// Products

Product to_product(const DiagonalElement& d) {
  Product out;
  for (const auto& [v, q] : d.terms()) out.emplace(Monomial::vertex(v), q);
  return out;
}

Product to_product(const FourierExpr& a) {
  Product out;
  for (const auto& [l, p] : a.terms()) accumulate(out, Monomial::of(l), p);
  return out;
}

Product multiply(const Product& x, const FourierExpr& y, Model model) {
  Product out;
  for (const auto& [m, c] : x) {
    for (const auto& [l, p] : y.terms()) {
      if (auto next = append(m, l, model)) accumulate(out, *next, c * p);
    }
  }
  return out;
}

Product multiply(const FourierExpr& x, const FourierExpr& y, Model model) {
  return multiply(to_product(x), y, model);
}

DiagonalElement expectation(const Product& p) {
  DiagonalElement d;
  for (const auto& [m, c] : p) {
    if (m.is_vertex()) d.add(m.left.source(), c);
  }
  return d;
}

namespace {

Product multiply_diagonal(const Product& x, const DiagonalElement& d) {
  Product out;
  for (const auto& [m, c] : x) {
    // L_a L_b* L_v is nonzero iff s(b) = v.
    auto q = d.coefficient(m.right.source());
    if (!q.is_zero()) accumulate(out, m, c * q);
  }
  return out;
}

}  // namespace

DiagonalElement expectation_of_product(std::span<const Factor> factors, Model model) {
  if (factors.empty()) return {};

  // Height of a monomial after a prefix equals the lattice height of the
  // letters chosen so far, so a state survives only if the remaining factors
  // can bring it back to 0.
  std::vector<long> min_rest(factors.size() + 1, 0), max_rest(factors.size() + 1, 0);
  for (std::size_t i = factors.size(); i-- > 0;) {
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& [l, p] : factors[i].a.terms()) {
      lo = first ? l.step() : std::min(lo, l.step());
      hi = first ? l.step() : std::max(hi, l.step());
      first = false;
    }
    min_rest[i] = min_rest[i + 1] + lo;
    max_rest[i] = max_rest[i + 1] + hi;
  }

  Product state = to_product(factors.front().d);
  for (std::size_t i = 0; i < factors.size() && !state.empty(); ++i) {
    if (i > 0) state = multiply_diagonal(state, factors[i].d);
    state = multiply(state, factors[i].a, model);
    std::erase_if(state, [&](const auto& entry) {
      long h = entry.first.height();
      return h + min_rest[i + 1] > 0 || h + max_rest[i + 1] < 0;
    });
  }
  return expectation(state);
}

// Formatting

namespace {

std::string with_coeff(const Scalar& c, const std::string& body) {
  if (c == Scalar(1)) return body;
  if (c == Scalar(-1)) return "-" + body;
  if (c.is_real()) return c.to_string() + "*" + body;
  return "(" + c.to_string() + ")*" + body;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].front() == '-')
      s += " - " + parts[i].substr(1);
    else
      s += " + " + parts[i];
  }
  return s;
}

}  // namespace

std::string format_expr(const DirectedGraph& g, const FourierExpr& a) {
  std::vector<std::string> parts;
  for (const auto& [l, p] : a.terms()) parts.push_back(with_coeff(p, format_letter(g, l)));
  return join_terms(parts);
}

std::string format_diagonal(const DirectedGraph& g, const DiagonalElement& d) {
  std::vector<std::string> parts;
  for (const auto& [v, q] : d.terms())
    parts.push_back(with_coeff(q, "L[" + g.vertex_name(v) + "]"));
  return join_terms(parts);
}

std::string format_product(const DirectedGraph& g, const Product& p) {
  std::vector<std::string> parts;
  for (const auto& [m, c] : p)
    parts.push_back(with_coeff(c, format_normal_form(g, NormalForm::of(m))));
  return join_terms(parts);
}

}  // namespace graphfp
