#ifndef GRAPHFP_WORD_HPP
#define GRAPHFP_WORD_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphfp/graph.hpp"

namespace graphfp {

/// Which relations the generators obey.
///
/// Both models impose L_w* L_w = L_{r(w)}, the prefix rules for L_w* L_h and
/// L_v = L_v* idempotent. CK additionally imposes L_w L_w* = L_{s(w)}, which
/// cancels any common suffix of a monomial L_a L_b*. Toeplitz keeps
/// L_w L_w* as the proper range projection it is on the Fock space.
enum class Model { CK, Toeplitz };

const char* to_string(Model m);

/// Generator L_w (creation) or L_w* (annihilation). Vertex letters are
/// self-adjoint and always stored with star = false.
class Letter {
 public:
  static Letter create(Path w) { return Letter(std::move(w), false); }
  static Letter annihilate(Path w) {
    bool star = !w.is_vertex();
    return Letter(std::move(w), star);
  }

  const Path& path() const { return path_; }
  bool star() const { return star_; }
  bool is_vertex() const { return path_.is_vertex(); }

  Letter adjoint() const { return star_ ? create(path_) : annihilate(path_); }

  /// Signed lattice step: +|w| for L_w, -|w| for L_w*, 0 for vertices.
  long step() const {
    auto len = static_cast<long>(path_.length());
    return star_ ? -len : len;
  }

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  Letter(Path w, bool star) : path_(std::move(w)), star_(star) {}

  Path path_;
  bool star_;
};

using Word = std::vector<Letter>;

/// L_left L_right*, with r(left) = r(right). left = right = v is the vertex
/// projection L_v.
struct Monomial {
  Path left;
  Path right;

  static Monomial vertex(VertexId v) { return {Path::vertex(v), Path::vertex(v)}; }
  static Monomial of(const Letter& l);

  bool is_vertex() const { return left.is_vertex() && right.is_vertex(); }
  long height() const {
    return static_cast<long>(left.length()) - static_cast<long>(right.length());
  }
  Monomial adjoint() const { return {right, left}; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Right-multiplies @p m by @p l; nullopt is the zero operator.
std::optional<Monomial> append(const Monomial& m, const Letter& l, Model model);

/// Result of reducing a word: Zero, the unit (empty word, sum of all vertex
/// projections) or a single monomial.
class NormalForm {
 public:
  enum class Kind { Zero, Unit, Monomial };

  static NormalForm zero() { return NormalForm(Kind::Zero, std::nullopt); }
  static NormalForm unit() { return NormalForm(Kind::Unit, std::nullopt); }
  static NormalForm of(Monomial m) { return NormalForm(Kind::Monomial, std::move(m)); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  /// A single vertex projection L_v.
  bool is_vertex() const { return kind_ == Kind::Monomial && monomial_->is_vertex(); }
  const Monomial& monomial() const { return *monomial_; }

  NormalForm adjoint() const {
    return kind_ == Kind::Monomial ? of(monomial_->adjoint()) : *this;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  NormalForm(Kind k, std::optional<Monomial> m) : kind_(k), monomial_(std::move(m)) {}

  Kind kind_;
  std::optional<Monomial> monomial_;
};

/// Left-to-right reduction of a product of letters.
NormalForm reduce(std::span<const Letter> word, Model model);

/// reverse-and-star: (l_1 ... l_n)* = l_n* ... l_1*
Word adjoint(std::span<const Letter> word);

struct LatticePath {
  std::vector<long> steps;

  long final_height() const;
  /// Highest point reached scanning left to right (>= 0).
  long max_prefix_height() const;
  /// Highest partial sum of a suffix (>= 0): the longest intermediate vector
  /// when the word acts on a vertex vector from the right.
  long max_suffix_height() const;
};

LatticePath lattice_path(std::span<const Letter> word);

/// Nonzero word reducing to a vertex projection (or the unit).
bool has_star_axis_property(std::span<const Letter> word, Model model);

/// Whitespace-separated `L[e1.e2]`, `L*[e1.e2]`, `L[v]`.
/// @throw Error(Parse), Error(UnknownPath), Error(Inadmissible)
Word parse_word(const DirectedGraph& g, std::string_view text);

std::string format_letter(const DirectedGraph& g, const Letter& l);
std::string format_word(const DirectedGraph& g, std::span<const Letter> word);
std::string format_normal_form(const DirectedGraph& g, const NormalForm& nf);

}  // namespace graphfp

#endif  // GRAPHFP_WORD_HPP
