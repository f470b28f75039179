#ifndef GRAPHFP_COMPRESS_HPP
#define GRAPHFP_COMPRESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphfp/cumulant.hpp"

namespace graphfp {

/// Nonempty ordered set of distinct vertices V = {v_1, ..., v_N}.
class VertexSet {
 public:
  /// @throw Error(UnknownVertex) for an out-of-range id, Error(SizeOutOfRange)
  ///        for an empty list, Error(DuplicateId) for a repeated vertex
  VertexSet(const DirectedGraph& g, std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool contains(VertexId v) const;

  /// P = L_{v_1} + ... + L_{v_N}
  DiagonalElement projection() const;

 private:
  std::vector<VertexId> vertices_;
};

/// P_V(a) = sum_j L_{v_j} a L_{v_j}: keeps vertex terms in V and terms
/// whose path is a loop at some v_j.
FourierExpr diagonal_compress(const FourierExpr& a, const VertexSet& V);

/// L_{v1} a L_{v2}: keeps L_w with w = v1 w v2 and L_w* with w = v2 w v1.
/// @throw Error(SameVertex) if v1 == v2
FourierExpr off_diagonal_compress(const FourierExpr& a, VertexId v1, VertexId v2);

struct ProjectionParts {
  FourierExpr full;     ///< PaP
  FourierExpr diag;     ///< P_V(a)
  FourierExpr offdiag;  ///< P_V^c(a) = sum_{i != j} L_{v_i} a L_{v_j}
};

ProjectionParts projection_compress(const FourierExpr& a, const VertexSet& V);

/// Checks that every moment E(d_1 x ... d_n x) and cumulant k_n of
/// x = L_{v1} a L_{v2} vanishes for n <= n_max over the sampled tuples.
bool check_offdiag_vanishing(const DirectedGraph& g, const FourierExpr& a, VertexId v1,
                             VertexId v2, int n_max, const DiagonalSampler& samples,
                             Model model);

enum class Freeness { Free, Unknown };

const char* to_string(Freeness f);

struct FreenessVerdict {
  Freeness verdict;
  std::string reason;
};

/// Sound but incomplete: Free when FP(G:a) and FP(G:b) are diagram-distinct
/// (D_G terms never obstruct freeness over D_G), Unknown otherwise.
FreenessVerdict freeness_sufficient(const DirectedGraph& g, const FourierExpr& a,
                                    const FourierExpr& b);

/// P_V(a) vs P_V(b): V-vertex supports disjoint, and no loop of a at any v_i
/// shares a diagram with a loop of b at any v_j.
FreenessVerdict freeness_sufficient_diagonal(const DirectedGraph& g, const FourierExpr& a,
                                             const FourierExpr& b, const VertexSet& V);

/// PaP vs PbP: the diagonal conditions above plus the non-loop parts of the
/// two compressions sharing no diagram.
FreenessVerdict freeness_sufficient_projection(const DirectedGraph& g, const FourierExpr& a,
                                               const FourierExpr& b, const VertexSet& V);

/// PaP vs QaQ for the projections of V1 and V2: (V1 n V(G:a)) n (V2 n V(G:a))
/// empty and no loop of a at V1 shares a diagram with a loop of a at V2. The
/// off-diagonal parts must also be diagram-distinct from everything on the
/// other side.
FreenessVerdict freeness_sufficient_two_projections(const DirectedGraph& g,
                                                    const FourierExpr& a,
                                                    const VertexSet& V1,
                                                    const VertexSet& V2);

/// k_1(d PaP) = sum_{v in V n V(G:d) n V(G:a)} q_v p_v L_v
DiagonalElement projection_first_cumulant(const FourierExpr& a, const VertexSet& V,
                                          const DiagonalElement& d);

struct CumulantMismatch {
  int n = 0;
  std::vector<DiagonalElement> coefficients;
  DiagonalElement compressed;  ///< k_n(d_1 PaP, ..., d_n PaP)
  DiagonalElement diagonal;    ///< k_n(d_1 P_V(a), ..., d_n P_V(a))
};

struct CumulantEqualityResult {
  bool equal = true;
  std::optional<CumulantMismatch> witness;
};

/// Compares k_n(d_1 PaP, ...) with k_n(d_1 P_V(a), ...) for n <= n_max over
/// the sampled tuples, and k_1(d PaP) with projection_first_cumulant.
CumulantEqualityResult cumulant_equality_check(const DirectedGraph& g, const FourierExpr& a,
                                               const VertexSet& V, int n_max,
                                               const DiagonalSampler& samples, Model model);

}  // namespace graphfp

#endif  // GRAPHFP_COMPRESS_HPP
