#ifndef CALG_ALGCORE_HPP
#define CALG_ALGCORE_HPP

#include <utility>
#include <vector>

#include "calg/chevalley.hpp"

namespace calg {

/// Symmetric (w.r.t. K) operator on g together with a recorded preimage in
/// Sym^2 g. The preimage is a symmetric dimG x dimG matrix W encoding
/// sum W[i][j] e_i e_j.
struct SOperator {
  Mat op;
  Mat pre;
};

/// sym(e_i e_j^T): the preimage matrix of the single pair e_i e_j.
Mat pair_pre(int dim, int i, int j);

/// P and S evaluated on a Sym^2 preimage.
Mat p_of_pre(const LieAlgebra& L, const Mat& pre);
Mat s_of_pre(const LieAlgebra& L, const Mat& pre);

SOperator p_map(const LieAlgebra& L, int i, int j);
SOperator s_map(const LieAlgebra& L, int i, int j);

/// Preimage of S(W) * S(V) (the commutative product on A(g)), evaluated by
/// bilinear extension of the defining formula on pairs.
Mat product_pre(const LieAlgebra& L, const Mat& W, const Mat& V);

/// A(g) = im S with an ordered basis of S(e_i e_j) operators, frozen span
/// data for exact membership certificates, the counit and the unit.
struct AlgebraTable {
  LieAlgebra lie;

  std::vector<std::pair<int, int>> basisPairs;
  std::vector<Mat> basisPre;
  std::vector<Mat> basisOp;
  int dimA = 0;
  SpanSolver span{0};

  Vec epsilon;     // counit on the basis
  Vec unitCoords;  // e = Id_g in the basis
  Mat unitPre;     // K^{-1}/(hv+1), a preimage of the unit

  std::vector<std::vector<Vec>> prodConst;  // filled by structure_table
  Mat tauGram;                              // filled by tau_gram

  Mat preimage(const Vec& coords) const;
  /// Coordinates of an operator in the basis; throws std::logic_error when
  /// the operator lies outside A(g) (contradicts closure).
  Vec express_op(const Mat& op) const;
  Vec product(const Vec& a, const Vec& b) const;
  Rat counit(const Vec& a) const;
  Rat tau(const Vec& a, const Vec& b) const;
  /// Coordinates of S(e_i e_j).
  Vec coords_of_pair(int i, int j) const;
  /// Matrix of x -> a * x in the basis.
  Mat left_mult(const Vec& a) const;
};

AlgebraTable build_basis(const LieAlgebra& L);

/// Fills prodConst with the full symmetric structure-constant table.
void structure_table(AlgebraTable& t);

/// Fills tauGram; cheap (works on preimages, no basis solves).
void tau_gram(AlgebraTable& t);

}  // namespace calg

#endif
