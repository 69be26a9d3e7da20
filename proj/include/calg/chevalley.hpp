#ifndef CALG_CHEVALLEY_HPP
#define CALG_CHEVALLEY_HPP

#include <memory>
#include <string>
#include <vector>

#include "calg/matrix.hpp"
#include "calg/rootsys.hpp"

namespace calg {

/// Sparse square matrix as a list of (row, col, value) per row.
struct SparseMat {
  int n = 0;
  std::vector<std::vector<std::pair<int, Rat>>> rows;  // rows[i] = {(j, v)}

  explicit SparseMat(int dim = 0) : n(dim), rows(dim) {}
  void add(int i, int j, const Rat& v) {
    if (!is_zero(v)) rows[i].emplace_back(j, v);
  }
  Mat dense() const;
  /// out += scale * (this * m) for dense m.
  void mul_dense_into(const Mat& m, const Rat& scale, Mat& out) const;
  /// out += scale * this (dense accumulate).
  void add_into(const Rat& scale, Mat& out) const;
  Vec apply(const Vec& v) const;
};

/// Split simple Lie algebra over Q in a Chevalley basis.
/// Basis order: H_1..H_l (simple coroots), then X_alpha following the root
/// order of the datum (positive roots by height/lex, then their negatives).
struct LieAlgebra {
  RootDatum datum;
  int dim = 0;

  std::vector<std::string> basisLabels;
  /// bracket[i][j] = [e_i, e_j] as sparse coordinate list.
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket;
  std::vector<SparseMat> ad;  // ad(e_i)

  Mat killingGram;   // K(e_i, e_j)
  Mat killingInv;
  std::vector<Vec> dualBasis;  // Y_j with K(e_i, Y_j) = delta_ij

  long hCheck() const { return datum.hCheck; }

  int cartanIndex(int i) const { return i; }                 // H_i
  int rootVectorIndex(int rootIdx) const { return datum.rank + rootIdx; }
  int rootIndexOfBasis(int basisIdx) const { return basisIdx - datum.rank; }

  Vec bracket_vec(const Vec& x, const Vec& y) const;  // [x, y] for dense coords
  SparseMat ad_of(const Vec& x) const;                // kept sparse-ish
  Mat ad_dense(const Vec& x) const;

  Rat killing(const Vec& x, const Vec& y) const;
};

/// Builds the algebra; validates the Jacobi identity on all basis triples and
/// throws std::logic_error on any internal inconsistency.
LieAlgebra build_chevalley(const RootDatum& datum);

/// Killing form recomputed from traces of ad products (independent route).
Mat killing_form(const LieAlgebra& L);

/// K-dual basis vectors Y_j.
std::vector<Vec> dual_basis(const LieAlgebra& L);

}  // namespace calg

#endif
