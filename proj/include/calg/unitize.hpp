#ifndef CALG_UNITIZE_HPP
#define CALG_UNITIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "calg/algcore.hpp"

namespace calg {

/// Commutative multiplication table: c[i][j] = e_i e_j in coordinates.
struct MulTable {
  int dim = 0;
  std::vector<std::vector<Vec>> c;

  Vec mul(const Vec& x, const Vec& y) const;
  bool operator==(const MulTable& o) const { return dim == o.dim && c == o.c; }
};

/// Abstract Unit(V, f) input: a (possibly non-unital) commutative algebra V
/// with a symmetric bilinear form f.
struct UnitizedAlgebra {
  int dimV = 0;
  std::vector<std::vector<Vec>> dot;  // dot[i][j] = e_i . e_j in V coords
  Mat f;
};

/// Full multiplication table on k (+) V: coordinate 0 is the adjoined unit,
/// (x0,x1)(y0,y1) = (x0 y0 + f(x1,y1), x0 y1 + y0 x1 + x1.y1).
MulTable unitize(const UnitizedAlgebra& u);

UnitizedAlgebra scale_form(const UnitizedAlgebra& u, const Rat& c);

/// Splits a built A(g) along its counit: V = ker eps with the induced product
/// and form. Requires the structure table. Also returns the change of basis:
/// column 0 = unit, column 1+i = i-th V basis vector (A-coordinates).
UnitizedAlgebra split_counit(const AlgebraTable& t, Mat* basisOut = nullptr);

/// Structure table of A(g) itself (requires structure_table(t) to have run).
MulTable table_of(const AlgebraTable& t);

/// a(a(aa)) - (aa)(aa).
Vec pa1_residual(const MulTable& t, const Vec& a);

/// x(x^2 y) - x^2(x y).
Vec jordan_residual(const MulTable& t, const Vec& x, const Vec& y);

/// Candidates c for which Unit(V, c f) survives every sampled degree-4
/// power-associativity test. `diag` (optional) receives a note when the
/// hypotheses (f not alternating, v and v^2 independent somewhere) fail on
/// the samples, making a "survives" outcome inconclusive. `witnesses`
/// (optional) receives, per eliminated c, an element with nonzero residual.
std::vector<Rat> unique_c_scan(const UnitizedAlgebra& u, const std::vector<Rat>& candidates,
                               int samples, std::uint64_t seed, std::string* diag = nullptr,
                               std::vector<std::pair<Rat, Vec>>* witnesses = nullptr);

/// Dimensions of I_0 <= I_1 <= ... where I_e is spanned by Id plus all
/// symmetrized products M_{a_1}...M_{a_e} over multisets from a fixed seeded
/// generator set of size 8. Lower bounds on the true module dimensions.
std::vector<int> ie_chain(const MulTable& t, int eMax, std::uint64_t seed);

}  // namespace calg

#endif
