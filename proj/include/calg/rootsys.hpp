#ifndef CALG_ROOTSYS_HPP
#define CALG_ROOTSYS_HPP

#include <string>
#include <vector>

#include "calg/matrix.hpp"
#include "calg/rational.hpp"

namespace calg {

/// One of the simple families A..G with a rank.
struct RootSystemSpec {
  char family = 'A';  // 'A'..'G'
  int rank = 1;

  /// Parses "A1".."G2", case-insensitive. Throws std::invalid_argument.
  static RootSystemSpec parse(const std::string& s);
  std::string name() const { return family + std::to_string(rank); }
};

/// Throws std::invalid_argument naming the violated constraint when the
/// family/rank pair is inadmissible (E in {6,7,8}, F=4, G=2, D>=3, B,C>=2, A>=1).
void validate_spec(const RootSystemSpec& spec);

using RootVec = std::vector<int>;  // simple-root coordinates

/// Root-system combinatorics plus the canonical inner product on the weight space.
struct RootDatum {
  RootSystemSpec spec;
  int rank = 0;

  std::vector<RootVec> positiveRoots;  // ordered by height, then lexicographic
  std::vector<RootVec> roots;          // positives, then their negatives in mirrored order
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = 2<a_i,a_j>/<a_j,a_j>

  RootVec theta;       // highest (long) root
  RootVec thetaShort;  // highest short root (= theta when simply laced)
  int nuG = 1;         // squared-length ratio long/short
  long h = 0;          // Coxeter number
  long hCheck = 0;     // dual Coxeter number

  RootVec delta;       // sum of positive roots, simple-root coordinates
  Mat fundWeights;     // row i = omega_i in simple-root coordinates
  Mat canonicalGram;   // Gram matrix of <,> on the simple roots

  int dimG() const { return rank + int(roots.size()); }

  /// nu_alpha: 1 for long roots, nuG for short ones.
  int nu(const RootVec& alpha) const;

  bool is_root(const RootVec& v) const;
  int root_index(const RootVec& v) const;  // index into roots, -1 if absent

  /// <u,v> for vectors in simple-root coordinates (rational entries).
  Rat form_roots(const Vec& u, const Vec& v) const;
  Rat form_roots(const RootVec& u, const RootVec& v) const;

  /// Conversion: simple-root coordinates -> fundamental-weight coordinates.
  Vec to_weight_coords(const RootVec& r) const;
  /// Conversion: fundamental-weight coordinates -> simple-root coordinates.
  Vec to_root_coords(const Vec& weight) const;
};

RootDatum build_root_system(const RootSystemSpec& spec);

/// Canonical bilinear form on weights given in fundamental-weight coordinates.
Rat canonical_form(const RootDatum& d, const Vec& lambda, const Vec& mu);

/// <lambda, lambda + delta> for dominant lambda (fundamental-weight coordinates).
/// Throws std::invalid_argument when lambda is not dominant.
Rat casimir_eigenvalue(const RootDatum& d, const Vec& lambda);

/// Weyl dimension formula for dominant lambda; exact integer result.
mpz_class weyl_dim(const RootDatum& d, const Vec& lambda);

}  // namespace calg

#endif
