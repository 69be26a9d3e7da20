#ifndef CALG_CONSTRUCTION2_HPP
#define CALG_CONSTRUCTION2_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "calg/algcore.hpp"

namespace calg {

/// Finite-dimensional representation of the Lie algebra by exact matrices,
/// one per basis element, with its Casimir eigenvalue.
struct Representation {
  std::string type;
  int dimV = 0;
  std::vector<Mat> rho;  // rho[i] = action of basis element e_i
  Rat mu;                // Casimir eigenvalue of the highest weight
  Rat traceRatio;        // Tr(rho(x) rho(y)) = traceRatio * K(x,y)
};

/// rho extended linearly to a g-element given in coordinates.
Mat rep_of_vec(const Representation& rep, const Vec& x);

/// Validates commutators against the bracket table and the trace
/// normalization; throws std::invalid_argument naming the offending pair.
void validate_rep(const LieAlgebra& L, const Representation& rep);

/// The tautological 3-dimensional representation (type A2 only).
Representation natural_rep_sl3(const LieAlgebra& L);

/// JSON round trip: {"type": ..., "dimV": n, "matrices": [[row-major "p/q"]]}.
Representation load_rep(const std::string& path, const LieAlgebra& L);
void save_rep(const Representation& rep, const std::string& path);

/// sigma(S(w)) = 6 hv sum_{ij} w_ij rho_i o rho_j - (1/2) <w, K> Id, the
/// embedding of A(g) into End(V) for the small representations.
Mat sigma(const LieAlgebra& L, const Representation& rep, const Mat& pre);

/// Projection identity: Proj_{pi(g)}(sigma(S(X^2)) o pi(Y)) = pi(S(X^2) Y)
/// on seeded random X, Y. Returns true when every sample matches exactly.
bool check_pi_proj(const LieAlgebra& L, const Representation& rep, int samples,
                   std::uint64_t seed);

/// The explicit A(sl3) product on 3x3 matrices:
/// P*Q = [eps(PoQ)/2 - (3/2) eps(P) eps(Q)] I + eps(Q) P + eps(P) Q,
/// with eps = Tr/3.
Mat sl3_model_product(const Mat& P, const Mat& Q);

}  // namespace calg

#endif
