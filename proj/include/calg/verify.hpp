#ifndef CALG_VERIFY_HPP
#define CALG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "calg/algcore.hpp"
#include "calg/unitize.hpp"

namespace calg {

enum class Status { pass, fail, inconclusive, skipped };

std::string status_str(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::skipped;
  std::string detail;
};

struct VerificationReport {
  std::string type;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  int count(Status s) const;
  bool failed() const { return count(Status::fail) > 0; }
};

/// Minimal polynomial of a square matrix, monic, as coefficients by degree.
Vec min_poly(const Mat& m);

/// Rational roots of a polynomial (coefficients by degree). Exact for roots
/// p/q with p, q found among the divisors of the primitive integer
/// coefficients; extra candidates are always tested too.
std::vector<Rat> rational_roots(const Vec& poly, const std::vector<Rat>& extraCandidates);

CheckResult check_dimension(const LieAlgebra& L, const AlgebraTable& t);
CheckResult check_trace_identity(const LieAlgebra& L);
CheckResult check_casimir(const LieAlgebra& L);
CheckResult check_tau_assoc(AlgebraTable& t, bool exhaustive, int samples, std::uint64_t seed);
CheckResult check_tau_nondeg(AlgebraTable& t);
CheckResult check_high_wt(const LieAlgebra& L);
CheckResult check_okubo(const LieAlgebra& L, int samples, std::uint64_t seed);
CheckResult check_idempotent_spectrum(AlgebraTable& t, int count, std::uint64_t seed);
CheckResult check_simplicity(AlgebraTable& t, int trials, std::uint64_t seed);
CheckResult check_jordan_subalgebra(AlgebraTable& t);
CheckResult check_hwv_regular(const LieAlgebra& L);

/// Runs every applicable check with deterministic seeding.
VerificationReport run_verification(AlgebraTable& t, std::uint64_t seed, bool exhaustive,
                                    int samples);

/// The idempotent family data behind check_idempotent_spectrum, exposed for
/// reporting: (H coordinates on the Cartan part, lambda_H, rational
/// eigenvalues of left multiplication by u_H).
struct PeirceSample {
  Vec h;
  Rat lambda;
  std::vector<Rat> eigenvalues;
};
std::vector<PeirceSample> peirce_samples(AlgebraTable& t, int count, std::uint64_t seed);

}  // namespace calg

#endif
