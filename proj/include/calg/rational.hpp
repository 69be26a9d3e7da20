#ifndef CALG_RATIONAL_HPP
#define CALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace calg {

/// Exact rational scalar. Always canonical: lowest terms, positive denominator.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& s);

/// Canonical string form: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Deterministic RNG used for all seeded sampling; seed is recorded in
/// every report that depends on it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

  /// Small rational with numerator in [lo,hi] and denominator in {1,2,3}.
  Rat rational(long lo = -3, long hi = 3) {
    return rat_of(integer(lo, hi), integer(1, 3));
  }

  Vec vector(std::size_t n, long lo = -3, long hi = 3) {
    Vec v(n);
    for (auto& x : v) x = rat_of(integer(lo, hi));
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace calg

#endif
