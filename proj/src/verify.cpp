#include "calg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace calg {

std::string status_str(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::skipped: return "skipped";
  }
  return "?";
}

int VerificationReport::count(Status s) const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

namespace {

CheckResult pass(const std::string& name, const std::string& detail = "") {
  return {name, Status::pass, detail};
}
CheckResult fail(const std::string& name, const std::string& detail) {
  return {name, Status::fail, detail};
}
CheckResult skip(const std::string& name, const std::string& detail) {
  return {name, Status::skipped, detail};
}

bool is_table1(const RootSystemSpec& s) {
  return (s.family == 'A' && s.rank == 2) || s.family == 'G' || s.family == 'F' ||
         s.family == 'E';
}

/// Table-listed dominant weight for the irreducible part of A(g).
Vec table1_weight(const RootDatum& d) {
  Vec lam(d.rank);
  if (d.spec.family == 'A') {
    lam[0] = 1;
    lam[1] = 1;
  } else if (d.spec.family == 'G') {
    lam[0] = 2;
  } else if (d.spec.family == 'F') {
    lam[3] = 2;
  } else if (d.spec.family == 'E' && d.spec.rank == 6) {
    lam[0] = 1;
    lam[5] = 1;
  } else {
    throw std::invalid_argument("no tabulated weight for " + d.spec.name());
  }
  return lam;
}

Rat root_value_on_cartan(const RootDatum& d, const RootVec& mu, const Vec& h) {
  // mu(H) for H = sum h_i H_{alpha_i}: mu(H_{alpha_i}) = alpha_i^vee(mu).
  Rat s;
  for (int i = 0; i < d.rank; ++i) {
    if (is_zero(h[i])) continue;
    long pairing = 0;
    for (int j = 0; j < d.rank; ++j) pairing += mu[j] * d.cartan[j][i];
    s += h[i] * rat_of(pairing);
  }
  return s;
}

Vec cartan_to_full(const LieAlgebra& L, const Vec& h) {
  Vec x(L.dim);
  for (int i = 0; i < L.datum.rank; ++i) x[i] = h[i];
  return x;
}

void ensure_products(AlgebraTable& t) {
  if (t.prodConst.empty()) structure_table(t);
}

}  // namespace

Vec min_poly(const Mat& m) {
  int n = m.rows();
  SpanSolver span(n * n);
  Mat p = Mat::identity(n);
  for (;;) {
    Vec flat = p.flatten();
    if (auto c = span.express(flat)) {
      int d = int(c->size());
      Vec poly(d + 1);
      poly[d] = 1;
      for (int k = 0; k < d; ++k) poly[k] = -(*c)[k];
      return poly;
    }
    span.add(flat);
    p = p * m;
  }
}

namespace {

Rat poly_eval(const Vec& poly, const Rat& x) {
  Rat v;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * x + *it;
  return v;
}

void small_divisors(const mpz_class& n, std::vector<mpz_class>& out) {
  mpz_class a = abs(n);
  if (a == 0 || a > mpz_class("1000000000000")) return;
  for (mpz_class d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(a / d);
    }
}

}  // namespace

std::vector<Rat> rational_roots(const Vec& poly, const std::vector<Rat>& extraCandidates) {
  Vec p(poly);
  while (!p.empty() && is_zero(p.back())) p.pop_back();
  std::vector<Rat> roots;
  if (p.size() <= 1) return roots;
  std::set<Rat> cands(extraCandidates.begin(), extraCandidates.end());
  cands.insert(rat_of(0));
  cands.insert(rat_of(1));
  cands.insert(rat_of(-1));
  cands.insert(rat_of(1, 2));
  // Integerize, then take p/q over divisors of the outer coefficients.
  mpz_class lcm = 1;
  for (const Rat& c : p) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
  std::vector<mpz_class> ip;
  for (const Rat& c : p) {
    Rat v = c * lcm;
    v.canonicalize();
    ip.push_back(v.get_num());
  }
  std::size_t lo = 0;
  while (lo < ip.size() && ip[lo] == 0) ++lo;
  if (lo < ip.size()) {
    std::vector<mpz_class> nums, dens;
    small_divisors(ip[lo], nums);
    small_divisors(ip.back(), dens);
    for (const auto& a : nums)
      for (const auto& b : dens) {
        Rat r(a, b);
        r.canonicalize();
        cands.insert(r);
        cands.insert(-r);
      }
  }
  for (const Rat& c : cands)
    if (is_zero(poly_eval(p, c))) roots.push_back(c);
  std::sort(roots.begin(), roots.end());
  return roots;
}

CheckResult check_dimension(const LieAlgebra& L, const AlgebraTable& t) {
  const RootDatum& d = L.datum;
  std::ostringstream os;
  mpz_class expected;
  if (is_table1(d.spec)) {
    expected = 1 + weyl_dim(d, table1_weight(d));
    os << "1 + dim L(lambda) = " << expected.get_str();
  } else {
    Vec twoTheta = d.to_weight_coords(d.theta);
    for (auto& x : twoTheta) x *= 2;
    mpz_class n(L.dim);
    expected = n * (n + 1) / 2 - weyl_dim(d, twoTheta);
    os << "binom(dimG+1,2) - dim V(2theta) = " << expected.get_str();
  }
  if (d.spec.family == 'A' && d.rank == 2) {
    // both predictions must agree for A2
    Vec twoTheta = d.to_weight_coords(d.theta);
    for (auto& x : twoTheta) x *= 2;
    mpz_class alt = mpz_class(L.dim) * (L.dim + 1) / 2 - weyl_dim(d, twoTheta);
    if (alt != expected) return fail("dimension", "A2 cross-check mismatch");
  }
  if (mpz_class(t.dimA) != expected)
    return fail("dimension", "dimA = " + std::to_string(t.dimA) + " but " + os.str());
  return pass("dimension", "dimA = " + std::to_string(t.dimA));
}

CheckResult check_trace_identity(const LieAlgebra& L) {
  Rat hv1 = rat_of(L.hCheck() + 1);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i; j < L.dim; ++j) {
      SOperator s = s_map(L, i, j);
      if (s.op.trace() != hv1 * L.killingGram.at(i, j))
        return fail("trace_identity", "pair (" + L.basisLabels[i] + ", " + L.basisLabels[j] + ")");
    }
  return pass("trace_identity", "Tr S = (hv+1) K on all pairs");
}

CheckResult check_casimir(const LieAlgebra& L) {
  Mat m = s_of_pre(L, L.killingInv) - p_of_pre(L, L.killingInv);
  m = m.scaled(rat_of(1, L.hCheck()));
  if (!(m == Mat::identity(L.dim)))
    return fail("casimir", "sum ad(X_i) ad(Y_i) is not the identity");
  return pass("casimir", "adjoint Casimir = Id");
}

CheckResult check_tau_assoc(AlgebraTable& t, bool exhaustive, int samples, std::uint64_t seed) {
  tau_gram(t);
  int n = t.dimA;
  if (exhaustive) {
    ensure_products(t);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Rat lhs, rhs;
          const Vec& ab = t.prodConst[a][b];
          const Vec& bc = t.prodConst[b][c];
          for (int k = 0; k < n; ++k) {
            if (!is_zero(ab[k])) lhs += ab[k] * t.tauGram.at(k, c);
            if (!is_zero(bc[k])) rhs += bc[k] * t.tauGram.at(a, k);
          }
          if (lhs != rhs)
            return fail("tau_assoc", "basis triple (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");
        }
    return pass("tau_assoc", "exhaustive over all basis triples");
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Vec a = rng.vector(std::size_t(n)), b = rng.vector(std::size_t(n)), c = rng.vector(std::size_t(n));
    if (t.tau(t.product(a, b), c) != t.tau(a, t.product(b, c)))
      return fail("tau_assoc", "sampled triple #" + std::to_string(s));
  }
  return pass("tau_assoc", std::to_string(samples) + " sampled triples");
}

CheckResult check_tau_nondeg(AlgebraTable& t) {
  tau_gram(t);
  int r = rank_of(t.tauGram);
  if (r != t.dimA)
    return fail("tau_nondeg", "rank " + std::to_string(r) + " < dimA " + std::to_string(t.dimA));
  // Paired-root values: tau(S(X_a X_b), S(X_-a X_-b)) for orthogonal pairs
  // with a+b not a root.
  const LieAlgebra& L = t.lie;
  const RootDatum& d = L.datum;
  int checked = 0;
  int npos = int(d.positiveRoots.size());
  for (int i = 0; i < npos && checked < 5; ++i)
    for (int j = i; j < npos && checked < 5; ++j) {
      const RootVec& a = d.positiveRoots[i];
      const RootVec& b = d.positiveRoots[j];
      RootVec sum(a);
      for (int k = 0; k < d.rank; ++k) sum[k] += b[k];
      if (d.is_root(sum) || !is_zero(d.form_roots(a, b))) continue;
      RootVec ma(a), mb(b);
      for (int& x : ma) x = -x;
      for (int& x : mb) x = -x;
      int ba = L.rootVectorIndex(d.root_index(a));
      int bb = L.rootVectorIndex(d.root_index(b));
      int na = L.rootVectorIndex(d.root_index(ma));
      int nb = L.rootVectorIndex(d.root_index(mb));
      Mat u = product_pre(L, pair_pre(L.dim, ba, bb), pair_pre(L.dim, na, nb));
      Rat tauVal;
      {
        Rat hv1 = rat_of(L.hCheck() + 1);
        Rat acc;
        for (int r2 = 0; r2 < L.dim; ++r2)
          for (int c2 = 0; c2 < L.dim; ++c2)
            if (!is_zero(u.at(r2, c2))) acc += u.at(r2, c2) * L.killingGram.at(r2, c2);
        tauVal = hv1 * acc / rat_of(L.dim);
      }
      Rat expect = rat_of(L.hCheck() + 1) * rat_of(2 * L.hCheck() * L.hCheck()) *
                   rat_of(d.nu(a) * d.nu(b)) / rat_of(L.dim);
      if (tauVal != expect) return fail("tau_nondeg", "paired-root tau value mismatch");
      ++checked;
    }
  return pass("tau_nondeg", "rank " + std::to_string(r) + ", " + std::to_string(checked) +
                                " paired-root values");
}

CheckResult check_high_wt(const LieAlgebra& L) {
  const RootDatum& d = L.datum;
  int nr = int(d.roots.size());
  for (int i = 0; i < nr; ++i)
    for (int j = i; j < nr; ++j) {
      const RootVec& a = d.roots[i];
      const RootVec& b = d.roots[j];
      RootVec sum(a);
      bool zero = true;
      for (int k = 0; k < d.rank; ++k) {
        sum[k] += b[k];
        if (sum[k] != 0) zero = false;
      }
      if (zero || d.is_root(sum)) continue;
      Rat ip = d.form_roots(a, b);
      if (sgn(ip) < 0) return fail("high_wt", "negative inner product with non-root sum");
      bool bothShort = d.nu(a) > 1 && d.nu(b) > 1;
      bool expectNonzero = is_zero(ip) ? true : bothShort;
      SOperator s = s_map(L, L.rootVectorIndex(i), L.rootVectorIndex(j));
      if (s.op.is_zero() == expectNonzero)
        return fail("high_wt", "pattern mismatch at roots " + L.basisLabels[L.rootVectorIndex(i)] +
                                   ", " + L.basisLabels[L.rootVectorIndex(j)]);
    }
  return pass("high_wt", "zero/nonzero pattern matches on all qualifying root pairs");
}

CheckResult check_okubo(const LieAlgebra& L, int samples, std::uint64_t seed) {
  if (!is_table1(L.datum.spec)) return skip("okubo", "type outside the tabulated list");
  Rat alpha = rat_of(5) / rat_of(2 * (2 + L.dim));
  long hv = L.hCheck();
  if (rat_of(4) * alpha * rat_of(hv * hv) != rat_of(hv + 6))
    return fail("okubo", "4 alpha hv^2 != hv + 6");
  Rng rng(seed);
  bool a2 = L.datum.spec.family == 'A';
  for (int s = 0; s < samples; ++s) {
    Vec x = rng.vector(std::size_t(L.dim));
    Mat ax = L.ad_dense(x);
    Mat ax2 = ax * ax;
    Rat kxx = L.killing(x, x);
    if ((ax2 * ax2).trace() != alpha * kxx * kxx)
      return fail("okubo", "quartic trace mismatch at sample " + std::to_string(s));
    if (!a2) {
      Vec y = rng.vector(std::size_t(L.dim));
      Mat ay = L.ad_dense(y);
      Mat ay2 = ay * ay;
      Vec xy = L.bracket_vec(x, y);
      Rat kxy = L.killing(x, y);
      Rat rhs = -L.killing(xy, xy) / 6 + rat_of(2) / 3 * alpha * kxy * kxy +
                alpha / 3 * kxx * L.killing(y, y);
      if ((ax2 * ay2).trace() != rhs)
        return fail("okubo", "mixed quartic trace mismatch at sample " + std::to_string(s));
    }
  }
  return pass("okubo", "alpha_Ad = " + rat_str(alpha) + ", " + std::to_string(samples) +
                           " samples");
}

std::vector<PeirceSample> peirce_samples(AlgebraTable& t, int count, std::uint64_t seed) {
  const LieAlgebra& L = t.lie;
  const RootDatum& d = L.datum;
  int l = d.rank;
  int gammaIdx = -1;
  for (int i = 0; i < int(d.positiveRoots.size()); ++i)
    if (is_zero(d.form_roots(d.positiveRoots[i], d.theta))) {
      gammaIdx = i;
      break;
    }
  if (gammaIdx < 0) throw std::invalid_argument("no positive root orthogonal to theta");
  const RootVec& gamma = d.positiveRoots[gammaIdx];
  int bTheta = L.rootVectorIndex(d.root_index(d.theta));
  int bGamma = L.rootVectorIndex(gammaIdx);
  Vec sc = t.coords_of_pair(bTheta, bGamma);

  bool haveTable = !t.prodConst.empty();
  Rng rng(seed);
  std::vector<PeirceSample> out;
  while (int(out.size()) < count) {
    Vec h = rng.vector(std::size_t(l));
    Vec hf = cartan_to_full(L, h);
    Rat khh = L.killing(hf, hf);
    if (is_zero(khh)) continue;
    Mat pre(L.dim, L.dim);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (!is_zero(h[i]) && !is_zero(h[j])) pre.at(i, j) = h[i] * h[j];
    Vec u = t.express_op(s_of_pre(L, pre));
    for (auto& x : u) x /= khh;

    Vec uu = t.product(u, u);
    if (uu != u) throw std::logic_error("u_H is not idempotent");
    RootVec tg(d.theta);
    for (int k = 0; k < l; ++k) tg[k] += gamma[k];
    Rat val = root_value_on_cartan(d, tg, h);
    Rat lambda = rat_of(L.hCheck()) * val * val / (2 * khh);
    Vec us = t.product(u, sc);
    Vec expect(sc);
    for (auto& x : expect) x *= lambda;
    if (us != expect) throw std::logic_error("lambda_H eigenvalue formula failed");

    PeirceSample ps;
    ps.h = h;
    ps.lambda = lambda;
    if (haveTable) {
      Mat m = t.left_mult(u);
      ps.eigenvalues = rational_roots(min_poly(m), {lambda});
    }
    out.push_back(std::move(ps));
  }
  return out;
}

CheckResult check_idempotent_spectrum(AlgebraTable& t, int count, std::uint64_t seed) {
  const RootSystemSpec& s = t.lie.datum.spec;
  if (s.family == 'A' && s.rank <= 2)
    return skip("idempotent_spectrum", "types A1 and A2 are excluded");
  std::vector<PeirceSample> samples;
  try {
    samples = peirce_samples(t, count, seed);
  } catch (const std::invalid_argument& e) {
    return skip("idempotent_spectrum", e.what());
  } catch (const std::logic_error& e) {
    return fail("idempotent_spectrum", e.what());
  }
  std::set<Rat> distinct;
  bool outside = false;
  for (const auto& ps : samples) {
    distinct.insert(ps.lambda);
    if (ps.lambda != 0 && ps.lambda != rat_of(1, 2) && ps.lambda != 1) outside = true;
  }
  if (!outside)
    return fail("idempotent_spectrum", "all lambda_H lie in {0, 1/2, 1}");
  if (count >= 3 && int(distinct.size()) < 3)
    return fail("idempotent_spectrum", "fewer than 3 distinct lambda_H values");
  return pass("idempotent_spectrum", std::to_string(count) + " idempotents, " +
                                         std::to_string(distinct.size()) + " distinct lambda_H");
}

CheckResult check_simplicity(AlgebraTable& t, int trials, std::uint64_t seed) {
  ensure_products(t);
  int n = t.dimA;
  Rng rng(seed);
  int full = 0;
  for (int tr = 0; tr < trials; ++tr) {
    Vec v;
    do {
      v = rng.vector(std::size_t(n));
    } while (std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_zero(x); }));
    SpanSolver span(n);
    std::vector<Vec> frontier{v};
    span.add(v);
    while (!frontier.empty() && span.size() < n) {
      std::vector<Vec> next;
      Vec e(n);
      for (const Vec& w : frontier)
        for (int b = 0; b < n && span.size() < n; ++b) {
          e[b] = 1;
          Vec p = t.product(w, e);
          e[b] = 0;
          if (span.add(p)) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
    if (span.size() == n) ++full;
  }
  std::string detail = "generated ideal full for " + std::to_string(full) + "/" +
                       std::to_string(trials) + " trials";
  if (full != trials) return fail("simplicity", detail);
  return pass("simplicity", detail);
}

CheckResult check_jordan_subalgebra(AlgebraTable& t) {
  const LieAlgebra& L = t.lie;
  int l = L.datum.rank;
  std::vector<std::pair<int, int>> cpairs;
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) cpairs.emplace_back(i, j);
  // Image dimension binom(l+1, 2).
  std::vector<Vec> ops;
  for (auto [i, j] : cpairs) ops.push_back(s_of_pre(L, pair_pre(L.dim, i, j)).flatten());
  if (int(independent_subset(ops).size()) != int(cpairs.size()))
    return fail("jordan_subalgebra", "image of Sym^2 h has deficient dimension");
  // Homomorphism property on all Cartan 4-tuples.
  Rat half = rat_of(1, 2);
  for (auto [i, j] : cpairs)
    for (auto [k, m] : cpairs) {
      Mat w = pair_pre(L.dim, i, j);
      Mat v = pair_pre(L.dim, k, m);
      Mat jordanPre = ((w * L.killingGram) * v + (v * L.killingGram) * w).scaled(half);
      if (!(s_of_pre(L, jordanPre) == s_of_pre(L, product_pre(L, w, v))))
        return fail("jordan_subalgebra", "homomorphism residual nonzero");
    }
  // Orthogonalized Cartan basis: P(X_i^2) o P(X_j^2) = 0 for i != j.
  std::vector<Vec> ortho;
  for (int i = 0; i < l; ++i) {
    Vec x = cartan_to_full(L, Vec(std::size_t(l)));
    x[i] = 1;
    for (const Vec& prev : ortho) {
      Rat num = L.killing(x, prev);
      Rat den = L.killing(prev, prev);
      if (is_zero(den)) return fail("jordan_subalgebra", "degenerate Cartan Gram");
      for (int k2 = 0; k2 < L.dim; ++k2) x[k2] -= num / den * prev[k2];
    }
    ortho.push_back(std::move(x));
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      Mat wi(L.dim, L.dim), wj(L.dim, L.dim);
      for (int a = 0; a < L.dim; ++a)
        for (int b = 0; b < L.dim; ++b) {
          if (!is_zero(ortho[i][a]) && !is_zero(ortho[i][b])) wi.at(a, b) = ortho[i][a] * ortho[i][b];
          if (!is_zero(ortho[j][a]) && !is_zero(ortho[j][b])) wj.at(a, b) = ortho[j][a] * ortho[j][b];
        }
      Mat pi = p_of_pre(L, wi), pj = p_of_pre(L, wj);
      if (!((pi * pj + pj * pi).is_zero()))
        return fail("jordan_subalgebra", "orthogonal squares not Jordan-orthogonal");
    }
  return pass("jordan_subalgebra", "dim " + std::to_string(cpairs.size()) +
                                       ", homomorphism exact on all Cartan 4-tuples");
}

CheckResult check_hwv_regular(const LieAlgebra& L) {
  const RootDatum& d = L.datum;
  int l = d.rank;
  std::vector<int> keep;
  for (int i = 0; i < l; ++i) {
    RootVec ai(l, 0);
    ai[i] = 1;
    if (is_zero(d.form_roots(ai, d.theta))) keep.push_back(i);
  }
  if (keep.empty()) return skip("hwv_regular", "no simple root orthogonal to theta");
  // Connected components of the retained diagram.
  std::map<int, int> comp;
  int ncomp = 0;
  for (int s : keep) {
    if (comp.count(s)) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : keep)
        if (!comp.count(y) && d.cartan[x][y] != 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  if (d.spec.family == 'D' && d.rank == 4 && ncomp != 3)
    return fail("hwv_regular", "expected 3 components for D4, found " + std::to_string(ncomp));

  int bTheta = L.rootVectorIndex(d.root_index(d.theta));
  for (int c = 0; c < ncomp; ++c) {
    int betaIdx = -1;
    for (int i = 0; i < int(d.positiveRoots.size()); ++i) {
      const RootVec& r = d.positiveRoots[i];
      bool ok = true;
      for (int k = 0; k < l && ok; ++k)
        if (r[k] != 0 && (!comp.count(k) || comp[k] != c)) ok = false;
      if (ok) betaIdx = i;  // positiveRoots sorted by height: last hit is highest
    }
    if (betaIdx < 0) return fail("hwv_regular", "empty component");
    Mat s = s_of_pre(L, pair_pre(L.dim, bTheta, L.rootVectorIndex(betaIdx)));
    if (s.is_zero()) return fail("hwv_regular", "S(X_theta X_beta) vanishes");
    for (int i = 0; i < int(d.positiveRoots.size()); ++i) {
      const Mat adp = L.ad[L.rootVectorIndex(i)].dense();
      if (!((adp * s - s * adp).is_zero()))
        return fail("hwv_regular", "highest-weight vector not annihilated");
    }
  }
  return pass("hwv_regular", std::to_string(ncomp) + " component(s), all vectors highest-weight");
}

VerificationReport run_verification(AlgebraTable& t, std::uint64_t seed, bool exhaustive,
                                    int samples) {
  VerificationReport rep;
  rep.type = t.lie.datum.spec.name();
  rep.seed = seed;
  bool small = t.dimA <= 64;
  bool tablesFeasible = t.dimA <= 128;
  if (tablesFeasible) ensure_products(t);

  rep.checks.push_back(check_dimension(t.lie, t));
  rep.checks.push_back(check_trace_identity(t.lie));
  rep.checks.push_back(check_casimir(t.lie));
  rep.checks.push_back(check_high_wt(t.lie));
  rep.checks.push_back(check_tau_assoc(t, exhaustive || small, samples, seed));
  rep.checks.push_back(check_tau_nondeg(t));
  rep.checks.push_back(check_okubo(t.lie, std::min(samples, 20), seed + 1));
  rep.checks.push_back(check_jordan_subalgebra(t));
  rep.checks.push_back(check_hwv_regular(t.lie));
  const RootSystemSpec& s = t.lie.datum.spec;
  if (s.family == 'A' && s.rank <= 2)
    rep.checks.push_back(skip("idempotent_spectrum", "types A1 and A2 are excluded"));
  else
    rep.checks.push_back(check_idempotent_spectrum(t, tablesFeasible ? 5 : 2, seed + 2));
  if (tablesFeasible)
    rep.checks.push_back(check_simplicity(t, std::min(samples, 20), seed + 3));
  else
    rep.checks.push_back(skip("simplicity", "structure table too large for closure probes"));
  return rep;
}

}  // namespace calg
