#include "calg/unitize.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace calg {

Vec MulTable::mul(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim || int(y.size()) != dim)
    throw std::invalid_argument("MulTable::mul: dimension mismatch");
  Vec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(y[j])) continue;
      Rat f = x[i] * y[j];
      const Vec& v = c[i][j];
      for (int k = 0; k < dim; ++k)
        if (!is_zero(v[k])) out[k] += f * v[k];
    }
  }
  return out;
}

MulTable unitize(const UnitizedAlgebra& u) {
  int nv = u.dimV;
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < i; ++j) {
      if (u.f.at(i, j) != u.f.at(j, i)) throw std::invalid_argument("unitize: f not symmetric");
      if (u.dot[i][j] != u.dot[j][i]) throw std::invalid_argument("unitize: product not symmetric");
    }
  MulTable t;
  t.dim = nv + 1;
  t.c.assign(t.dim, std::vector<Vec>(t.dim, Vec(t.dim)));
  t.c[0][0][0] = 1;
  for (int i = 0; i < nv; ++i) {
    t.c[0][i + 1][i + 1] = 1;
    t.c[i + 1][0][i + 1] = 1;
    for (int j = 0; j < nv; ++j) {
      Vec v(t.dim);
      v[0] = u.f.at(i, j);
      for (int k = 0; k < nv; ++k) v[k + 1] = u.dot[i][j][k];
      t.c[i + 1][j + 1] = std::move(v);
    }
  }
  return t;
}

UnitizedAlgebra scale_form(const UnitizedAlgebra& u, const Rat& c) {
  UnitizedAlgebra s(u);
  s.f = u.f.scaled(c);
  return s;
}

UnitizedAlgebra split_counit(const AlgebraTable& t, Mat* basisOut) {
  if (t.prodConst.empty())
    throw std::logic_error("split_counit: structure table not built");
  int n = t.dimA;
  // Candidate V vectors: a - eps(a) e for each basis element a.
  std::vector<Vec> cand;
  for (int a = 0; a < n; ++a) {
    Vec v(n);
    v[a] += 1;
    for (int k = 0; k < n; ++k) v[k] -= t.epsilon[a] * t.unitCoords[k];
    cand.push_back(std::move(v));
  }
  std::vector<int> keep = independent_subset(cand);
  if (int(keep.size()) != n - 1) throw std::logic_error("split_counit: ker eps has wrong dimension");

  Mat basis(n, n);  // column 0 = unit, column 1+i = V basis vector
  for (int k = 0; k < n; ++k) basis.at(k, 0) = t.unitCoords[k];
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int k = 0; k < n; ++k) basis.at(k, int(i) + 1) = cand[keep[i]][k];
  Mat inv = inverse(basis);

  UnitizedAlgebra u;
  u.dimV = n - 1;
  u.f = Mat(n - 1, n - 1);
  u.dot.assign(n - 1, std::vector<Vec>(n - 1));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) {
      Vec w = t.product(cand[keep[i]], cand[keep[j]]);
      Rat fv = t.counit(w);
      u.f.at(i, j) = fv;
      for (int k = 0; k < n; ++k) w[k] -= fv * t.unitCoords[k];
      Vec x = inv.apply(w);
      if (!is_zero(x[0])) throw std::logic_error("split_counit: V product escaped ker eps");
      u.dot[i][j] = Vec(x.begin() + 1, x.end());
    }
  if (basisOut) *basisOut = basis;
  return u;
}

MulTable table_of(const AlgebraTable& t) {
  if (t.prodConst.empty()) throw std::logic_error("table_of: structure table not built");
  MulTable m;
  m.dim = t.dimA;
  m.c = t.prodConst;
  return m;
}

Vec pa1_residual(const MulTable& t, const Vec& a) {
  Vec aa = t.mul(a, a);
  Vec lhs = t.mul(a, t.mul(a, aa));
  Vec rhs = t.mul(aa, aa);
  for (int k = 0; k < t.dim; ++k) lhs[k] -= rhs[k];
  return lhs;
}

Vec jordan_residual(const MulTable& t, const Vec& x, const Vec& y) {
  Vec x2 = t.mul(x, x);
  Vec lhs = t.mul(x, t.mul(x2, y));
  Vec rhs = t.mul(x2, t.mul(x, y));
  for (int k = 0; k < t.dim; ++k) lhs[k] -= rhs[k];
  return lhs;
}

namespace {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace

std::vector<Rat> unique_c_scan(const UnitizedAlgebra& u, const std::vector<Rat>& candidates,
                               int samples, std::uint64_t seed, std::string* diag,
                               std::vector<std::pair<Rat, Vec>>* witnesses) {
  // Hypothesis probes (independent of c): f not alternating, and some sample
  // with a and a.a linearly independent in V.
  bool fNonAlt = false;
  for (int i = 0; i < u.dimV && !fNonAlt; ++i)
    if (!is_zero(u.f.at(i, i))) fNonAlt = true;
  bool wedgeNonzero = false;
  {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    MulTable vt;  // V as a (non-unital) table, embedded for mul()
    vt.dim = u.dimV;
    vt.c = u.dot;
    for (int s = 0; s < std::max(samples, 16) && !wedgeNonzero; ++s) {
      Vec a = rng.vector(std::size_t(u.dimV));
      Vec a2 = vt.mul(a, a);
      SpanSolver sp(u.dimV);
      sp.add(a);
      if (sp.add(a2)) wedgeNonzero = true;
    }
  }
  if (diag) {
    if (!fNonAlt) *diag += "f alternating on probes; ";
    if (!wedgeNonzero) *diag += "a and a*a dependent on all probes; ";
    if (!fNonAlt || !wedgeNonzero) *diag += "survivor list is inconclusive";
  }

  std::vector<Rat> survivors;
  for (const Rat& c : candidates) {
    MulTable t = unitize(scale_form(u, c));
    bool witness = false;
    Vec found;
    // Deterministic small-support sweep, then seeded random samples.
    for (int i = 0; i < t.dim && !witness; ++i)
      for (int j = i + 1; j < t.dim && !witness; ++j)
        for (long vj : {1L, -1L, 2L}) {
          Vec a(t.dim);
          a[i] = 1;
          a[j] = rat_of(vj);
          if (!vec_is_zero(pa1_residual(t, a))) {
            witness = true;
            found = std::move(a);
            break;
          }
        }
    Rng rng(seed);
    for (int s = 0; s < samples && !witness; ++s) {
      Vec a = rng.vector(std::size_t(t.dim));
      if (!vec_is_zero(pa1_residual(t, a))) {
        witness = true;
        found = std::move(a);
      }
    }
    if (!witness)
      survivors.push_back(c);
    else if (witnesses)
      witnesses->emplace_back(c, std::move(found));
  }
  return survivors;
}

std::vector<int> ie_chain(const MulTable& t, int eMax, std::uint64_t seed) {
  constexpr int kGens = 8;
  Rng rng(seed);
  std::vector<Mat> lm;  // left multiplications by the generators
  for (int g = 0; g < kGens; ++g) {
    Vec a = rng.vector(std::size_t(t.dim));
    Mat m(t.dim, t.dim);
    Vec e(t.dim);
    for (int b = 0; b < t.dim; ++b) {
      e[b] = 1;
      Vec col = t.mul(a, e);
      e[b] = 0;
      for (int k = 0; k < t.dim; ++k) m.at(k, b) = col[k];
    }
    lm.push_back(std::move(m));
  }

  SpanSolver span(t.dim * t.dim);
  span.add(Mat::identity(t.dim).flatten());
  std::vector<int> dims{span.size()};

  // P_e over multisets: P(ms) = sum_i M_i P(ms - i); equals the sum over all
  // orderings of the multiset.
  using Key = std::array<int, kGens>;
  std::map<Key, Mat> prev;
  prev[Key{}] = Mat::identity(t.dim);
  for (int e = 1; e <= eMax; ++e) {
    std::map<Key, Mat> cur;
    for (const auto& [ms, p] : prev)
      for (int i = 0; i < kGens; ++i) {
        Key up = ms;
        up[i] += 1;
        auto it = cur.find(up);
        if (it == cur.end()) it = cur.emplace(up, Mat(t.dim, t.dim)).first;
        it->second += lm[i] * p;
      }
    for (const auto& [ms, p] : cur) span.add(p.flatten());
    dims.push_back(span.size());
    if (dims[e] == dims[e - 1]) break;  // chain stabilized
    prev = std::move(cur);
  }
  return dims;
}

}  // namespace calg
