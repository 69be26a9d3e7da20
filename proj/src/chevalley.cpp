#include "calg/chevalley.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace calg {

Mat SparseMat::dense() const {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, v] : rows[i]) m.at(i, j) += v;
  return m;
}

void SparseMat::mul_dense_into(const Mat& m, const Rat& scale, Mat& out) const {
  for (int i = 0; i < n; ++i)
    for (const auto& [k, v] : rows[i]) {
      Rat f = scale * v;
      for (int j = 0; j < m.cols(); ++j) {
        const Rat& b = m.at(k, j);
        if (!is_zero(b)) out.at(i, j) += f * b;
      }
    }
}

void SparseMat::add_into(const Rat& scale, Mat& out) const {
  for (int i = 0; i < n; ++i)
    for (const auto& [j, v] : rows[i]) out.at(i, j) += scale * v;
}

Vec SparseMat::apply(const Vec& v) const {
  Vec out(n);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, x] : rows[i])
      if (!is_zero(v[j])) out[i] += x * v[j];
  return out;
}

namespace {

RootVec add_rv(const RootVec& a, const RootVec& b) {
  RootVec s(a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

RootVec neg_rv(const RootVec& a) {
  RootVec s(a);
  for (int& x : s) x = -x;
  return s;
}

bool is_pos(const RootVec& a) {
  for (int x : a)
    if (x != 0) return x > 0;
  return false;
}

/// Structure-constant engine: N_{alpha,beta} for all root pairs, anchored at
/// the extraspecial pairs (positive sign) and propagated by the standard
/// relations between the N's of a Chevalley basis.
class NTable {
 public:
  explicit NTable(const RootDatum& d) : d_(d) {
    for (std::size_t i = 0; i < d.positiveRoots.size(); ++i)
      posIndex_[d.positiveRoots[i]] = int(i);
  }

  /// 0 when alpha + beta is not a root.
  Rat n(const RootVec& alpha, const RootVec& beta) {
    RootVec sum = add_rv(alpha, beta);
    if (!d_.is_root(sum)) return 0;
    if (is_pos(alpha) && is_pos(beta)) return n_pos(alpha, beta);
    if (!is_pos(alpha) && !is_pos(beta)) return -n(neg_rv(alpha), neg_rv(beta));
    // mixed signs
    if (!is_pos(alpha)) return -n(beta, alpha);
    if (!is_pos(sum)) return -n(neg_rv(alpha), neg_rv(beta));
    // alpha > 0, beta < 0, alpha + beta > 0; rotate alpha+beta+gamma = 0 with
    // gamma = -sum: N(a,b)/(g,g) = N(b,g)/(a,a), then flip the negative pair.
    Rat lenSum = d_.form_roots(sum, sum);
    Rat lenA = d_.form_roots(alpha, alpha);
    return -(lenSum / lenA) * n_pos(neg_rv(beta), sum);
  }

 private:
  int pos_index(const RootVec& r) const {
    auto it = posIndex_.find(r);
    if (it == posIndex_.end()) throw std::logic_error("NTable: not a positive root");
    return it->second;
  }

  /// Largest k >= 0 with beta - k*alpha a root.
  int string_down(const RootVec& alpha, const RootVec& beta) const {
    int p = 0;
    RootVec cur(beta);
    for (;;) {
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= alpha[i];
      bool zero = std::all_of(cur.begin(), cur.end(), [](int x) { return x == 0; });
      if (zero || !d_.is_root(cur)) break;
      ++p;
    }
    return p;
  }

  Rat n_pos(const RootVec& alpha, const RootVec& beta) {
    int ia = pos_index(alpha), ib = pos_index(beta);
    if (ia > ib) return -n_pos(beta, alpha);
    auto key = std::make_pair(ia, ib);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    RootVec gamma = add_rv(alpha, beta);
    // Extraspecial pair for gamma: the decomposition with minimal first part.
    int iga = -1, igb = -1;
    for (std::size_t i = 0; i < d_.positiveRoots.size(); ++i) {
      RootVec rest = add_rv(gamma, neg_rv(d_.positiveRoots[i]));
      if (!is_pos(rest) || !d_.is_root(rest)) continue;
      int j = pos_index(rest);
      if (int(i) <= j) {
        iga = int(i);
        igb = j;
        break;
      }
    }
    if (iga < 0) throw std::logic_error("NTable: no decomposition of a non-simple root");

    Rat result;
    if (iga == ia && igb == ib) {
      result = rat_of(string_down(alpha, beta) + 1);
    } else {
      const RootVec& a = d_.positiveRoots[iga];
      const RootVec& b = d_.positiveRoots[igb];
      // (A,B,C,D) = (-alpha, a, b, -beta) sums to zero; the three-term
      // quadratic relation solved for N(alpha, beta).
      Rat lenG = d_.form_roots(gamma, gamma);
      Rat acc;
      RootVec d1 = add_rv(a, neg_rv(alpha));  // = beta - b
      if (d_.is_root(d1))
        acc += n(neg_rv(alpha), a) * n(b, neg_rv(beta)) / d_.form_roots(d1, d1);
      RootVec d2 = add_rv(b, neg_rv(alpha));  // = beta - a
      if (d_.is_root(d2))
        acc += n(b, neg_rv(alpha)) * n(a, neg_rv(beta)) / d_.form_roots(d2, d2);
      Rat nab = n_pos(a, b);
      result = lenG * acc / nab;
    }
    if (result.get_den() != 1) throw std::logic_error("NTable: non-integral constant");
    memo_.emplace(key, result);
    return result;
  }

  const RootDatum& d_;
  std::map<RootVec, int> posIndex_;
  std::map<std::pair<int, int>, Rat> memo_;
};

std::string root_label(const RootVec& r) {
  std::ostringstream os;
  os << "X(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) os << ",";
    os << r[i];
  }
  os << ")";
  return os.str();
}

using SparseVec = std::vector<std::pair<int, Rat>>;

void validate_jacobi(const LieAlgebra& L) {
  int n = L.dim;
  auto bracket_sv = [&](const SparseVec& x, int k) {
    SparseVec out;
    std::map<int, Rat> acc;
    for (const auto& [i, v] : x)
      for (const auto& [r, w] : L.bracket[i][k]) acc[r] += v * w;
    for (auto& [r, v] : acc)
      if (!is_zero(v)) out.emplace_back(r, v);
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::map<int, Rat> acc;
        for (const auto& [r, v] : bracket_sv(L.bracket[i][j], k)) acc[r] += v;
        for (const auto& [r, v] : bracket_sv(L.bracket[j][k], i)) acc[r] += v;
        for (const auto& [r, v] : bracket_sv(L.bracket[k][i], j)) acc[r] += v;
        for (const auto& [r, v] : acc)
          if (!is_zero(v)) throw std::logic_error("Jacobi identity violated at basis triple");
      }
}

}  // namespace

LieAlgebra build_chevalley(const RootDatum& datum) {
  LieAlgebra L;
  L.datum = datum;
  int l = datum.rank;
  int nr = int(datum.roots.size());
  L.dim = l + nr;

  for (int i = 0; i < l; ++i) L.basisLabels.push_back("H" + std::to_string(i + 1));
  for (const auto& r : datum.roots) L.basisLabels.push_back(root_label(r));

  NTable nt(datum);

  // H_alpha = alpha^vee expressed in the simple coroots: for alpha = sum m_i a_i
  // the coefficient of H_i is m_i <a_i,a_i>/<alpha,alpha>.
  auto coroot_coords = [&](const RootVec& alpha) {
    Vec c(l);
    Rat len = datum.form_roots(alpha, alpha);
    for (int i = 0; i < l; ++i) {
      if (alpha[i] == 0) continue;
      RootVec ai(l, 0);
      ai[i] = 1;
      c[i] = rat_of(alpha[i]) * datum.form_roots(ai, ai) / len;
      if (c[i].get_den() != 1) throw std::logic_error("non-integral coroot coordinate");
    }
    return c;
  };

  L.bracket.assign(L.dim, std::vector<SparseVec>(L.dim));
  auto set_bracket = [&](int i, int j, SparseVec v) {
    SparseVec neg;
    for (const auto& [r, x] : v) neg.emplace_back(r, -x);
    L.bracket[i][j] = std::move(v);
    L.bracket[j][i] = std::move(neg);
  };

  for (int ri = 0; ri < nr; ++ri) {
    const RootVec& alpha = datum.roots[ri];
    int bi = L.rootVectorIndex(ri);
    // [H_i, X_alpha] = alpha_i^vee(alpha) X_alpha
    for (int i = 0; i < l; ++i) {
      int pairing = 0;
      for (int j = 0; j < l; ++j) pairing += alpha[j] * datum.cartan[j][i];
      if (pairing != 0) set_bracket(i, bi, {{bi, rat_of(pairing)}});
    }
    for (int rj = ri + 1; rj < nr; ++rj) {
      const RootVec& beta = datum.roots[rj];
      int bj = L.rootVectorIndex(rj);
      RootVec sum = add_rv(alpha, beta);
      if (std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; })) {
        // [X_alpha, X_-alpha] = H_alpha
        Vec h = coroot_coords(is_pos(alpha) ? alpha : beta);
        Rat sign = is_pos(alpha) ? 1 : -1;
        SparseVec v;
        for (int i = 0; i < l; ++i)
          if (!is_zero(h[i])) v.emplace_back(i, sign * h[i]);
        set_bracket(bi, bj, std::move(v));
      } else if (datum.is_root(sum)) {
        Rat c = nt.n(alpha, beta);
        if (is_zero(c)) throw std::logic_error("vanishing constant on a root sum");
        set_bracket(bi, bj, {{L.rootVectorIndex(datum.root_index(sum)), c}});
      }
    }
  }

  validate_jacobi(L);

  for (int i = 0; i < L.dim; ++i) {
    SparseMat a(L.dim);
    std::vector<std::map<int, Rat>> rows(L.dim);
    for (int c = 0; c < L.dim; ++c)
      for (const auto& [r, v] : L.bracket[i][c]) rows[r][c] += v;
    for (int r = 0; r < L.dim; ++r)
      for (const auto& [c, v] : rows[r]) a.add(r, c, v);
    L.ad.push_back(std::move(a));
  }

  L.killingGram = killing_form(L);
  L.killingInv = inverse(L.killingGram);
  L.dualBasis = dual_basis(L);
  return L;
}

Mat killing_form(const LieAlgebra& L) {
  int n = L.dim;
  Mat k(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      // Tr(ad e_a ad e_b) = sum_{i,j} (ad a)[i][j] (ad b)[j][i]
      Rat t;
      for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : L.ad[a].rows[i])
          for (const auto& [i2, w] : L.ad[b].rows[j])
            if (i2 == i) t += v * w;
      k.at(a, b) = t;
      k.at(b, a) = t;
    }
  return k;
}

std::vector<Vec> dual_basis(const LieAlgebra& L) {
  std::vector<Vec> dual(L.dim);
  for (int j = 0; j < L.dim; ++j) {
    Vec y(L.dim);
    for (int k = 0; k < L.dim; ++k) y[k] = L.killingInv.at(k, j);
    dual[j] = std::move(y);
  }
  return dual;
}

Vec LieAlgebra::bracket_vec(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim || int(y.size()) != dim)
    throw std::invalid_argument("bracket_vec: dimension mismatch");
  Vec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(y[j])) continue;
      Rat f = x[i] * y[j];
      for (const auto& [r, v] : bracket[i][j]) out[r] += f * v;
    }
  }
  return out;
}

SparseMat LieAlgebra::ad_of(const Vec& x) const {
  SparseMat a(dim);
  std::vector<std::map<int, Rat>> rows(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int r = 0; r < dim; ++r)
      for (const auto& [c, v] : ad[i].rows[r]) rows[r][c] += x[i] * v;
  }
  for (int r = 0; r < dim; ++r)
    for (const auto& [c, v] : rows[r]) a.add(r, c, v);
  return a;
}

Mat LieAlgebra::ad_dense(const Vec& x) const { return ad_of(x).dense(); }

Rat LieAlgebra::killing(const Vec& x, const Vec& y) const {
  Rat s;
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j)
      if (!is_zero(y[j])) s += x[i] * killingGram.at(i, j) * y[j];
  }
  return s;
}

}  // namespace calg
