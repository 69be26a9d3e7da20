#include "calg/algcore.hpp"

#include <stdexcept>

namespace calg {

namespace {

/// out += scale * a * b for sparse a, b.
void sparse_sparse_into(const SparseMat& a, const SparseMat& b, const Rat& scale, Mat& out) {
  for (int i = 0; i < a.n; ++i)
    for (const auto& [j, v] : a.rows[i]) {
      Rat f = scale * v;
      for (const auto& [l, w] : b.rows[j]) out.at(i, l) += f * w;
    }
}

Vec mat_row(const Mat& m, int i) {
  Vec r(m.cols());
  for (int j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
  return r;
}

bool row_is_zero(const Mat& m, int i) {
  for (int j = 0; j < m.cols(); ++j)
    if (!is_zero(m.at(i, j))) return false;
  return true;
}

/// sum_k ad(e_k) ad(W_k) over the nonzero rows W_k of W.
Mat mixed_term(const LieAlgebra& L, const Mat& W) {
  int n = L.dim;
  Mat out(n, n);
  for (int k = 0; k < n; ++k) {
    if (row_is_zero(W, k)) continue;
    SparseMat adRow = L.ad_of(mat_row(W, k));
    sparse_sparse_into(L.ad[k], adRow, 1, out);
  }
  return out;
}

/// sum_k ad(e_k) * (V * ad(W_k)^T) over the nonzero rows of W.
Mat bracket_term(const LieAlgebra& L, const Mat& W, const Mat& V) {
  int n = L.dim;
  std::vector<int> vRows;
  for (int i = 0; i < n; ++i)
    if (!row_is_zero(V, i)) vRows.push_back(i);
  Mat out(n, n);
  for (int k = 0; k < n; ++k) {
    if (row_is_zero(W, k)) continue;
    SparseMat adRow = L.ad_of(mat_row(W, k));
    Mat t(n, n);  // t = V * adRow^T
    for (int j = 0; j < n; ++j)
      for (const auto& [m, w] : adRow.rows[j])
        for (int i : vRows)
          if (!is_zero(V.at(i, m))) t.at(i, j) += V.at(i, m) * w;
    L.ad[k].mul_dense_into(t, 1, out);
  }
  return out;
}

Rat frob_inner(const Mat& a, const Mat& b) {
  Rat s;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!is_zero(a.at(i, j))) s += a.at(i, j) * b.at(i, j);
  return s;
}

}  // namespace

Mat pair_pre(int dim, int i, int j) {
  Mat w(dim, dim);
  if (i == j) {
    w.at(i, i) = 1;
  } else {
    w.at(i, j) = rat_of(1, 2);
    w.at(j, i) = rat_of(1, 2);
  }
  return w;
}

Mat p_of_pre(const LieAlgebra& L, const Mat& pre) { return pre * L.killingGram; }

Mat s_of_pre(const LieAlgebra& L, const Mat& pre) {
  Mat s = mixed_term(L, pre).scaled(rat_of(L.hCheck()));
  s += pre * L.killingGram;
  return s;
}

SOperator p_map(const LieAlgebra& L, int i, int j) {
  Mat pre = pair_pre(L.dim, i, j);
  return SOperator{p_of_pre(L, pre), pre};
}

SOperator s_map(const LieAlgebra& L, int i, int j) {
  Mat pre = pair_pre(L.dim, i, j);
  return SOperator{s_of_pre(L, pre), pre};
}

Mat product_pre(const LieAlgebra& L, const Mat& W, const Mat& V) {
  Rat hv = rat_of(L.hCheck());
  Mat mw = mixed_term(L, W);
  Mat mv = mixed_term(L, V);
  Mat acc = W * mv.transpose();
  acc += V * mw.transpose();
  acc += bracket_term(L, W, V);
  acc = acc.scaled(hv);
  acc += (W * L.killingGram) * V;
  return sym_part(acc);
}

AlgebraTable build_basis(const LieAlgebra& L) {
  AlgebraTable t;
  t.lie = L;
  int n = L.dim;
  int l = L.datum.rank;
  t.span = SpanSolver(n * n);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) pairs.emplace_back(i, j);
  for (int i = 0; i < l; ++i)
    for (int j = l; j < n; ++j) pairs.emplace_back(i, j);
  for (int i = l; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);

  for (auto [i, j] : pairs) {
    SOperator s = s_map(L, i, j);
    if (t.span.add(s.op.flatten())) {
      t.basisPairs.emplace_back(i, j);
      t.basisPre.push_back(std::move(s.pre));
      t.basisOp.push_back(std::move(s.op));
    }
  }
  t.dimA = int(t.basisPairs.size());

  Rat hv1 = rat_of(L.hCheck() + 1);
  Rat dimG = rat_of(n);
  t.epsilon.resize(t.dimA);
  for (int a = 0; a < t.dimA; ++a)
    t.epsilon[a] = hv1 * frob_inner(t.basisPre[a], L.killingGram) / dimG;

  t.unitPre = L.killingInv.scaled(1 / hv1);
  if (!(s_of_pre(L, L.killingInv) == Mat::identity(n).scaled(hv1)))
    throw std::logic_error("S(e_S) != (hv+1) Id");
  t.unitCoords = t.express_op(Mat::identity(n));
  return t;
}

Mat AlgebraTable::preimage(const Vec& coords) const {
  Mat w(lie.dim, lie.dim);
  for (int a = 0; a < dimA; ++a) {
    if (is_zero(coords[a])) continue;
    w += basisPre[a].scaled(coords[a]);
  }
  return w;
}

Vec AlgebraTable::express_op(const Mat& op) const {
  auto c = span.express(op.flatten());
  if (!c) throw std::logic_error("operator outside the algebra span");
  return *c;
}

Vec AlgebraTable::product(const Vec& a, const Vec& b) const {
  if (int(a.size()) != dimA || int(b.size()) != dimA)
    throw std::invalid_argument("product: coordinate dimension mismatch");
  if (!prodConst.empty()) {
    Vec out(dimA);
    for (int x = 0; x < dimA; ++x) {
      if (is_zero(a[x])) continue;
      for (int y = 0; y < dimA; ++y) {
        if (is_zero(b[y])) continue;
        Rat f = a[x] * b[y];
        const Vec& c = prodConst[x][y];
        for (int k = 0; k < dimA; ++k)
          if (!is_zero(c[k])) out[k] += f * c[k];
      }
    }
    return out;
  }
  Mat u = product_pre(lie, preimage(a), preimage(b));
  return express_op(s_of_pre(lie, u));
}

Rat AlgebraTable::counit(const Vec& a) const {
  Rat s;
  for (int x = 0; x < dimA; ++x)
    if (!is_zero(a[x])) s += epsilon[x] * a[x];
  return s;
}

Rat AlgebraTable::tau(const Vec& a, const Vec& b) const {
  Mat u = product_pre(lie, preimage(a), preimage(b));
  Rat hv1 = rat_of(lie.hCheck() + 1);
  return hv1 * frob_inner(u, lie.killingGram) / rat_of(lie.dim);
}

Vec AlgebraTable::coords_of_pair(int i, int j) const {
  return express_op(s_of_pre(lie, pair_pre(lie.dim, i, j)));
}

Mat AlgebraTable::left_mult(const Vec& a) const {
  Mat m(dimA, dimA);
  Vec e(dimA);
  for (int b = 0; b < dimA; ++b) {
    e[b] = 1;
    Vec col = product(a, e);
    e[b] = 0;
    for (int k = 0; k < dimA; ++k) m.at(k, b) = col[k];
  }
  return m;
}

void structure_table(AlgebraTable& t) {
  if (!t.prodConst.empty()) return;
  t.prodConst.assign(t.dimA, std::vector<Vec>(t.dimA));
  for (int a = 0; a < t.dimA; ++a)
    for (int b = a; b < t.dimA; ++b) {
      Mat u = product_pre(t.lie, t.basisPre[a], t.basisPre[b]);
      Vec c = t.express_op(s_of_pre(t.lie, u));
      t.prodConst[a][b] = c;
      t.prodConst[b][a] = std::move(c);
    }
}

void tau_gram(AlgebraTable& t) {
  if (t.tauGram.rows() == t.dimA && t.dimA > 0) return;
  Rat hv1 = rat_of(t.lie.hCheck() + 1);
  Rat dimG = rat_of(t.lie.dim);
  t.tauGram = Mat(t.dimA, t.dimA);
  for (int a = 0; a < t.dimA; ++a)
    for (int b = a; b < t.dimA; ++b) {
      Mat u = product_pre(t.lie, t.basisPre[a], t.basisPre[b]);
      Rat v = hv1 * frob_inner(u, t.lie.killingGram) / dimG;
      t.tauGram.at(a, b) = v;
      t.tauGram.at(b, a) = v;
    }
}

}  // namespace calg
