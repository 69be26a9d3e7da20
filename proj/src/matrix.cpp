#include "calg/matrix.hpp"

#include <stdexcept>

namespace calg {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("Mat::operator*: dimension mismatch");
  Mat p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& a = at(i, k);
      if (calg::is_zero(a)) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Rat& b = o.at(k, j);
        if (!calg::is_zero(b)) p.at(i, j) += a * b;
      }
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  Mat s(*this);
  s += o;
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  Mat s(*this);
  s -= o;
  return s;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::operator+=: shape mismatch");
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::operator-=: shape mismatch");
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
  return *this;
}

Mat Mat::scaled(const Rat& s) const {
  Mat m(*this);
  for (auto& x : m.d_) x *= s;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : d_)
    if (!calg::is_zero(x)) return false;
  return true;
}

Rat Mat::trace() const {
  Rat t;
  for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
  return t;
}

Vec Mat::apply(const Vec& v) const {
  if (int(v.size()) != c_) throw std::invalid_argument("Mat::apply: dimension mismatch");
  Vec out(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!calg::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
  return out;
}

Mat sym_part(const Mat& m) {
  Mat s(m.rows(), m.cols());
  Rat half = rat_of(1, 2);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s.at(i, j) = (m.at(i, j) + m.at(j, i)) * half;
  return s;
}

std::pair<Mat, std::vector<int>> rref(const Mat& m) {
  Mat a(m);
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!is_zero(a.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    Rat inv = 1 / a.at(row, col);
    for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a.at(i, col))) continue;
      Rat f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {a, pivots};
}

int rank_of(const Mat& m) { return int(rref(m).second.size()); }

std::vector<Vec> kernel(const Mat& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(int(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(int(i), m.cols());
  return x;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [r, pivots] = rref(aug);
  if (int(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

std::vector<int> independent_subset(const std::vector<Vec>& vectors) {
  std::vector<int> idx;
  if (vectors.empty()) return idx;
  SpanSolver s(int(vectors[0].size()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (s.add(vectors[i])) idx.push_back(int(i));
  return idx;
}

bool SpanSolver::add(const Vec& v) {
  if (int(v.size()) != n_) throw std::invalid_argument("SpanSolver::add: dimension mismatch");
  Vec r(v);
  Vec coeff(rows_.size() + 1);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Row& row = rows_[j];
    const Rat& t = r[row.pivot];
    if (is_zero(t)) continue;
    Rat f = t;
    for (int k = 0; k < n_; ++k)
      if (!is_zero(row.v[k])) r[k] -= f * row.v[k];
    for (std::size_t k = 0; k <= j; ++k)
      if (!is_zero(row.coeff[k])) coeff[k] -= f * row.coeff[k];
  }
  int pivot = -1;
  for (int k = 0; k < n_; ++k)
    if (!is_zero(r[k])) {
      pivot = k;
      break;
    }
  if (pivot < 0) return false;
  Rat inv = 1 / r[pivot];
  for (auto& x : r) x *= inv;
  coeff.resize(rows_.size() + 1);
  coeff[rows_.size()] = inv;
  // earlier entries scale too: echelon row = inv * (v - sum f_j row_j)
  for (std::size_t k = 0; k < rows_.size(); ++k) coeff[k] *= inv;
  rows_.push_back(Row{std::move(r), std::move(coeff), pivot});
  return true;
}

std::optional<Vec> SpanSolver::express(const Vec& v) const {
  if (int(v.size()) != n_) throw std::invalid_argument("SpanSolver::express: dimension mismatch");
  Vec r(v);
  Vec c(rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Row& row = rows_[j];
    const Rat& t = r[row.pivot];
    if (is_zero(t)) continue;
    Rat f = t;
    for (int k = 0; k < n_; ++k)
      if (!is_zero(row.v[k])) r[k] -= f * row.v[k];
    for (std::size_t k = 0; k < row.coeff.size(); ++k)
      if (!is_zero(row.coeff[k])) c[k] += f * row.coeff[k];
  }
  for (const auto& x : r)
    if (!is_zero(x)) return std::nullopt;
  return c;
}

}  // namespace calg
