#ifndef CALG_MATRIX_HPP
#define CALG_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "calg/rational.hpp"

namespace calg {

/// Dense matrix over exact rationals, row-major.
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), d_(std::size_t(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rat& at(int i, int j) { return d_[std::size_t(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return d_[std::size_t(i) * c_ + j]; }

  const Vec& data() const { return d_; }
  Vec& data() { return d_; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat scaled(const Rat& s) const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

  bool is_zero() const;
  Rat trace() const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  /// Row-major flattening (copy of underlying storage).
  Vec flatten() const { return d_; }

 private:
  int r_, c_;
  Vec d_;
};

Mat sym_part(const Mat& m);  // (m + m^T)/2

/// Reduced row echelon form; returns (rref, pivot column indices).
std::pair<Mat, std::vector<int>> rref(const Mat& m);

int rank_of(const Mat& m);

/// Basis of the right null space {x : m x = 0}.
std::vector<Vec> kernel(const Mat& m);

/// Exact solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

Mat inverse(const Mat& m);  // throws on singular input

/// Indices of the lexicographically first maximal independent subset of the
/// given vectors, in input order (deterministic first-pivot rule).
std::vector<int> independent_subset(const std::vector<Vec>& vectors);

/// Incremental exact span tracker. Accepts vectors one at a time, keeping the
/// independent ones; afterwards expresses arbitrary vectors in the accepted
/// basis (exact membership certificate: nullopt means "not in the span").
class SpanSolver {
 public:
  explicit SpanSolver(int ambient_dim) : n_(ambient_dim) {}

  /// Returns true and keeps the vector when it is independent of the span so far.
  bool add(const Vec& v);

  int size() const { return int(rows_.size()); }
  int ambient_dim() const { return n_; }

  /// Coordinates of v in the accepted basis, or nullopt if v is outside the span.
  std::optional<Vec> express(const Vec& v) const;

 private:
  struct Row {
    Vec v;      // echelonized vector, pivot entry normalized to 1
    Vec coeff;  // expression of v in the accepted basis vectors
    int pivot;
  };
  int n_;
  std::vector<Row> rows_;
};

}  // namespace calg

#endif
