#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace liecat {

using Vec = std::vector<Scalar>;

/// Dense matrix over an exact field. Row-major; sizes here are desk scale,
/// so no sparsity tricks.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, FieldTag f)
      : rows_(rows), cols_(cols), field_(f), a_(size_t(rows) * cols, Scalar::zero(f)) {}

  static Matrix identity(int n, FieldTag f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldTag field() const { return field_; }

  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw ShapeError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Scalar& v = at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += v * o.at(k, j);
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  Matrix operator-(const Matrix& o) const { return *this + (-o); }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  Vec apply(const Vec& x) const {
    if (int(x.size()) != cols_) throw ShapeError("apply: dimension mismatch");
    Vec y(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    return y;
  }

  Vec column(int j) const {
    Vec c(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

 private:
  int rows_ = 0, cols_ = 0;
  FieldTag field_ = FieldTag::rationals();
  std::vector<Scalar> a_;
};

/// Reduced row-echelon form. Pivot rule: leftmost column, then topmost row,
/// so results are reproducible. Returns the reduced matrix and the strictly
/// increasing pivot column list.
inline std::pair<Matrix, std::vector<int>> rref(Matrix m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar c = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {m, pivots};
}

inline int rank(const Matrix& m) { return int(rref(m).second.size()); }

/// Basis of {v : Mv = 0}; one vector per non-pivot column, in column order.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols(), Scalar::zero(m.field()));
    v[j] = Scalar::one(m.field());
    for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -r.at(int(pi), j);
    out.push_back(std::move(v));
  }
  return out;
}

/// One solution of Mx = b, if consistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw ShapeError("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), Scalar::zero(m.field()));
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = r.at(int(pi), m.cols());
  return x;
}

/// Left inverse of a matrix with full column rank (k^+ k = id).
inline Matrix left_inverse(const Matrix& m) {
  Matrix li(m.cols(), m.rows(), m.field());
  Matrix aug(m.rows(), m.cols() + m.rows(), m.field());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols() + i) = Scalar::one(m.field());
  }
  auto [r, pivots] = rref(aug);
  if (int(pivots.size()) < m.cols() || (m.cols() > 0 && pivots[m.cols() - 1] >= m.cols()))
    throw ShapeError("left_inverse: matrix does not have full column rank");
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) li.at(j, i) = r.at(j, m.cols() + i);
  return li;
}

/// Row-reduced span of a set of vectors with a custom coordinate elimination
/// priority. The first coordinate in `priority` is eliminated first; an
/// omitted priority means natural order. Kept fully reduced, so membership
/// tests and normal forms are canonical.
class EchelonSpan {
 public:
  EchelonSpan(int dim, FieldTag f) : dim_(dim), field_(f) {
    priority_.resize(dim);
    std::iota(priority_.begin(), priority_.end(), 0);
    init_rank();
  }
  EchelonSpan(int dim, FieldTag f, std::vector<int> priority)
      : dim_(dim), field_(f), priority_(std::move(priority)) {
    if (int(priority_.size()) != dim) throw ShapeError("priority size mismatch");
    init_rank();
  }

  int dim() const { return dim_; }
  int size() const { return int(rows_.size()); }

  /// Reduces v modulo the span: canonical normal form.
  Vec reduce(Vec v) const {
    for (const auto& row : rows_) {
      const Scalar& c = v[row.pivot];
      if (c.is_zero()) continue;
      Scalar f = c;  // row has pivot coefficient 1
      for (int j = 0; j < dim_; ++j)
        if (!row.v[j].is_zero()) v[j] -= f * row.v[j];
    }
    return v;
  }

  bool contains(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& c : r)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Inserts v; returns true if it enlarged the span.
  bool add(Vec v) {
    v = reduce(std::move(v));
    int pv = -1;
    for (int pos : priority_)
      if (!v[pos].is_zero()) { pv = pos; break; }
    if (pv < 0) return false;
    Scalar inv = v[pv].inverse();
    for (auto& c : v) c *= inv;
    for (auto& row : rows_) {
      const Scalar& c = row.v[pv];
      if (c.is_zero()) continue;
      Scalar f = c;
      for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) row.v[j] -= f * v[j];
    }
    Row nr{pv, std::move(v)};
    auto it = rows_.begin();
    while (it != rows_.end() && rank_of_[it->pivot] < rank_of_[pv]) ++it;
    rows_.insert(it, std::move(nr));
    return true;
  }

  std::vector<int> pivot_coords() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(r.pivot);
    std::sort(p.begin(), p.end());
    return p;
  }

  /// Non-pivot coordinates in natural order; they index a basis of the quotient.
  std::vector<int> representatives() const {
    std::vector<bool> piv(dim_, false);
    for (const auto& r : rows_) piv[r.pivot] = true;
    std::vector<int> reps;
    for (int i = 0; i < dim_; ++i)
      if (!piv[i]) reps.push_back(i);
    return reps;
  }

 private:
  struct Row {
    int pivot;
    Vec v;
  };
  void init_rank() {
    rank_of_.assign(dim_, 0);
    for (int i = 0; i < dim_; ++i) rank_of_[priority_[i]] = i;
  }

  int dim_;
  FieldTag field_;
  std::vector<int> priority_;
  std::vector<int> rank_of_;
  std::vector<Row> rows_;
};

struct QuotientData {
  std::vector<int> representatives;  // ambient indices mapping to the quotient basis
  Matrix projection;                 // (ambient - rank) x ambient, kills exactly the span
};

/// Quotient of an ambient space by the span of the given vectors.
/// The projection sends each ambient basis vector to the coordinates of its
/// class in the representative basis.
inline QuotientData quotient_mod_span(int ambient, const std::vector<Vec>& span, FieldTag f,
                                      const std::vector<int>* priority = nullptr) {
  EchelonSpan es = priority ? EchelonSpan(ambient, f, *priority) : EchelonSpan(ambient, f);
  for (const auto& v : span) {
    if (int(v.size()) != ambient) throw ShapeError("quotient: vector dimension mismatch");
    es.add(v);
  }
  QuotientData q;
  q.representatives = es.representatives();
  std::vector<int> pos(ambient, -1);
  for (size_t k = 0; k < q.representatives.size(); ++k) pos[q.representatives[k]] = int(k);
  q.projection = Matrix(int(q.representatives.size()), ambient, f);
  for (int j = 0; j < ambient; ++j) {
    Vec e(ambient, Scalar::zero(f));
    e[j] = Scalar::one(f);
    Vec r = es.reduce(std::move(e));
    for (int i = 0; i < ambient; ++i)
      if (!r[i].is_zero()) q.projection.at(pos[i], j) = r[i];
  }
  return q;
}

}  // namespace liecat
