#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "linalg.hpp"

namespace liecat {

/// Column-sparse matrix. Structure morphisms on tensor powers are mostly
/// zeros, so the dense Matrix type is reserved for the solving layer.
class SpMat {
 public:
  SpMat() = default;
  SpMat(int rows, int cols, FieldTag f) : rows_(rows), cols_(cols), field_(f), cols_data_(cols) {}

  static SpMat identity(int n, FieldTag f) {
    SpMat m(n, n, f);
    for (int i = 0; i < n; ++i) m.cols_data_[i].push_back({i, Scalar::one(f)});
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldTag field() const { return field_; }

  /// Adds c to entry (i, j).
  void add_entry(int i, int j, const Scalar& c) {
    if (c.is_zero()) return;
    auto& col = cols_data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
      it->second += c;
      if (it->second.is_zero()) col.erase(it);
    } else {
      col.insert(it, {i, c});
    }
  }

  void set_entry(int i, int j, const Scalar& c) {
    auto& col = cols_data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
      if (c.is_zero()) col.erase(it);
      else it->second = c;
    } else if (!c.is_zero()) {
      col.insert(it, {i, c});
    }
  }

  Scalar entry(int i, int j) const {
    const auto& col = cols_data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != col.end() && it->first == i) return it->second;
    return Scalar::zero(field_);
  }

  const std::vector<std::pair<int, Scalar>>& col(int j) const { return cols_data_[j]; }

  bool col_is_zero(int j) const { return cols_data_[j].empty(); }

  bool is_zero() const {
    for (const auto& c : cols_data_)
      if (!c.empty()) return false;
    return true;
  }

  size_t nnz() const {
    size_t n = 0;
    for (const auto& c : cols_data_) n += c.size();
    return n;
  }

  SpMat operator*(const SpMat& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw ShapeError("sparse product shape mismatch");
    SpMat r(rows_, o.cols_, field_);
    std::vector<Scalar> acc(rows_, Scalar::zero(field_));
    std::vector<int> touched;
    for (int j = 0; j < o.cols_; ++j) {
      touched.clear();
      for (const auto& [k, c] : o.cols_data_[j]) {
        for (const auto& [i, a] : cols_data_[k]) {
          if (acc[i].is_zero()) touched.push_back(i);
          acc[i] += a * c;
        }
      }
      std::sort(touched.begin(), touched.end());
      for (int i : touched) {
        if (!acc[i].is_zero()) r.cols_data_[j].push_back({i, acc[i]});
        acc[i] = Scalar::zero(field_);
      }
    }
    return r;
  }

  SpMat operator+(const SpMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
      throw ShapeError("sparse sum shape mismatch");
    SpMat r = *this;
    for (int j = 0; j < cols_; ++j)
      for (const auto& [i, c] : o.cols_data_[j]) r.add_entry(i, j, c);
    return r;
  }

  SpMat operator-() const {
    SpMat r = *this;
    for (auto& col : r.cols_data_)
      for (auto& e : col) e.second = -e.second;
    return r;
  }
  SpMat operator-(const SpMat& o) const { return *this + (-o); }

  SpMat scaled(const Scalar& c) const {
    SpMat r(rows_, cols_, field_);
    if (c.is_zero()) return r;
    r = *this;
    for (auto& col : r.cols_data_)
      for (auto& e : col) e.second *= c;
    return r;
  }

  bool operator==(const SpMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
           cols_data_ == o.cols_data_;
  }
  bool operator!=(const SpMat& o) const { return !(*this == o); }

  Vec apply(const Vec& x) const {
    if (int(x.size()) != cols_) throw ShapeError("sparse apply: dimension mismatch");
    Vec y(rows_, Scalar::zero(field_));
    for (int j = 0; j < cols_; ++j) {
      if (x[j].is_zero()) continue;
      for (const auto& [i, c] : cols_data_[j]) y[i] += c * x[j];
    }
    return y;
  }

  Vec column_vec(int j) const {
    Vec y(rows_, Scalar::zero(field_));
    for (const auto& [i, c] : cols_data_[j]) y[i] = c;
    return y;
  }

  void set_column(int j, const Vec& v) {
    cols_data_[j].clear();
    for (int i = 0; i < rows_; ++i)
      if (!v[i].is_zero()) cols_data_[j].push_back({i, v[i]});
  }

  Matrix dense() const {
    Matrix m(rows_, cols_, field_);
    for (int j = 0; j < cols_; ++j)
      for (const auto& [i, c] : cols_data_[j]) m.at(i, j) = c;
    return m;
  }

  static SpMat from_dense(const Matrix& m) {
    SpMat r(m.rows(), m.cols(), m.field());
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, j).is_zero()) r.cols_data_[j].push_back({i, m.at(i, j)});
    return r;
  }

  /// First column (in order) with a nonzero entry, or -1.
  int first_nonzero_col() const {
    for (int j = 0; j < cols_; ++j)
      if (!cols_data_[j].empty()) return j;
    return -1;
  }

 private:
  int rows_ = 0, cols_ = 0;
  FieldTag field_ = FieldTag::rationals();
  std::vector<std::vector<std::pair<int, Scalar>>> cols_data_;
};

}  // namespace liecat
