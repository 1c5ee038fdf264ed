#pragma once

#include "multspace/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace multspace {

/// Dense matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArgumentError("matrix product: shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) p(i, j) += x * b(k, j);
      }
    return p;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix d = a;
    for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_.at(i);
    return d;
  }
  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Row-major sparse matrix over the rationals, used for operators on the
/// full bimodule.
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_[r]; }

  void add(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    auto& row = rows_.at(r);
    auto [it, inserted] = row.try_emplace(c, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) row.erase(it);
    }
  }

  Rational get(std::size_t r, std::size_t c) const {
    auto it = rows_.at(r).find(c);
    return it == rows_[r].end() ? Rational(0) : it->second;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw ArgumentError("sparse product: shape mismatch");
    SparseMatrix p(a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& [k, x] : a.rows_[i])
        for (const auto& [j, y] : b.rows_[k]) p.add(i, j, x * y);
    return p;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (const auto& [j, y] : b.rows_[i]) a.add(i, j, y);
    return a;
  }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (const auto& [j, y] : b.rows_[i]) a.add(i, j, -y);
    return a;
  }
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  /// Dense restriction to rows/cols listed in `indices` (same list for both).
  Matrix restricted(const std::vector<std::size_t>& indices) const {
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < indices.size(); ++i) pos.emplace(indices[i], i);
    Matrix m(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
      for (const auto& [c, v] : rows_.at(indices[i]))
        if (auto it = pos.find(c); it != pos.end()) m(i, it->second) = v;
    return m;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Incrementally maintained reduced row echelon form of a growing set of
/// vectors of fixed width. Pivots are first nonzero columns.
class RowReducer {
 public:
  explicit RowReducer(std::size_t width) : width_(width), pivot_row_(width, npos) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }

  /// Clears every pivot column of v using the stored rows.
  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (std::size_t c = 0; c < width_; ++c) {
      if (v[c] == 0 || pivot_row_[c] == npos) continue;
      const Rational f = v[c];
      for (const auto& [j, x] : rows_[pivot_row_[c]]) v[j] -= f * x;
    }
    return v;
  }

  /// Adds v to the span; returns false if it was already dependent.
  bool insert(std::vector<Rational> v) {
    if (v.size() != width_) throw ArgumentError("RowReducer: width mismatch");
    v = reduce(std::move(v));
    std::size_t lead = 0;
    while (lead < width_ && v[lead] == 0) ++lead;
    if (lead == width_) return false;
    const Rational inv = 1 / v[lead];
    SparseRow row;
    for (std::size_t j = lead; j < width_; ++j)
      if (v[j] != 0) row.emplace_back(j, v[j] * inv);
    // keep the form reduced: eliminate the new pivot column from older rows
    for (auto& other : rows_) {
      Rational f = 0;
      for (const auto& [j, x] : other)
        if (j == lead) f = x;
      if (f == 0) continue;
      std::map<std::size_t, Rational> merged(other.begin(), other.end());
      for (const auto& [j, x] : row) {
        merged[j] -= f * x;
        if (merged[j] == 0) merged.erase(j);
      }
      other.assign(merged.begin(), merged.end());
    }
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> f;
    for (std::size_t c = 0; c < width_; ++c)
      if (pivot_row_[c] == npos) f.push_back(c);
    return f;
  }

 private:
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t width_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseRow> rows_;
};

}  // namespace multspace
