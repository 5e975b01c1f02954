#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flagcert/quad_ext.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

template <class T>
using Vec = std::vector<T>;

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  Vec<T> row(int i) const { return Vec<T>(data_.begin() + index(i, 0), data_.begin() + index(i, 0) + cols_); }
  Vec<T> col(int j) const {
    Vec<T> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  static Matrix from_rows(const std::vector<Vec<T>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
        throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Symmetric matrix stored as its packed upper triangle.
template <class T>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order)
      : n_(order), data_(static_cast<std::size_t>(order) * (order + 1) / 2, T(0)) {
    if (order < 0) throw std::invalid_argument("SymMatrix: negative order");
  }

  int order() const { return n_; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }
  // Sets both (i,j) and (j,i).
  void set(int i, int j, T v) { data_[index(i, j)] = std::move(v); }
  T& at_upper(int i, int j) { return data_[index(i, j)]; }

  static SymMatrix from_rows(const std::vector<Vec<T>>& rows) {
    int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
        throw std::invalid_argument("SymMatrix::from_rows: not square");
      for (int j = i; j < n; ++j) {
        if (!(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]))
          throw std::invalid_argument("SymMatrix::from_rows: not symmetric");
        m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
    return m;
  }

  Matrix<T> dense() const {
    Matrix<T> m(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  // Simultaneous row/column permutation: result(i,j) = this(perm[i], perm[j]).
  SymMatrix permuted(const std::vector<int>& perm) const {
    SymMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        out.set(i, j, (*this)(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
    return out;
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }
  friend bool operator!=(const SymMatrix& a, const SymMatrix& b) { return !(a == b); }

 private:
  std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j), un = static_cast<std::size_t>(n_);
    return ui * un - ui * (ui + 1) / 2 + uj;
  }
  int n_ = 0;
  std::vector<T> data_;
};

template <class T>
struct Block {
  std::string type;
  SymMatrix<T> matrix;
  friend bool operator==(const Block& a, const Block& b) { return a.type == b.type && a.matrix == b.matrix; }
};

// Block-diagonal symmetric matrix, one block per flag type.
template <class T>
class BlockSymMatrix {
 public:
  BlockSymMatrix() = default;
  explicit BlockSymMatrix(std::vector<Block<T>> blocks) : blocks_(std::move(blocks)) {}

  static BlockSymMatrix zeros(const std::vector<std::pair<std::string, int>>& shape) {
    std::vector<Block<T>> b;
    for (const auto& [type, n] : shape) b.push_back({type, SymMatrix<T>(n)});
    return BlockSymMatrix(std::move(b));
  }

  std::size_t size() const { return blocks_.size(); }
  const Block<T>& block(std::size_t i) const { return blocks_[i]; }
  Block<T>& block(std::size_t i) { return blocks_[i]; }
  const std::vector<Block<T>>& blocks() const { return blocks_; }

  std::vector<std::pair<std::string, int>> shape() const {
    std::vector<std::pair<std::string, int>> s;
    for (const auto& b : blocks_) s.emplace_back(b.type, b.matrix.order());
    return s;
  }

  friend bool operator==(const BlockSymMatrix& a, const BlockSymMatrix& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<Block<T>> blocks_;
};

// ⟨X, Y⟩ = tr(XY) for symmetric X, Y.
template <class R, class A, class B>
R frobenius(const SymMatrix<A>& x, const SymMatrix<B>& y) {
  if (x.order() != y.order()) throw std::invalid_argument("frobenius: order mismatch");
  R diag(0), off(0);
  for (int i = 0; i < x.order(); ++i) {
    if (!is_zero(y(i, i))) diag += R(x(i, i) * y(i, i));
    for (int j = i + 1; j < x.order(); ++j)
      if (!is_zero(y(i, j))) off += R(x(i, j) * y(i, j));
  }
  return diag + off + off;
}

template <class R, class A, class B>
R frobenius(const BlockSymMatrix<A>& x, const BlockSymMatrix<B>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("frobenius: block count mismatch");
  R acc(0);
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x.block(b).type != y.block(b).type) throw std::invalid_argument("frobenius: block type mismatch");
    acc += frobenius<R>(x.block(b).matrix, y.block(b).matrix);
  }
  return acc;
}

template <class T>
Vec<T> mat_vec(const SymMatrix<T>& m, const Vec<T>& v) {
  Vec<T> out(static_cast<std::size_t>(m.order()), T(0));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) out[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

template <class T>
Vec<T> mat_vec(const Matrix<T>& m, const Vec<T>& v) {
  Vec<T> out(static_cast<std::size_t>(m.rows()), T(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// vᵀ M v
template <class T>
T quadratic_form(const SymMatrix<T>& m, const Vec<T>& v) {
  return dot(v, mat_vec(m, v));
}

inline QuadExt to_quad(const Rational& q) { return QuadExt(q); }
inline SymMatrix<QuadExt> to_quad(const SymMatrix<Rational>& m) {
  SymMatrix<QuadExt> out(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = i; j < m.order(); ++j) out.set(i, j, QuadExt(m(i, j)));
  return out;
}
inline BlockSymMatrix<QuadExt> to_quad(const BlockSymMatrix<Rational>& m) {
  std::vector<Block<QuadExt>> b;
  for (const auto& blk : m.blocks()) b.push_back({blk.type, to_quad(blk.matrix)});
  return BlockSymMatrix<QuadExt>(std::move(b));
}

}  // namespace flagcert
