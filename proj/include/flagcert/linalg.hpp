#pragma once

#include <stdexcept>
#include <vector>

#include "flagcert/matrix.hpp"

namespace flagcert {

// Reduced row echelon form by exact Gaussian elimination.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<int> pivot_cols;  // one per nonzero row, ascending
};

template <class T>
Echelon<T> rref(Matrix<T> m) {
  Echelon<T> out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    if (!(m(r, c) == T(1))) {
      T inv = T(1) / m(r, c);
      for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
int rank(const Matrix<T>& m) {
  return static_cast<int>(rref(m).pivot_cols.size());
}

template <class T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& m) {
  Echelon<T> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec<T>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<T> v(static_cast<std::size_t>(m.cols()), T(0));
    v[static_cast<std::size_t>(f)] = T(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[static_cast<std::size_t>(e.pivot_cols[r])] = -e.reduced(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::vector<Vec<T>> kernel_basis(const SymMatrix<T>& m) {
  return kernel_basis(m.dense());
}

template <class T>
struct LinearSolution {
  enum class Status { Unique, Underdetermined, Inconsistent };
  Status status = Status::Inconsistent;
  Vec<T> particular;               // free variables set to zero
  std::vector<int> pivot_vars;     // variables solved for
  std::vector<int> free_vars;      // parameters of the solution set
  std::vector<Vec<T>> nullspace;   // one direction per free variable
  Vec<T> inconsistency;            // row combination y with yᵀA = 0, yᵀb ≠ 0
};

template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const Vec<T>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const int n = a.cols(), m = a.rows();
  // augment with b and an identity to track row combinations
  Matrix<T> aug(m, n + 1 + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[static_cast<std::size_t>(i)];
    aug(i, n + 1 + i) = T(1);
  }
  // eliminate only on the coefficient columns
  LinearSolution<T> out;
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (!is_zero(aug(i, c))) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < aug.cols(); ++j) std::swap(aug(p, j), aug(r, j));
    T inv = T(1) / aug(r, c);
    for (int j = 0; j < aug.cols(); ++j)
      if (!is_zero(aug(r, j))) aug(r, j) = aug(r, j) * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || is_zero(aug(i, c))) continue;
      T f = aug(i, c);
      for (int j = 0; j < aug.cols(); ++j)
        if (!is_zero(aug(r, j))) aug(i, j) -= f * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i) {
    if (!is_zero(aug(i, n))) {
      out.status = LinearSolution<T>::Status::Inconsistent;
      out.inconsistency.assign(static_cast<std::size_t>(m), T(0));
      for (int j = 0; j < m; ++j) out.inconsistency[static_cast<std::size_t>(j)] = aug(i, n + 1 + j);
      return out;
    }
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  out.pivot_vars = pivots;
  out.particular.assign(static_cast<std::size_t>(n), T(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    out.particular[static_cast<std::size_t>(pivots[k])] = aug(static_cast<int>(k), n);
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    out.free_vars.push_back(f);
    Vec<T> v(static_cast<std::size_t>(n), T(0));
    v[static_cast<std::size_t>(f)] = T(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<std::size_t>(pivots[k])] = -aug(static_cast<int>(k), f);
    out.nullspace.push_back(std::move(v));
  }
  out.status = out.free_vars.empty() ? LinearSolution<T>::Status::Unique : LinearSolution<T>::Status::Underdetermined;
  return out;
}

// Symmetric-pivoted LDLᵀ: PSD iff no negative pivot appears and, once all
// remaining diagonal entries are zero, the remaining block vanishes.
template <class T>
struct LdltResult {
  bool psd = false;
  int rank = 0;
  std::vector<T> pivots;
};

template <class T>
LdltResult<T> ldlt_psd(const SymMatrix<T>& m) {
  const int n = m.order();
  Matrix<T> a = m.dense();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  LdltResult<T> out;
  for (int step = 0; step < n; ++step) {
    int p = -1;
    bool all_zero = true;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      int s = sign_of(a(i, i));
      if (s < 0) return out;
      if (s > 0) { p = i; all_zero = false; break; }
    }
    if (all_zero) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)] && !is_zero(a(i, j)))
            return out;
      out.psd = true;
      return out;
    }
    done[static_cast<std::size_t>(p)] = true;
    T d = a(p, p);
    out.pivots.push_back(d);
    ++out.rank;
    T inv = T(1) / d;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)] || is_zero(a(i, p))) continue;
      T f = a(i, p) * inv;
      for (int j = 0; j < n; ++j) {
        if (done[static_cast<std::size_t>(j)] || is_zero(a(p, j))) continue;
        a(i, j) -= f * a(p, j);
      }
    }
  }
  out.psd = true;
  return out;
}

template <class T>
bool is_psd(const SymMatrix<T>& m) {
  return ldlt_psd(m).psd;
}

// Leading principal minors via unpivoted elimination; empty on the first
// vanishing minor (the remaining minors are then reported as missing).
template <class T>
std::vector<T> leading_minors(const SymMatrix<T>& m) {
  const int n = m.order();
  Matrix<T> a = m.dense();
  std::vector<T> minors;
  T det(1);
  for (int k = 0; k < n; ++k) {
    det = det * a(k, k);
    minors.push_back(det);
    if (is_zero(a(k, k))) break;
    T inv = T(1) / a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      T f = a(i, k) * inv;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return minors;
}

// Sylvester: all leading principal minors strictly positive.
template <class T>
bool is_pd(const SymMatrix<T>& m) {
  std::vector<T> minors = leading_minors(m);
  if (static_cast<int>(minors.size()) != m.order()) return false;
  for (const auto& d : minors)
    if (sign_of(d) <= 0) return false;
  return true;
}

enum class NormPolicy {
  Strict,           // throw "field overflow" when a norm leaves Q(√2,√3)
  ScaleToSquarefree // otherwise rescale by a rational so the squared norm is squarefree
};

// Gram–Schmidt in the given order; exact output in Q(√2,√3).
std::vector<Vec<QuadExt>> orthonormalize(const std::vector<Vec<Rational>>& vectors,
                                         NormPolicy policy = NormPolicy::Strict);

}  // namespace flagcert
