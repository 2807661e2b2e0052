#ifndef TERRACINI_MATRIX_HPP
#define TERRACINI_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "terracini/error.hpp"

namespace terracini {

// Dense matrix over an exact field scalar K (Fp or Rat). Rank, kernel and
// row-space operations are the substrate for every tangent-space computation.
// Pivots are exact, so the first nonzero entry in column order is always an
// acceptable pivot. `rep` is a representative scalar kept so that zero/one of
// the right field can be minted even for empty matrices.
template <class K> class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, const K &rep)
      : rows_(rows), cols_(cols), rep_(zero_like(rep)), a_(rows * cols, rep_) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K zero() const { return rep_; }
  K one() const { return one_like(rep_); }

  K &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K &operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(a_.begin() + i * cols_,
                          a_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const std::vector<K> &r) {
    if (r.size() != cols_)
      throw Error("Matrix: row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(i, j) = r[j];
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_, rep_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  static Matrix identity(std::size_t n, const K &rep) {
    Matrix m(n, n, rep);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = m.one();
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<K>> &rows,
                          const K &rep) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), cols, rep);
    for (std::size_t i = 0; i < rows.size(); ++i)
      m.set_row(i, rows[i]);
    return m;
  }

  static Matrix stacked(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.cols_)
      throw Error("Matrix: stack with mismatched column counts");
    Matrix m(a.rows_ + b.rows_, a.cols_, a.rep_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        m(a.rows_ + i, j) = b(i, j);
    return m;
  }

  Matrix operator*(const Matrix &o) const {
    if (cols_ != o.rows_)
      throw Error("Matrix: product shape mismatch");
    Matrix m(rows_, o.cols_, rep_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K &aik = (*this)(i, k);
        if (aik.is_zero())
          continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          m(i, j) += aik * o(k, j);
      }
    return m;
  }

  std::vector<K> apply(const std::vector<K> &v) const {
    if (v.size() != cols_)
      throw Error("Matrix: apply shape mismatch");
    std::vector<K> out(rows_, rep_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out[i] += (*this)(i, j) * v[j];
    return out;
  }

  // Reduced row echelon form in place; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && (*this)(sel, col).is_zero())
        ++sel;
      if (sel == rows_)
        continue;
      swap_rows(sel, row);
      K inv = (*this)(row, col).inverse();
      for (std::size_t j = col; j < cols_; ++j)
        (*this)(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || (*this)(i, col).is_zero())
          continue;
        K factor = (*this)(i, col);
        for (std::size_t j = col; j < cols_; ++j)
          (*this)(i, j) -= factor * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

  // Basis of the right kernel: vectors v with M v = 0. Size is always
  // cols - rank.
  std::vector<std::vector<K>> kernel_basis() const {
    Matrix red = *this;
    std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots)
      is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free])
        continue;
      std::vector<K> v(cols_, rep_);
      v[free] = one();
      for (std::size_t k = 0; k < pivots.size(); ++k)
        v[pivots[k]] = -red(k, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Rows reduced to an independent spanning set of the same row space.
  Matrix row_basis() const {
    Matrix red = *this;
    std::vector<std::size_t> pivots = red.rref();
    Matrix out(pivots.size(), cols_, rep_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(i, j) = red(i, j);
    return out;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }

  bool contains_in_row_space(const std::vector<K> &v) const {
    Matrix ext = stacked(*this, from_rows({v}, rep_));
    return ext.rank() == rank();
  }

private:
  std::size_t rows_, cols_;
  K rep_;
  std::vector<K> a_;
};

// Rows spanning rowspace(A) ∩ rowspace(B). The intersection rank always
// equals rank(A) + rank(B) - rank(A stacked on B).
template <class K>
Matrix<K> row_space_meet(const Matrix<K> &a, const Matrix<K> &b) {
  if (a.cols() != b.cols())
    throw Error("row_space_meet: column counts differ");
  if (a.rows() == 0 || b.rows() == 0)
    return Matrix<K>(0, a.cols(), a.zero());
  // a left-kernel vector (x, y) of the stack gives x·A = -y·B, a point of
  // the intersection; every intersection point arises this way
  Matrix<K> st = Matrix<K>::stacked(a, b);
  std::vector<std::vector<K>> combos = st.transposed().kernel_basis();
  std::vector<std::vector<K>> rows;
  for (const auto &xy : combos) {
    std::vector<K> v(a.cols(), a.zero());
    bool nonzero = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (xy[i].is_zero())
        continue;
      for (std::size_t j = 0; j < a.cols(); ++j)
        v[j] += xy[i] * a(i, j);
    }
    for (const K &x : v)
      nonzero = nonzero || !x.is_zero();
    if (nonzero)
      rows.push_back(std::move(v));
  }
  if (rows.empty())
    return Matrix<K>(0, a.cols(), a.zero());
  return Matrix<K>::from_rows(rows, a.zero()).row_basis();
}

} // namespace terracini

#endif // TERRACINI_MATRIX_HPP
