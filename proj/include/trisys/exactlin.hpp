#pragma once

// Deterministic exact linear algebra over the rationals: reduced row-echelon
// form, rank, canonical kernel bases and a canonical particular solve. All
// routines are pure; identical input yields bit-identical output.

#include "trisys/rational.hpp"

#include <optional>
#include <vector>

namespace trisys {

template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixT<Rational>;
using Vector = VectorT<Rational>;
using Index = Eigen::Index;

/// In-place Gauss–Jordan to reduced row-echelon form. Pivots are the first
/// nonzero entry of each column scanned left to right, so the result does not
/// depend on anything but the matrix values. Returns the pivot columns.
template <typename Scalar>
std::vector<Index> rref_in_place(MatrixT<Scalar>& a) {
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    if (a(r, c) != 1) {
      const Scalar inv = Scalar(1) / a(r, c);
      a(r, c) = 1;
      for (Index j = c + 1; j < cols; ++j) {
        if (a(r, j) != 0) a(r, j) *= inv;
      }
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      a(i, c) = 0;
      for (Index j = c + 1; j < cols; ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename Scalar>
Index rank(MatrixT<Scalar> a) {
  return static_cast<Index>(rref_in_place(a).size());
}

/// Canonical basis of {x : A x = 0}: read off the RREF, one vector per free
/// column in increasing column order, the free variable set to 1.
template <typename Scalar>
std::vector<VectorT<Scalar>> kernel_basis(MatrixT<Scalar> a) {
  const Index cols = a.cols();
  const std::vector<Index> pivots = rref_in_place(a);
  std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
  for (Index c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
  std::vector<VectorT<Scalar>> basis;
  basis.reserve(static_cast<size_t>(cols) - pivots.size());
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    VectorT<Scalar> v = VectorT<Scalar>::Zero(cols);
    v(f) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v(pivots[r]) = -a(static_cast<Index>(r), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with A x = b when consistent (free variables pinned to 0), absent
/// otherwise.
template <typename Scalar>
std::optional<VectorT<Scalar>> solve(const MatrixT<Scalar>& a,
                                     const VectorT<Scalar>& b) {
  MatrixT<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const std::vector<Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  VectorT<Scalar> x = VectorT<Scalar>::Zero(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) {
    x(pivots[r]) = aug(static_cast<Index>(r), a.cols());
  }
  return x;
}

/// Column-wise solve of A X = B; absent if any column is inconsistent.
template <typename Scalar>
std::optional<MatrixT<Scalar>> solve_many(const MatrixT<Scalar>& a,
                                          const MatrixT<Scalar>& b) {
  MatrixT<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const std::vector<Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() >= a.cols()) return std::nullopt;
  MatrixT<Scalar> x = MatrixT<Scalar>::Zero(a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r) {
    x.row(pivots[r]) = aug.block(static_cast<Index>(r), a.cols(), 1, b.cols());
  }
  return x;
}

/// Exact inverse of a square matrix, absent when singular.
template <typename Scalar>
std::optional<MatrixT<Scalar>> inverse(const MatrixT<Scalar>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Index n = a.rows();
  MatrixT<Scalar> aug(n, 2 * n);
  aug << a, MatrixT<Scalar>::Identity(n, n);
  const std::vector<Index> pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) {
    return std::nullopt;
  }
  return MatrixT<Scalar>(aug.rightCols(n));
}

inline bool is_zero(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

inline bool is_zero(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

}  // namespace trisys
