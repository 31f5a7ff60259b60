#pragma once

// Dense exact linear algebra over an exact field. Everything here is a free
// function over Eigen dense matrices whose Scalar is Rational or Fp; no
// pivoting thresholds, no rounding.

#include "taureg/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace taureg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.value() == 0; }

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Scalar>
Matrix<Scalar> zeros(Index rows, Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  Matrix<Scalar> m = zeros<Scalar>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;     ///< reduced row echelon form; rows past rank() are zero
  std::vector<Index> pivots;  ///< pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

// row(target) -= factor * row(source), restricted to columns >= from.
template <typename Scalar>
void axpy_row(Matrix<Scalar>& m, Index target, Index source, const Scalar& factor, Index from) {
  for (Index j = from; j < m.cols(); ++j) {
    if (!is_zero(m(source, j))) m(target, j) -= factor * m(source, j);
  }
}

// Pivot row choice: first nonzero below `start` in column c, or -1.
template <typename Scalar>
Index find_pivot(const Matrix<Scalar>& m, Index start, Index c) {
  for (Index i = start; i < m.rows(); ++i)
    if (!is_zero(m(i, c))) return i;
  return -1;
}

}  // namespace detail

/// Gauss-Jordan elimination to reduced row echelon form.
template <typename Scalar>
RowEchelon<Scalar> row_echelon(Matrix<Scalar> m) {
  RowEchelon<Scalar> out;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    const Index p = detail::find_pivot(m, r, c);
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      detail::axpy_row(m, i, r, f, c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

/// Rank by forward elimination only.
template <typename Scalar>
Index rank(Matrix<Scalar> m) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    const Index p = detail::find_pivot(m, r, c);
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const Scalar f = m(i, c) * inv;
      detail::axpy_row(m, i, r, f, c);
    }
    ++r;
  }
  return r;
}

template <typename Derived>
Index rank_of_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return rank<Scalar>(Matrix<Scalar>(m));
}

/// Basis of the right null space, one vector per column (cols - rank columns).
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& m) {
  const auto ech = row_echelon<Scalar>(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = zeros<Scalar>(n, n - ech.rank());
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Index r = 0; r < ech.rank(); ++r) {
      if (!is_zero(ech.reduced(r, free))) basis(ech.pivots[static_cast<std::size_t>(r)], k) = -ech.reduced(r, free);
    }
    ++k;
  }
  return basis;
}

/// Some solution of m x = b, or nullopt when the system is inconsistent.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& m, const Vector<Scalar>& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto ech = row_echelon<Scalar>(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Constant(m.cols(), Scalar(0));
  for (Index r = 0; r < ech.rank(); ++r) x(ech.pivots[static_cast<std::size_t>(r)]) = ech.reduced(r, m.cols());
  return x;
}

/// Unique X with a * X = b for a of full column rank; throws if inconsistent.
template <typename Scalar>
Matrix<Scalar> solve_exact(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve_exact: shape mismatch");
  Matrix<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  const auto ech = row_echelon<Scalar>(aug);
  Index r = 0;
  while (r < ech.rank() && ech.pivots[static_cast<std::size_t>(r)] < a.cols()) ++r;
  if (r != a.cols() || r != ech.rank()) throw std::logic_error("solve_exact: system has no unique solution");
  return ech.reduced.topRightCorner(a.cols(), b.cols());
}

/// Indices of a maximal independent subset of columns (leftmost first).
template <typename Scalar>
std::vector<Index> pivot_columns(const Matrix<Scalar>& m) {
  return row_echelon<Scalar>(m).pivots;
}

/// Independent columns of m spanning its column space.
template <typename Scalar>
Matrix<Scalar> column_basis(const Matrix<Scalar>& m) {
  const auto piv = pivot_columns<Scalar>(m);
  Matrix<Scalar> out(m.rows(), static_cast<Index>(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k) out.col(static_cast<Index>(k)) = m.col(piv[k]);
  return out;
}

/// Standard basis vectors (by index, lowest first) completing the column span
/// of `basis` to the whole ambient space.
template <typename Scalar>
std::vector<Index> complement_indices(const Matrix<Scalar>& basis) {
  const Index n = basis.rows();
  Matrix<Scalar> aug(n, basis.cols() + n);
  aug.leftCols(basis.cols()) = basis;
  aug.rightCols(n) = identity<Scalar>(n);
  std::vector<Index> out;
  for (Index p : pivot_columns<Scalar>(aug)) {
    if (p >= basis.cols()) out.push_back(p - basis.cols());
  }
  return out;
}

template <typename Scalar>
bool in_column_space(const Matrix<Scalar>& basis, const Matrix<Scalar>& vectors) {
  if (vectors.cols() == 0) return true;
  Matrix<Scalar> aug(basis.rows(), basis.cols() + vectors.cols());
  aug.leftCols(basis.cols()) = basis;
  aug.rightCols(vectors.cols()) = vectors;
  return rank<Scalar>(aug) == rank<Scalar>(basis);
}

/// Basis of span(u) ∩ span(w) (columns).
template <typename Scalar>
Matrix<Scalar> intersect_column_spaces(const Matrix<Scalar>& u, const Matrix<Scalar>& w) {
  if (u.cols() == 0 || w.cols() == 0) return zeros<Scalar>(u.rows(), 0);
  Matrix<Scalar> aug(u.rows(), u.cols() + w.cols());
  aug.leftCols(u.cols()) = u;
  aug.rightCols(w.cols()) = -w;
  const Matrix<Scalar> k = kernel_basis<Scalar>(aug);
  return column_basis<Scalar>(Matrix<Scalar>(u * k.topRows(u.cols())));
}

/// Basis of {x : a x ∈ span(w)}.
template <typename Scalar>
Matrix<Scalar> preimage(const Matrix<Scalar>& a, const Matrix<Scalar>& w) {
  Matrix<Scalar> aug(a.rows(), a.cols() + w.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(w.cols()) = w;
  const Matrix<Scalar> k = kernel_basis<Scalar>(aug);
  return column_basis<Scalar>(Matrix<Scalar>(k.topRows(a.cols())));
}

template <typename Scalar>
bool is_invertible(const Matrix<Scalar>& m) {
  return m.rows() == m.cols() && rank<Scalar>(m) == m.rows();
}

template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  return solve_exact<Scalar>(m, identity<Scalar>(m.rows()));
}

template <typename Scalar>
Matrix<Scalar> block_diagonal(const std::vector<Matrix<Scalar>>& blocks) {
  Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<Scalar> out = zeros<Scalar>(rows, cols);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace taureg
