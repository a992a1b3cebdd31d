#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "structctl/errors.hpp"
#include "structctl/oracle/poly.hpp"

namespace structctl::oracle {

// Eigen is used as the dense container only. Exact scalars never go through
// Eigen's arithmetic kernels, which assume a floating-point-like NumTraits.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExactMatrix = DenseMatrix<ExactPoly>;
using IntegerMatrix = DenseMatrix<BigInt>;

template <typename Derived>
using ScalarOf = typename Derived::Scalar;

/// Exact product of two dense matrices over a commutative ring.
template <typename DerivedA, typename DerivedB>
DenseMatrix<ScalarOf<DerivedA>> multiply(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = ScalarOf<DerivedA>;
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  DenseMatrix<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar sum(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (is_zero(a(i, k)) || is_zero(b(k, j))) continue;
        sum += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(sum);
    }
  }
  return out;
}

/// Laplace expansion along rows, memoized on the set of columns still free.
/// O(n 2^n) ring operations; limited to 20 columns.
template <typename Derived>
ScalarOf<Derived> cofactor_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = ScalarOf<Derived>;
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const auto n = static_cast<int>(m.rows());
  if (n > 20) throw GuardError("cofactor expansion limited to 20x20");
  if (n == 0) return Scalar(1);

  std::unordered_map<std::uint32_t, Scalar> memo;
  // Determinant of rows [row, n) against the columns set in `free_cols`.
  auto expand = [&](auto&& self, int row, std::uint32_t free_cols) -> Scalar {
    if (row == n) return Scalar(1);
    if (auto it = memo.find(free_cols); it != memo.end()) return it->second;
    Scalar total(0);
    int position = 0;  // rank of the column among the free ones fixes the sign
    for (int c = 0; c < n; ++c) {
      if (!(free_cols & (1u << c))) continue;
      if (!is_zero(m(row, c))) {
        Scalar term = m(row, c) * self(self, row + 1, free_cols & ~(1u << c));
        if (position % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      ++position;
    }
    memo.emplace(free_cols, total);
    return total;
  };
  return expand(expand, 0, (1u << n) - 1);
}

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact in an integral domain, so no fractions ever appear.
template <typename Derived>
ScalarOf<Derived> bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = ScalarOf<Derived>;
  if (input.rows() != input.cols()) throw InputError("determinant of a non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  DenseMatrix<Scalar> m = input;
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Rank by fraction-free elimination with column skipping.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = ScalarOf<Derived>;
  DenseMatrix<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && is_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(rank).swap(m.row(pivot));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        m(i, j) = exact_quotient(m(i, j) * m(rank, col) - m(i, col) * m(rank, j), previous);
      }
      m(i, col) = Scalar(0);
    }
    previous = m(rank, col);
    ++rank;
  }
  return rank;
}

/// Square submatrix on the given row and column indices.
template <typename Derived>
DenseMatrix<ScalarOf<Derived>> select(const Eigen::MatrixBase<Derived>& m, std::span<const int> rows,
                                      std::span<const int> cols) {
  DenseMatrix<ScalarOf<Derived>> out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(rows[i], cols[j]);
    }
  }
  return out;
}

}  // namespace structctl::oracle
