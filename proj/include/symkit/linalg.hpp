#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symkit/eigen_support.hpp"

namespace symkit {

/// Reduced row echelon form over an exact field, with pivot columns.
template <typename Scalar>
struct RowEchelon {
  MatX<Scalar> matrix;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  MatX<Scalar>& m = out.matrix;
  m = input;
  const Scalar zero(0);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != zero) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == zero) continue;
      Scalar f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Right kernel; columns form the canonical basis read off the reduced row
/// echelon form (one column per free variable, that variable set to 1).
template <typename Derived>
MatX<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  MatX<Scalar> basis = MatX<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Eigen::Index f = free[k];
    const auto kk = static_cast<Eigen::Index>(k);
    basis(f, kk) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], kk) = -e.matrix(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

/// Row space in reduced echelon form (zero rows dropped).
template <typename Derived>
MatX<typename Derived::Scalar> row_space(const Eigen::MatrixBase<Derived>& m) {
  auto e = rref(m);
  return e.matrix.topRows(e.rank());
}

/// Cofactor expansion along the first row; valid over any commutative ring,
/// so it also works for polynomial entries.
template <typename Derived>
typename Derived::Scalar determinant_laplace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  assert(m.rows() == m.cols());
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar det(0);
  MatX<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == Scalar(0)) continue;
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Scalar term = m(0, j) * determinant_laplace(minor);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

/// Gaussian elimination; field scalars only.
template <typename Derived>
typename Derived::Scalar determinant_elimination(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatX<Scalar> m = input;
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = Scalar(1) / m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      Scalar f = m(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Submatrix on the given row and column index sets.
template <typename Derived>
MatX<typename Derived::Scalar> submatrix(const Eigen::MatrixBase<Derived>& m,
                                         const std::vector<int>& rows, const std::vector<int>& cols) {
  MatX<typename Derived::Scalar> s(static_cast<Eigen::Index>(rows.size()),
                                   static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(rows[r], cols[c]);
  return s;
}

/// A solution of a x = b, if the system is consistent.
template <typename Derived, typename Rhs>
std::optional<VecX<typename Derived::Scalar>> solve_linear(const Eigen::MatrixBase<Derived>& a,
                                                           const Eigen::MatrixBase<Rhs>& b) {
  using Scalar = typename Derived::Scalar;
  MatX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  VecX<Scalar> x = VecX<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.matrix(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <typename Derived>
MatX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  MatX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatX<Scalar>::Identity(n, n);
  auto e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) throw std::domain_error("singular matrix");
  return e.matrix.rightCols(n);
}

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

/// Scales a nonzero vector so its first nonzero entry is 1.
VecX<GaussianRational> normalize_projective(const VecX<GaussianRational>& v);

bool is_symmetric(const MatX<GaussianRational>& m);
bool is_real(const MatX<GaussianRational>& m);
MatX<GaussianRational> conj(const MatX<GaussianRational>& m);

bool is_zero_vector(const VecX<GaussianRational>& v);

/// `[1:I:0:0]`
std::string point_str(const VecX<GaussianRational>& p);

}  // namespace symkit
