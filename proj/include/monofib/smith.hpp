#pragma once

#include "monofib/errors.hpp"
#include "monofib/integer.hpp"

#include <utility>
#include <vector>

namespace monofib {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank,
/// all diagonal entries non-negative.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> D;
  Matrix<Scalar> U;
  Matrix<Scalar> V;
  Eigen::Index rank = 0;

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Eigen::Index k = 0; k < rank; ++k) out.push_back(D(k, k));
    return out;
  }
};

namespace detail {

template <typename Scalar>
void swap_rows(Matrix<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

template <typename Scalar>
void swap_cols(Matrix<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

// row_target -= q * row_source
template <typename Scalar>
void add_row_multiple(Matrix<Scalar>& m, Eigen::Index target, Eigen::Index source, const Scalar& q) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

template <typename Scalar>
void add_col_multiple(Matrix<Scalar>& m, Eigen::Index target, Eigen::Index source, const Scalar& q) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, target) -= q * m(i, source);
}

// Smallest-magnitude nonzero entry of the trailing block starting at (t, t);
// ties go to the lowest (row, column). Returns false if the block is zero.
template <typename Scalar>
bool find_pivot(const Matrix<Scalar>& d, Eigen::Index t, Eigen::Index& row, Eigen::Index& col) {
  bool found = false;
  Scalar best(0);
  for (Eigen::Index i = t; i < d.rows(); ++i) {
    for (Eigen::Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == Scalar(0)) continue;
      Scalar mag = abs_value(d(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        row = i;
        col = j;
      }
    }
  }
  return found;
}

}  // namespace detail

/// Smith normal form by unimodular row and column operations. Deterministic:
/// the pivot is always the smallest-magnitude nonzero entry of the remaining
/// block, ties broken by lowest (row, column).
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using detail::add_col_multiple;
  using detail::add_row_multiple;

  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  SmithDecomposition<Scalar> out;
  out.D = a;
  out.U = identity_matrix<Scalar>(m);
  out.V = identity_matrix<Scalar>(n);
  Matrix<Scalar>& d = out.D;

  Eigen::Index t = 0;
  for (; t < std::min(m, n); ++t) {
    Eigen::Index pr = 0, pc = 0;
    if (!detail::find_pivot(d, t, pr, pc)) break;

    for (;;) {
      detail::swap_rows(d, t, pr);
      detail::swap_rows(out.U, t, pr);
      detail::swap_cols(d, t, pc);
      detail::swap_cols(out.V, t, pc);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == Scalar(0)) continue;
        Scalar q = truncated_div(d(i, t), d(t, t));
        add_row_multiple(d, i, t, q);
        add_row_multiple(out.U, i, t, q);
        if (d(i, t) != Scalar(0)) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == Scalar(0)) continue;
        Scalar q = truncated_div(d(t, j), d(t, t));
        add_col_multiple(d, j, t, q);
        add_col_multiple(out.V, j, t, q);
        if (d(t, j) != Scalar(0)) clean = false;
      }

      if (clean) {
        // Divisibility: fold an offending row into row t and continue reducing.
        Eigen::Index bad_row = -1;
        for (Eigen::Index i = t + 1; i < m && bad_row < 0; ++i)
          for (Eigen::Index j = t + 1; j < n; ++j)
            if (d(i, j) % d(t, t) != Scalar(0)) {
              bad_row = i;
              break;
            }
        if (bad_row < 0) break;
        add_row_multiple(d, t, bad_row, Scalar(-1));
        add_row_multiple(out.U, t, bad_row, Scalar(-1));
      }
      detail::find_pivot(d, t, pr, pc);
    }

    if (d(t, t) < Scalar(0)) {
      for (Eigen::Index j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (Eigen::Index j = 0; j < m; ++j) out.U(t, j) = -out.U(t, j);
    }
  }
  out.rank = t;
  return out;
}

template <typename Scalar>
struct CokernelInvariants {
  Eigen::Index free_rank = 0;
  std::vector<Scalar> torsion;  // invariant factors > 1, in divisibility order
};

/// Z^rows / (column span of A).
template <typename Derived>
CokernelInvariants<typename Derived::Scalar> cokernel_invariants(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  auto snf = smith_normal_form(a);
  CokernelInvariants<Scalar> out;
  out.free_rank = a.rows() - snf.rank;
  for (const Scalar& f : snf.invariant_factors())
    if (f != Scalar(1)) out.torsion.push_back(f);
  return out;
}

/// Inverse of a unimodular integer matrix via its Smith form (A^-1 = V U).
template <typename Derived>
Matrix<typename Derived::Scalar> unimodular_inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
  auto snf = smith_normal_form(a);
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    if (k >= snf.rank || snf.D(k, k) != Scalar(1)) throw InputError("matrix is not unimodular");
  return snf.V * snf.U;
}

}  // namespace monofib
