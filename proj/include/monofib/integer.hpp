#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>

namespace monofib {

/// Exact integer scalar used throughout. Expression templates are disabled so
/// that `auto` and Eigen's lazy evaluation never hold dangling temporaries.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

/// Truncating quotient, the same for builtin and multiprecision scalars.
template <typename Scalar>
Scalar truncated_div(const Scalar& a, const Scalar& b) {
  return a / b;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != Scalar(0)) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// gcd of all entries; 0 for the zero vector.
template <typename Derived>
typename Derived::Scalar content(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Scalar g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd_value(g, Scalar(v(i)));
  return g;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != Scalar(0)) return false;
  return true;
}

template <typename Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index n) {
  Matrix<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
  return m;
}

template <typename Scalar>
Matrix<Scalar> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  Matrix<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Scalar(0);
  return m;
}

template <typename Scalar>
Vector<Scalar> zero_vector(Eigen::Index n) {
  Vector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Scalar(0);
  return v;
}

/// Exact entrywise equality (also false on shape mismatch).
template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool fits_int64(const Integer& x);
std::int64_t to_int64(const Integer& x);

}  // namespace monofib
