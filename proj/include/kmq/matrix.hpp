#ifndef KMQ_MATRIX_HPP
#define KMQ_MATRIX_HPP

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "kmq/error.hpp"
#include "kmq/qscalar.hpp"
#include "kmq/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<kmq::Rational> : GenericNumTraits<kmq::Rational> {
  using Real = kmq::Rational;
  using NonInteger = kmq::Rational;
  using Literal = kmq::Rational;
  using Nested = kmq::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<kmq::QScalar> : GenericNumTraits<kmq::QScalar> {
  using Real = kmq::QScalar;
  using NonInteger = kmq::QScalar;
  using Literal = kmq::QScalar;
  using Nested = kmq::QScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 200,
    MulCost = 400
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace kmq {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using QMatrix = Matrix<QScalar>;
using QVector = Vector<QScalar>;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Reduced row echelon form over an exact field together with the pivot
/// columns, in increasing order.
template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination over Q or Q(v). In each column the pivot is the
/// nonzero entry of smallest coefficient complexity, which keeps rational
/// function growth in check.
template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  RowEchelon<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index best = -1;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (Index r = row; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      std::size_t c = complexity(m(r, col));
      if (c < best_size) {
        best = r;
        best_size = c;
      }
    }
    if (best < 0) continue;
    if (best != row) m.row(best).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c)
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (Index c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Columns spanning the right null space, one per free column of the echelon
/// form (the standard basis of the solution space, in increasing free-column
/// order).
template <typename Derived>
Matrix<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto ech = row_echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis(n, n - ech.rank());
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    for (Index r = 0; r < n; ++r) basis(r, k) = Scalar(0);
    basis(free, k) = Scalar(1);
    for (Index i = 0; i < ech.rank(); ++i) basis(ech.pivots[static_cast<std::size_t>(i)], k) = -ech.reduced(i, free);
    ++k;
  }
  return basis;
}

/// Inverse of a square matrix; nullopt when singular.
template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> try_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) aug(r, n + c) = Scalar(r == c ? 1 : 0);
  auto ech = row_echelon(aug);
  if (ech.rank() < n || ech.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return Matrix<Scalar>(ech.reduced.rightCols(n));
}

template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m, const char* origin) {
  auto inv = try_inverse(m);
  if (!inv) throw InternalError(origin, "matrix expected to be invertible is singular");
  return *std::move(inv);
}

/// Exact determinant by elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Index n = m.rows();
  Scalar det(1);
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index r = col; r < n; ++r)
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = Scalar(1) / m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const Scalar f = m(r, col) * inv;
      for (Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Exact matrix product; avoids Eigen's blocked kernels for exact scalars and
/// skips structural zeros.
template <typename A, typename B>
Matrix<typename A::Scalar> product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  Matrix<Scalar> out = Matrix<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      const Scalar& aik = a(i, k);
      for (Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
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

/// Kronecker product a ⊗ b with the row-major pairing (i, j) -> i*b.rows()+j.
template <typename A, typename B>
Matrix<typename A::Scalar> kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  Matrix<Scalar> out = zeros<Scalar>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Element-wise numeric specialization of an exact Q(v) matrix.
ComplexMatrix evaluate_numeric(const QMatrix& m, std::complex<double> hbar, Denominator D);
ComplexMatrix to_complex(const RationalMatrix& m);

}  // namespace kmq

#endif  // KMQ_MATRIX_HPP
