#include "kmq/matrix.hpp"

namespace kmq {

ComplexMatrix evaluate_numeric(const QMatrix& m, std::complex<double> hbar, Denominator D) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(hbar, D);
  return out;
}

ComplexMatrix to_complex(const RationalMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

}  // namespace kmq
