#ifndef KMQ_QSCALAR_HPP
#define KMQ_QSCALAR_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>

#include "kmq/polynomial.hpp"
#include "kmq/rational.hpp"

namespace kmq {

/// Session denominator D: q = v^D, so every exponent e of q that a session
/// produces must satisfy e*D in Z.
class Denominator {
 public:
  Denominator() = default;
  explicit Denominator(long value);
  long value() const { return value_; }
  friend bool operator==(Denominator, Denominator) = default;

 private:
  long value_ = 1;
};

/// Element of Q(v), v = q^{1/D}, stored as v^shift * num(v) / den(v).
///
/// Canonical form: num and den have nonzero constant terms, den is monic,
/// gcd(num, den) = 1. Zero is (0, 0, 1). Equality is structural on the
/// canonical form.
class QScalar {
 public:
  QScalar() : den_(Rational(1)) {}
  QScalar(long c) : QScalar(Rational(c)) {}  // NOLINT
  QScalar(int c) : QScalar(Rational(c)) {}   // NOLINT
  QScalar(const Rational& c);                // NOLINT
  QScalar(int shift, Polynomial num, Polynomial den);

  /// v^k
  static QScalar v_power(long k);
  /// Laurent polynomial sum_k c_k v^{low + k}.
  static QScalar laurent(int low, Polynomial coeffs);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  /// True when the denominator is 1 (a Laurent polynomial in v).
  bool is_laurent() const { return den_.is_one(); }
  int shift() const { return shift_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend QScalar operator-(const QScalar& a);
  friend bool operator==(const QScalar& a, const QScalar& b) = default;

  /// Value at v = 1 (the classical point); throws PoleError on a pole.
  Rational at_one() const;
  /// Value at v = exp(hbar / (2D)), i.e. q = exp(hbar / 2).
  std::complex<double> evaluate(std::complex<double> hbar, Denominator D) const;

  /// "p(v)/r(v)" with Laurent numerator; "0", "1", "v^-2+1" ...
  std::string to_string() const;
  std::size_t complexity() const { return num_.complexity() + den_.complexity(); }

 private:
  void normalize();

  int shift_ = 0;
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const QScalar& x);

inline bool is_zero(const QScalar& x) { return x.is_zero(); }
inline std::size_t complexity(const QScalar& x) { return x.complexity(); }

/// q^e = v^{e D}; throws DenominatorError when e*D is not integral.
QScalar q_power(const Rational& e, Denominator D);
/// [m]_{q^e} = (q^{e m} - q^{-e m}) / (q^e - q^{-e}).
QScalar q_integer(long m, const Rational& e, Denominator D);
/// [m]_{q^e}! with [0]! = 1.
QScalar q_factorial(long m, const Rational& e, Denominator D);
/// [x]_{q^e} for a rational x (the K-eigenvalue quotient
/// (q^{e x} - q^{-e x}) / (q^e - q^{-e})); x*e*D must be integral.
QScalar q_bracket(const Rational& x, const Rational& e, Denominator D);
/// q - q^{-1}
QScalar q_minus_q_inverse(Denominator D);

/// x evaluated at q = exp(hbar/2). Free-function form of QScalar::evaluate.
std::complex<double> evaluate_numeric(const QScalar& x, std::complex<double> hbar, Denominator D);

}  // namespace kmq

#endif  // KMQ_QSCALAR_HPP
