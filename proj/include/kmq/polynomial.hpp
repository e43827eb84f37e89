#ifndef KMQ_POLYNOMIAL_HPP
#define KMQ_POLYNOMIAL_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "kmq/rational.hpp"

namespace kmq {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const Rational& leading() const { return c_.back(); }
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Multiply by v^k, k >= 0.
  Polynomial shifted_up(int k) const;
  /// Divide by v^k; the k lowest coefficients must be zero.
  Polynomial shifted_down(int k) const;
  Polynomial monic() const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Exact quotient; the remainder must vanish.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);
  /// Monic greatest common divisor (zero only if both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::complex<double> evaluate(std::complex<double> v) const;
  Rational evaluate(const Rational& v) const;

  std::size_t complexity() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace kmq

#endif  // KMQ_POLYNOMIAL_HPP
