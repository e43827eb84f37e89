#include "kmq/qscalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "kmq/error.hpp"

namespace kmq {

Denominator::Denominator(long value) : value_(value) {
  if (value <= 0) throw Error("scalars/denominator", "session denominator must be positive");
}

QScalar::QScalar(const Rational& c) : num_(c), den_(Rational(1)) {}

QScalar::QScalar(int shift, Polynomial num, Polynomial den)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("scalars/field_arith");
  normalize();
}

QScalar QScalar::v_power(long k) {
  QScalar r(1);
  r.shift_ = static_cast<int>(k);
  return r;
}

QScalar QScalar::laurent(int low, Polynomial coeffs) {
  return QScalar(low, std::move(coeffs), Polynomial(Rational(1)));
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = Polynomial(Rational(1));
    return;
  }
  int vn = num_.valuation();
  int vd = den_.valuation();
  if (vn) num_ = num_.shifted_down(vn);
  if (vd) den_ = den_.shifted_down(vd);
  shift_ += vn - vd;
  if (den_.degree() > 0) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::exact_div(num_, g);
      den_ = Polynomial::exact_div(den_, g);
    }
  }
  if (!(den_.leading() == Rational(1))) {
    Rational inv = Rational(1) / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int s = std::min(shift_, o.shift_);
  Polynomial a = num_.shifted_up(shift_ - s);
  Polynomial b = o.num_.shifted_up(o.shift_ - s);
  shift_ = s;
  if (den_ == o.den_) {
    num_ = a + b;
  } else {
    Polynomial g = Polynomial::gcd(den_, o.den_);
    Polynomial da = Polynomial::exact_div(den_, g);
    Polynomial db = Polynomial::exact_div(o.den_, g);
    num_ = a * db + b * da;
    den_ = den_ * db;
  }
  normalize();
  return *this;
}

QScalar operator-(const QScalar& a) {
  QScalar r = a;
  r.num_ = -r.num_;
  return r;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero() || o.is_zero()) return *this = QScalar();
  shift_ += o.shift_;
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial g1 = Polynomial::gcd(num_, o.den_);
  Polynomial g2 = Polynomial::gcd(o.num_, den_);
  Polynomial n1 = g1.degree() > 0 ? Polynomial::exact_div(num_, g1) : num_;
  Polynomial d2 = g1.degree() > 0 ? Polynomial::exact_div(o.den_, g1) : o.den_;
  Polynomial n2 = g2.degree() > 0 ? Polynomial::exact_div(o.num_, g2) : o.num_;
  Polynomial d1 = g2.degree() > 0 ? Polynomial::exact_div(den_, g2) : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (!(den_.leading() == Rational(1))) normalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) {
  if (o.is_zero()) throw DivisionByZero("scalars/field_arith");
  QScalar inv;
  inv.shift_ = -o.shift_;
  Rational lc_inv = Rational(1) / o.num_.leading();
  inv.num_ = o.den_ * lc_inv;
  inv.den_ = o.num_ * lc_inv;
  return *this *= inv;
}

Rational QScalar::at_one() const {
  Rational d = den_.evaluate(Rational(1));
  if (d.is_zero())
    throw PoleError("scalars/evaluate", "pole at v = 1 from denominator factor " +
                                            QScalar(0, den_, Polynomial(Rational(1))).to_string());
  return num_.evaluate(Rational(1)) / d;
}

std::complex<double> QScalar::evaluate(std::complex<double> hbar, Denominator D) const {
  if (is_zero()) return 0.0;
  const std::complex<double> v = std::exp(hbar / (2.0 * static_cast<double>(D.value())));
  std::complex<double> d = den_.evaluate(v);
  double scale = 0.0;
  const double r = std::max(1.0, std::abs(v));
  double rk = 1.0;
  for (const auto& c : den_.coeffs()) {
    scale += std::abs(c.to_double()) * rk;
    rk *= r;
  }
  if (std::abs(d) <= 1e-12 * scale)
    throw PoleError("scalars/evaluate", "denominator factor " +
                                            QScalar(0, den_, Polynomial(Rational(1))).to_string() +
                                            " vanishes at the requested hbar");
  return std::exp(hbar * (static_cast<double>(shift_) / (2.0 * static_cast<double>(D.value())))) *
         num_.evaluate(v) / d;
}

namespace {

void append_laurent(std::ostringstream& os, int low, const Polynomial& p) {
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p[k];
    if (c.is_zero()) continue;
    const int e = low + k;
    Rational mag = abs(c);
    if (c.sign() < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!(mag == Rational(1))) os << mag << '*';
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  if (first) os << '0';
}

}  // namespace

std::string QScalar::to_string() const {
  std::ostringstream os;
  if (den_.is_one()) {
    append_laurent(os, shift_, num_);
    return os.str();
  }
  os << '(';
  append_laurent(os, shift_, num_);
  os << ")/(";
  append_laurent(os, 0, den_);
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QScalar& x) { return os << x.to_string(); }

QScalar q_power(const Rational& e, Denominator D) {
  Rational k = e * Rational(D.value());
  if (!k.is_integer())
    throw DenominatorError("scalars/q_power", "exponent " + e.to_string() +
                                                  " is not a multiple of 1/" +
                                                  std::to_string(D.value()));
  return QScalar::v_power(k.to_long());
}

QScalar q_integer(long m, const Rational& e, Denominator D) {
  if (m < 0) throw Error("scalars/q_integer", "negative argument");
  QScalar acc;
  for (long k = 0; k < m; ++k) acc += q_power(e * Rational(m - 1 - 2 * k), D);
  return acc;
}

QScalar q_factorial(long m, const Rational& e, Denominator D) {
  QScalar acc(1);
  for (long k = 2; k <= m; ++k) acc *= q_integer(k, e, D);
  return acc;
}

QScalar q_bracket(const Rational& x, const Rational& e, Denominator D) {
  if (x.is_integer() && x.sign() >= 0) return q_integer(x.to_long(), e, D);
  if (x.is_integer()) return -q_integer(-x.to_long(), e, D);
  return (q_power(e * x, D) - q_power(-e * x, D)) / (q_power(e, D) - q_power(-e, D));
}

QScalar q_minus_q_inverse(Denominator D) { return q_power(1, D) - q_power(-1, D); }

std::complex<double> evaluate_numeric(const QScalar& x, std::complex<double> hbar, Denominator D) {
  return x.evaluate(hbar, D);
}

}  // namespace kmq
