#include <cmath>
#include <random>

#include "doctest.h"
#include "kmq/error.hpp"
#include "kmq/qscalar.hpp"

using namespace kmq;

namespace {

QScalar random_scalar(std::mt19937& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> shift(-3, 3);
  std::vector<Rational> num, den;
  for (int k = 0, top = deg(rng); k <= top; ++k) num.emplace_back(coef(rng), 1 + (k % 2));
  for (int k = 0, top = deg(rng); k <= top; ++k) den.emplace_back(coef(rng));
  den.front() = Rational(1 + std::abs(coef(rng)));
  return QScalar(shift(rng), Polynomial(num), Polynomial(den));
}

// Sample a point away from the unit circle so random denominators stay clear of zero.
const std::complex<double> kHbar(0.37, 0.21);

}  // namespace

TEST_CASE("field arithmetic examples") {
  const Denominator D1(1);
  const QScalar d = q_minus_q_inverse(D1);
  CHECK((d / d).is_one());

  const Denominator D2(2);
  CHECK(q_power(Rational(1, 2), D2) * q_power(Rational(1, 2), D2) == QScalar::v_power(2));

  QScalar q2 = q_power(Rational(2), D1) - q_power(Rational(-2), D1);
  CHECK(q2 / d == q_power(Rational(1), D1) + q_power(Rational(-1), D1));
  CHECK((q2 / d).is_laurent());
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(QScalar(1) / QScalar(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("q_power") {
  CHECK(q_power(Rational(0), Denominator(1)).is_one());
  CHECK(q_power(Rational(1), Denominator(1)) == QScalar::v_power(1));
  CHECK(q_power(Rational(-3, 2), Denominator(2)) == QScalar::v_power(-3));
  CHECK_THROWS_AS(q_power(Rational(1, 3), Denominator(2)), DenominatorError);
}

TEST_CASE("q-integers and factorials") {
  const Denominator D(1);
  const Rational one(1);
  CHECK(q_integer(0, one, D).is_zero());
  CHECK(q_factorial(0, one, D).is_one());
  CHECK(q_integer(2, one, D) == QScalar::laurent(-1, Polynomial({Rational(1), Rational(0), Rational(1)})));
  CHECK(q_integer(3, one, D) ==
        QScalar::laurent(-2, Polynomial({Rational(1), Rational(0), Rational(1), Rational(0), Rational(1)})));
  // [2]_{q^2} at D = 2 lives in v^{+-4}
  CHECK(q_integer(2, Rational(2), Denominator(2)) == QScalar::v_power(4) + QScalar::v_power(-4));
  // bracket agrees with the integer version on integers
  CHECK(q_bracket(Rational(3), one, D) == q_integer(3, one, D));
  CHECK(q_bracket(Rational(-2), one, D) == -q_integer(2, one, D));
}

TEST_CASE("numeric evaluation") {
  CHECK(std::abs(QScalar(1).evaluate({0.3, 0.1}, Denominator(1)) - 1.0) < 1e-15);
  CHECK(std::abs(q_power(Rational(1), Denominator(1)).evaluate(0.0, Denominator(1)) - 1.0) < 1e-15);
  QScalar x = q_integer(2, Rational(1), Denominator(1));
  CHECK(std::abs(x.evaluate(0.2, Denominator(1)) - 2.0 * std::cosh(0.1)) < 1e-14);
  // the same element written over a finer denominator evaluates identically
  QScalar x3 = q_integer(2, Rational(1), Denominator(3));
  CHECK(std::abs(x3.evaluate(0.2, Denominator(3)) - 2.0 * std::cosh(0.1)) < 1e-14);
  QScalar pole = QScalar(1) / q_minus_q_inverse(Denominator(1));
  CHECK_THROWS_AS(pole.evaluate(0.0, Denominator(1)), PoleError);
  CHECK_THROWS_AS(pole.at_one(), PoleError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("canonical form is unique") {
  // (v^2 - 1)/(v - 1) normalizes to v + 1
  QScalar x(0, Polynomial({Rational(-1), Rational(0), Rational(1)}), Polynomial({Rational(-1), Rational(1)}));
  CHECK(x.is_laurent());
  CHECK(x == QScalar::laurent(0, Polynomial({Rational(1), Rational(1)})));
  // scaling numerator and denominator together changes nothing
  QScalar y(0, Polynomial({Rational(2), Rational(4)}), Polynomial({Rational(6), Rational(2)}));
  QScalar z(0, Polynomial({Rational(1), Rational(2)}), Polynomial({Rational(3), Rational(1)}));
  CHECK(y == z);
  CHECK(y.to_string() == z.to_string());
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(777);
  const Denominator D(2);
  for (int trial = 0; trial < 60; ++trial) {
    QScalar a = random_scalar(rng), b = random_scalar(rng);
    const auto ea = a.evaluate(kHbar, D), eb = b.evaluate(kHbar, D);
    const auto prod = (a * b).evaluate(kHbar, D);
    const auto sum = (a + b).evaluate(kHbar, D);
    CHECK(std::abs(prod - ea * eb) <= 1e-12 * std::max(1.0, std::abs(ea * eb)));
    CHECK(std::abs(sum - (ea + eb)) <= 1e-12 * std::max({1.0, std::abs(ea), std::abs(eb)}));
  }
}

TEST_CASE("q-factorial tends to the factorial") {
  double fact = 1;
  for (long m = 0; m <= 6; ++m) {
    if (m > 0) fact *= static_cast<double>(m);
    const auto val = q_factorial(m, Rational(1), Denominator(1)).evaluate(1e-6, Denominator(1));
    CHECK(std::abs(val - fact) <= 1e-4 * fact);
    CHECK(q_factorial(m, Rational(1), Denominator(1)).at_one() == Rational(static_cast<long>(fact)));
  }
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
}
