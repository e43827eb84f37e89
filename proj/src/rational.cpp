#include "kmq/rational.hpp"

#include <ostream>

#include "kmq/error.hpp"

namespace kmq {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("scalars/rational");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error("scalars/rational", "malformed rational literal '" + s + "'"); };
  if (s.empty()) throw bad();
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw bad();
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t decimals = s.size() - dot - 1;
    mpz_class num;
    if (digits.empty() || digits == "-" || digits == "+" || num.set_str(digits, 10) != 0) throw bad();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, decimals);
    return Rational(mpq_class(num, den));
  }
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw DivisionByZero("scalars/rational");
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p())
    throw Error("scalars/rational", "value " + to_string() + " is not a machine integer");
  return value_.get_num().get_si();
}

std::size_t Rational::complexity() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("scalars/field_arith");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace kmq
