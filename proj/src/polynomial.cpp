#include "kmq/polynomial.hpp"

#include <algorithm>

#include "kmq/error.hpp"

namespace kmq {

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  Polynomial p;
  p.c_ = std::move(v);
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Polynomial::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const mpq_class& ai = a.c_[i].mpq();
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += ai * b.c_[j].mpq();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& x : acc) out.emplace_back(std::move(x));
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial Polynomial::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial r;
  r.c_.assign(static_cast<std::size_t>(k), Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Polynomial Polynomial::shifted_down(int k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading() == Rational(1)) return *this;
  Rational inv = Rational(1) / leading();
  Polynomial r = *this;
  r *= inv;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("scalars/polynomial");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<mpq_class> rem;
  rem.reserve(a.c_.size());
  for (const auto& x : a.c_) rem.push_back(x.mpq());
  const int db = b.degree();
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1));
  mpq_class lead_inv = 1 / b.leading().mpq();
  for (int k = a.degree(); k >= db; --k) {
    mpq_class f = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (sgn(f) == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)].mpq();
  }
  std::vector<Rational> q, r;
  for (auto& x : quot) q.emplace_back(std::move(x));
  rem.resize(static_cast<std::size_t>(db));
  for (auto& x : rem) r.emplace_back(std::move(x));
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("scalars/polynomial", "inexact polynomial division");
  return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Polynomial(Rational(1));
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::complex<double> Polynomial::evaluate(std::complex<double> v) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->to_double();
  return acc;
}

Rational Polynomial::evaluate(const Rational& v) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::size_t Polynomial::complexity() const {
  std::size_t s = 0;
  for (const auto& x : c_) s += 1 + x.complexity();
  return s;
}

}  // namespace kmq
