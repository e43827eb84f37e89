#ifndef KMQ_RATIONAL_HPP
#define KMQ_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kmq {

/// Arbitrary precision rational number. Thin value wrapper over mpq_class
/// without expression templates, so it composes with Eigen and std
/// containers.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of a numeric type
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "-p/r" or a terminating decimal "1.25".
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  /// Requires is_integer() and a value fitting in long.
  long to_long() const;
  std::string to_string() const { return value_.get_str(); }
  /// Bit size of numerator plus denominator; used as a pivot heuristic.
  std::size_t complexity() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline std::size_t complexity(const Rational& r) { return r.complexity(); }

Rational abs(const Rational& r);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace kmq

template <>
struct std::hash<kmq::Rational> {
  std::size_t operator()(const kmq::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};

#endif  // KMQ_RATIONAL_HPP
