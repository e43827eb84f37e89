#ifndef KMQ_MULTIDEGREE_HPP
#define KMQ_MULTIDEGREE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace kmq {

/// Element of Z_+^n: the multigrading of the free algebra on E_1..E_n and
/// the offset of a weight below its highest weight.
class Multidegree {
 public:
  Multidegree() = default;
  static Multidegree zero(std::size_t n) { return Multidegree(std::vector<int>(n, 0)); }
  explicit Multidegree(std::vector<int> m);
  static Multidegree unit(std::size_t n, std::size_t i);

  std::size_t size() const { return m_.size(); }
  int operator[](std::size_t i) const { return m_[i]; }
  int total() const;
  bool is_zero() const { return total() == 0; }
  const std::vector<int>& values() const { return m_; }

  /// Componentwise a - b, or false when some component would go negative.
  bool can_subtract(const Multidegree& b) const;
  Multidegree& operator+=(const Multidegree& o);
  Multidegree& operator-=(const Multidegree& o);
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }
  friend Multidegree operator*(int k, Multidegree a);

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

  /// Componentwise a <= b.
  bool dominated_by(const Multidegree& b) const;

  /// "(2,1)"
  std::string to_string() const;

 private:
  std::vector<int> m_;
};

/// All multidegrees with min_total <= |m| <= max_total, ordered by total
/// degree and then lexicographically descending: (2,0), (1,1), (0,2), ...
std::vector<Multidegree> graded_multidegrees(std::size_t n, int min_total, int max_total);

}  // namespace kmq

#endif  // KMQ_MULTIDEGREE_HPP
