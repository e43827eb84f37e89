#ifndef KMQ_FREEALG_HPP
#define KMQ_FREEALG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kmq/cartan.hpp"
#include "kmq/error.hpp"
#include "kmq/multidegree.hpp"
#include "kmq/qscalar.hpp"

namespace kmq {

/// Monomial E_{i1} ... E_{ik} of the free algebra; letters are 0-based
/// generator indices. Serialized 1-based, "112" = E_1 E_1 E_2.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  static Word parse(const std::string& text);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return static_cast<unsigned char>(letters_[k]); }
  int front() const { return (*this)[0]; }

  Multidegree degree(std::size_t n) const;
  Word tail() const;
  Word without(std::size_t position) const;
  Word reversed() const;
  friend Word operator+(const Word& a, const Word& b);
  static Word letter(int i);

  /// Compact key for hash tables.
  const std::string& key() const { return letters_; }
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// Homogeneous element of the free algebra: an ordered map Word -> Scalar
/// with no zero coefficients.
template <typename Scalar>
class BasicFreeElement {
 public:
  explicit BasicFreeElement(Multidegree degree) : degree_(std::move(degree)) {}
  static BasicFreeElement generator(std::size_t n, std::size_t i) {
    BasicFreeElement e(Multidegree::unit(n, i));
    e.terms_.emplace(Word::letter(static_cast<int>(i)), Scalar(1));
    return e;
  }
  static BasicFreeElement unit(std::size_t n) {
    BasicFreeElement e{Multidegree::zero(n)};
    e.terms_.emplace(Word(), Scalar(1));
    return e;
  }

  const Multidegree& degree() const { return degree_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Scalar& c) {
    if (w.degree(degree_.size()) != degree_) throw Error("freealg/free_element", "inhomogeneous term " + w.to_string());
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  BasicFreeElement& operator+=(const BasicFreeElement& o) {
    check_same_degree(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  BasicFreeElement& operator*=(const Scalar& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend BasicFreeElement operator+(BasicFreeElement a, const BasicFreeElement& b) { return a += b; }
  friend BasicFreeElement operator*(BasicFreeElement a, const Scalar& s) { return a *= s; }

  friend bool operator==(const BasicFreeElement& a, const BasicFreeElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// "c1*[w1] + c2*[w2]" with words 1-based.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*[" + w.to_string() + "]";
    }
    return s;
  }

 private:
  static bool is_zero_scalar(const Scalar& s) { return kmq::is_zero(s); }
  void check_same_degree(const BasicFreeElement& o) const {
    if (!(o.degree_ == degree_)) throw Error("freealg/free_element", "degree mismatch in sum");
  }

  Multidegree degree_;
  std::map<Word, Scalar> terms_;
};

using FreeElement = BasicFreeElement<QScalar>;

/// Concatenation product; degrees add.
template <typename Scalar>
BasicFreeElement<Scalar> free_mul(const BasicFreeElement<Scalar>& x, const BasicFreeElement<Scalar>& y) {
  BasicFreeElement<Scalar> out(x.degree() + y.degree());
  for (const auto& [u, a] : x.terms())
    for (const auto& [w, b] : y.terms()) out.add_term(u + w, a * b);
  return out;
}

/// Default cap on total degree for word enumeration.
inline constexpr int kDefaultDegreeCap = 8;

/// Largest number of words in one degree that a Gram block is built for.
inline constexpr long kMaxBlockWords = 20000;

/// All words with letter counts m in lexicographic order; there are
/// |m|! / prod m_i! of them. Throws ResourceError when |m| > cap or the
/// count exceeds kMaxBlockWords.
std::vector<Word> enumerate_words(const Multidegree& m, int cap = kDefaultDegreeCap);

/// Root-lattice weight sum m_i alpha_i of a word, as a multidegree.
Multidegree word_weight(const Word& w, const CartanDatum& cd);

/// |m|! / prod m_i!
long multinomial(const Multidegree& m);

}  // namespace kmq

#endif  // KMQ_FREEALG_HPP
