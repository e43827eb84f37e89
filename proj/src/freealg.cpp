#include "kmq/freealg.hpp"

#include <algorithm>

namespace kmq {

Word::Word(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l < 0 || l > 250) throw Error("freealg/word", "letter index out of range");
    letters_.push_back(static_cast<char>(l));
  }
}

Word Word::parse(const std::string& text) {
  std::vector<int> letters;
  for (char c : text) {
    if (c < '1' || c > '9') throw Error("freealg/word", "words are strings of 1-based indices 1..9");
    letters.push_back(c - '1');
  }
  return Word(std::move(letters));
}

Word Word::letter(int i) { return Word(std::vector<int>{i}); }

Multidegree Word::degree(std::size_t n) const {
  std::vector<int> m(n, 0);
  for (std::size_t k = 0; k < length(); ++k) {
    const auto l = static_cast<std::size_t>((*this)[k]);
    if (l >= n) throw Error("freealg/word", "letter exceeds number of generators");
    ++m[l];
  }
  return Multidegree(std::move(m));
}

Word Word::tail() const {
  Word w;
  w.letters_ = letters_.substr(1);
  return w;
}

Word Word::without(std::size_t position) const {
  Word w = *this;
  w.letters_.erase(position, 1);
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word operator+(const Word& a, const Word& b) {
  Word w = a;
  w.letters_ += b.letters_;
  return w;
}

std::string Word::to_string() const {
  if (empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < length(); ++k) {
    const int l = (*this)[k] + 1;
    if (l > 9) {
      s += "(" + std::to_string(l) + ")";
    } else {
      s += static_cast<char>('0' + l);
    }
  }
  return s;
}

std::vector<Word> enumerate_words(const Multidegree& m, int cap) {
  if (m.total() > cap)
    throw ResourceError("freealg/enumerate_words",
                        "total degree " + std::to_string(m.total()) + " exceeds cap " + std::to_string(cap));
  if (multinomial(m) > kMaxBlockWords)
    throw ResourceError("freealg/enumerate_words", "degree " + m.to_string() + " has more than " +
                                                       std::to_string(kMaxBlockWords) + " words");
  std::vector<int> letters;
  for (std::size_t i = 0; i < m.size(); ++i) letters.insert(letters.end(), static_cast<std::size_t>(m[i]), static_cast<int>(i));
  std::vector<Word> out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

Multidegree word_weight(const Word& w, const CartanDatum& cd) { return w.degree(cd.n()); }

long multinomial(const Multidegree& m) {
  long result = 1;
  int acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int k = 1; k <= m[i]; ++k) {
      ++acc;
      result = result * acc / k;
    }
  return result;
}

}  // namespace kmq
