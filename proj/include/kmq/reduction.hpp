#ifndef KMQ_REDUCTION_HPP
#define KMQ_REDUCTION_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "kmq/freealg.hpp"
#include "kmq/matrix.hpp"

namespace kmq {

/// Presentation of one graded component of a quotient of the free algebra by
/// the radical of a symmetric form on words: a basis of words and the
/// coordinates of every word of the degree in that basis.
template <typename Scalar>
struct DegreeReduction {
  Multidegree degree;
  std::vector<Word> words;
  /// Positions in `words` of the basis words, increasing.
  std::vector<std::size_t> basis;
  /// basis.size() x words.size(); column k expresses words[k] modulo the
  /// radical.
  Matrix<Scalar> coordinates;
  std::unordered_map<std::string, std::size_t> position;

  std::size_t dim() const { return basis.size(); }
  std::size_t radical_dim() const { return words.size() - basis.size(); }
  const Word& basis_word(std::size_t a) const { return words[basis[a]]; }

  /// Coordinates of a word of this degree.
  Vector<Scalar> reduce(const Word& w) const {
    auto it = position.find(w.key());
    if (it == position.end()) throw Error("freealg/reduce", "word " + w.to_string() + " has the wrong degree");
    return coordinates.col(static_cast<Index>(it->second));
  }
};

/// Builds the reduction from the Gram matrix of a symmetric form on all
/// words of the degree. Basis words are the pivot columns of the Gram
/// matrix; for a symmetric form the principal submatrix on them is
/// invertible.
template <typename Scalar>
DegreeReduction<Scalar> make_reduction(Multidegree degree, std::vector<Word> words, const Matrix<Scalar>& gram) {
  DegreeReduction<Scalar> r;
  r.degree = std::move(degree);
  r.words = std::move(words);
  for (std::size_t k = 0; k < r.words.size(); ++k) r.position.emplace(r.words[k].key(), k);
  auto ech = row_echelon(gram);
  for (Index p : ech.pivots) r.basis.push_back(static_cast<std::size_t>(p));
  const auto b = static_cast<Index>(r.basis.size());
  Matrix<Scalar> g_bb(b, b);
  Matrix<Scalar> g_b(b, gram.cols());
  for (Index i = 0; i < b; ++i) {
    for (Index j = 0; j < b; ++j) g_bb(i, j) = gram(static_cast<Index>(r.basis[i]), static_cast<Index>(r.basis[j]));
    g_b.row(i) = gram.row(static_cast<Index>(r.basis[i]));
  }
  r.coordinates = product(inverse(g_bb, "freealg/make_reduction"), g_b);
  return r;
}

}  // namespace kmq

#endif  // KMQ_REDUCTION_HPP
