#ifndef KMQ_QPAIRING_HPP
#define KMQ_QPAIRING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "kmq/cartan.hpp"
#include "kmq/freealg.hpp"
#include "kmq/matrix.hpp"
#include "kmq/reduction.hpp"

namespace kmq {

/// Sign s of the exponent in the pairing recursion
///   B(E_i w, E_{j1}..E_{jm}) = (q - q^{-1})^{-1}
///       sum_{t : j_t = i} q^{s (alpha_i, sum_{u < t} alpha_{j_u})} B(w, z without t).
/// Only kMinus reproduces the Hopf-pairing axioms for
/// Delta(E_i) = E_i (x) q^{d_i h_i} + 1 (x) E_i; kPlus is the q -> 1/q mirror
/// and is kept for the regression test that pins the sign.
enum class ExponentSign { kPlus = 1, kMinus = -1 };
inline constexpr ExponentSign kPairingSign = ExponentSign::kMinus;

/// The pairing matrix on one multidegree component.
struct GramBlock {
  Multidegree degree;
  std::vector<Word> basis;
  QMatrix matrix;
};

/// Null space of a Gram block: the degree-m part of Ker(B).
struct KernelBasis {
  Multidegree degree;
  std::vector<FreeElement> vectors;
  long quotient_dim = 0;
};

/// The Drinfeld pairing B on the free algebra generated by E_1..E_n.
///
/// Values are memoized per (word, word); reductions per degree. All caches
/// are guarded, so one instance can serve concurrent readers.
class DrinfeldPairing {
 public:
  DrinfeldPairing(CartanDatum cd, Denominator denom, int degree_cap = kDefaultDegreeCap,
                  ExponentSign sign = kPairingSign);

  const CartanDatum& datum() const { return cd_; }
  Denominator denominator() const { return denom_; }
  int degree_cap() const { return cap_; }
  ExponentSign sign() const { return sign_; }

  /// B(x, y); zero unless the multidegrees agree.
  QScalar pair_words(const Word& x, const Word& y) const;
  /// (q - q^{-1})^{|m|} B(x, y), a Laurent polynomial in v.
  QScalar normalized_pair(const Word& x, const Word& y) const;
  /// B(x, y) for a homogeneous element x.
  QScalar pair(const FreeElement& x, const Word& y) const;

  GramBlock gram_block(const Multidegree& m) const;
  /// Gram block times (q - q^{-1})^{|m|}; same kernel, Laurent entries.
  QMatrix normalized_gram(const Multidegree& m) const;
  KernelBasis kernel_block(const Multidegree& m) const;

  /// Basis of U_+[m] = free[m] / Ker(B) and coordinates of every word.
  const DegreeReduction<QScalar>& reduction(const Multidegree& m) const;

 private:
  QScalar normalized_rec(const Word& x, const Word& y) const;
  void check_cap(const Multidegree& m, const char* origin) const;

  CartanDatum cd_;
  Denominator denom_;
  int cap_;
  ExponentSign sign_;
  /// D * (alpha_i, alpha_j), row-major.
  std::vector<long> scaled_root_form_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::string, QScalar> memo_;
  mutable std::mutex reduction_mutex_;
  mutable std::map<Multidegree, std::shared_ptr<const DegreeReduction<QScalar>>> reductions_;
};

/// sum_{m=0}^{1-a_ij} (-1)^m / ([m]_{q_i}! [1-a_ij-m]_{q_i}!) E_i^{1-a_ij-m} E_j E_i^m,
/// q_i = q^{d_i}. Throws NotApplicable unless the matrix is a generalized
/// Cartan matrix and i != j.
FreeElement quantum_serre_element(std::size_t i, std::size_t j, const CartanDatum& cd, Denominator denom);

struct SerreReport {
  std::size_t i = 0;
  std::size_t j = 0;
  FreeElement element{Multidegree()};
  bool in_kernel = false;
};

/// Pairs the Serre element against every word of its degree.
SerreReport verify_serre_in_kernel(std::size_t i, std::size_t j, const DrinfeldPairing& pairing);

/// dim U_+[m] for every m with |m| <= max_total_degree.
std::map<Multidegree, long> quotient_dims(const DrinfeldPairing& pairing, int max_total_degree);

}  // namespace kmq

#endif  // KMQ_QPAIRING_HPP
