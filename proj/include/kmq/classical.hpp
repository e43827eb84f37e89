#ifndef KMQ_CLASSICAL_HPP
#define KMQ_CLASSICAL_HPP

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
#include "kmq/tensor.hpp"
#include "kmq/weight_module.hpp"

namespace kmq {

/// Values lambda(b) = 1/p on the basis of h, p running through the primes
/// above 10^4. No Shapovalov determinant factor vanishes at such a weight in
/// the degrees reachable here.
RationalVector generic_weight_values(const CartanDatum& cd);

/// Relations of U(n_-) for g(A): the radical of the contravariant form on
/// free F-words at a generic highest weight,
///   S(i y, z) = sum_{t : z_t = i} mu_t(h_i) S(y, z without t),
///   mu_t = lambda - sum_{u > t} alpha_{z_u}.
/// Mirrored under e_i <-> f_i it is also the relation space of U(n_+).
class ClassicalRelations {
 public:
  explicit ClassicalRelations(CartanDatum cd, int degree_cap = kDefaultDegreeCap);

  const CartanDatum& datum() const { return cd_; }
  int degree_cap() const { return cap_; }
  const RationalVector& generic_weight() const { return lambda_; }

  Rational form(const Word& x, const Word& y) const;
  RationalMatrix block(const Multidegree& m) const;
  const DegreeReduction<Rational>& reduction(const Multidegree& m) const;
  /// dim U(n_+)[m]
  long quotient_dim(const Multidegree& m) const { return static_cast<long>(reduction(m).dim()); }
  long relation_rank(const Multidegree& m) const { return static_cast<long>(reduction(m).radical_dim()); }

 private:
  Rational rec(const Word& x, const Word& y) const;

  CartanDatum cd_;
  int cap_;
  RationalVector lambda_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::string, Rational> memo_;
  mutable std::mutex reduction_mutex_;
  mutable std::map<Multidegree, std::shared_ptr<const DegreeReduction<Rational>>> reductions_;
};

/// Truncated power series over Z in t_1..t_n, keyed by exponent.
using Series = std::map<Multidegree, long>;

/// series * (1 - t^beta)^e, dropping total degree above max_total.
Series multiply_binomial(const Series& s, const Multidegree& beta, long e, int max_total);

/// Multiplicities mult(beta) with prod_beta (1 - t^beta)^{-mult beta} = sum dims(m) t^m.
std::map<Multidegree, long> pbw_multiplicities(const std::map<Multidegree, long>& dims, std::size_t n,
                                               int max_total);

/// Root multiplicities dim g_beta, |beta| <= max_total.
std::map<Multidegree, long> root_multiplicities(const ClassicalRelations& rel, int max_total);

/// sum_w sign(w) t^{rho - w rho} truncated at max_total (generalized Cartan
/// matrices only).
Series weyl_kac_alternating_sum(const CartanDatum& cd, int max_total);

/// Multiplicities read off the denominator identity
///   prod_beta (1 - t^beta)^{mult beta} = sum_w sign(w) t^{rho - w rho}.
/// Throws NotApplicable unless A is a generalized Cartan matrix.
std::map<Multidegree, long> weyl_kac_multiplicities(const CartanDatum& cd, int max_total);

using ClassicalModule = WeightModule<Rational>;

/// Verma or irreducible module of g(A) with highest weight lambda,
/// truncated at depth. Uses the relations of `rel` for U(n_-).
ClassicalModule classical_module(const Weight& lambda, ModuleType type, int depth, const ClassicalRelations& rel);

/// Right-normed commutator e_[w] = [e_{w_1}, [e_{w_2}, ... e_{w_k}]] (or the
/// f version) as an operator on a module from offset m.
RationalMatrix lie_word_operator(const ClassicalModule& mod, const Word& w, const Multidegree& m, bool raising);

/// A basis e_a of n_+[beta] by right-normed commutators and its dual basis
/// f^a of n_-[beta] under the invariant form with (e_i, f_j) = delta_ij / d_i.
struct LieDualBasis {
  Multidegree degree;
  std::vector<Word> e_words;
  std::vector<Word> f_words;
  /// f^a = sum_b dual(b, a) f_[f_words[b]]
  RationalMatrix dual;
};

/// Dual bases for every beta with 1 <= |beta| <= max_total.
class CasimirData {
 public:
  CasimirData(const ClassicalRelations& rel, int max_total);
  const std::vector<LieDualBasis>& bases() const { return bases_; }
  int max_total() const { return max_total_; }
  const CartanDatum& datum() const { return cd_; }

 private:
  CartanDatum cd_;
  int max_total_;
  std::vector<LieDualBasis> bases_;
};

/// Omega acting on slots (a, b) of a tensor block of classical modules.
/// Cartan part: (mu_a, mu_b); root part:
///   sum_beta sum_a e_a^{(a)} f^a^{(b)} + f^a^{(a)} e_a^{(b)}.
struct OmegaBlock {
  TensorBlock block;
  RationalMatrix matrix;
};

OmegaBlock casimir_omega(const std::vector<const ClassicalModule*>& factors, const Multidegree& total,
                         std::size_t a, std::size_t b, const CasimirData& data);

/// Diagonal action sum_p x^{(p)} of e_i (raising) or f_i on a tensor block,
/// mapping `from` to the block of the shifted total.
RationalMatrix tensor_generator(const std::vector<const ClassicalModule*>& factors, const TensorBlock& from,
                                const TensorBlock& to, std::size_t i, bool raising);

}  // namespace kmq

#endif  // KMQ_CLASSICAL_HPP
