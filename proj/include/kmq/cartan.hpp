#ifndef KMQ_CARTAN_HPP
#define KMQ_CARTAN_HPP

#include <cstddef>
#include <vector>

#include "kmq/matrix.hpp"
#include "kmq/multidegree.hpp"
#include "kmq/qscalar.hpp"
#include "kmq/rational.hpp"

namespace kmq {

/// A symmetrizable matrix with a realization (h, Pi, Pi^v) and the
/// nondegenerate invariant form on h.
///
/// Coordinates on h are taken in the basis h_1..h_n followed by the
/// n - rank(A) extension vectors. A functional on h (a weight) is stored by
/// its values on that basis.
class CartanDatum {
 public:
  std::size_t n() const { return n_; }
  std::size_t h_dim() const { return static_cast<std::size_t>(form_.rows()); }
  const RationalMatrix& cartan_matrix() const { return a_; }
  const Rational& a(std::size_t i, std::size_t j) const { return a_(static_cast<Index>(i), static_cast<Index>(j)); }
  const std::vector<Rational>& symmetrizer() const { return d_; }
  const Rational& d(std::size_t i) const { return d_[i]; }

  /// n x h_dim, row i = simple root alpha_i.
  const RationalMatrix& roots() const { return roots_; }
  /// n x h_dim, row i = coroot h_i.
  const RationalMatrix& coroots() const { return coroots_; }
  /// The form (,) on h in the chosen basis.
  const RationalMatrix& form() const { return form_; }
  /// Its inverse: the induced form on h^*.
  const RationalMatrix& dual_form() const { return dual_form_; }

  /// (alpha_i, alpha_j) = d_i a_ij.
  Rational root_form(std::size_t i, std::size_t j) const { return d_[i] * a(i, j); }
  /// (sum m_i alpha_i, sum k_j alpha_j).
  Rational root_form(const Multidegree& m, const Multidegree& k) const;
  /// a_ii = 2 and a_ij nonpositive integers off the diagonal.
  bool is_generalized_cartan() const;

 private:
  friend CartanDatum build_realization(const RationalMatrix&, const std::vector<Rational>&);
  std::size_t n_ = 0;
  RationalMatrix a_;
  std::vector<Rational> d_;
  RationalMatrix roots_;
  RationalMatrix coroots_;
  RationalMatrix form_;
  RationalMatrix dual_form_;
};

/// mu = base - sum offset_i alpha_i. Weights over the same base compare by
/// offset.
struct Weight {
  RationalVector base;
  Multidegree offset;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.base == b.base && a.offset == b.offset;
  }
};

/// Symmetrizer d with d_i a_ij = d_j a_ji, first index of every connected
/// component normalized to 1. Throws NotSymmetrizable naming the violating
/// pair (1-based).
std::vector<Rational> symmetrize(const RationalMatrix& a);

/// Kac's realization with the invariant form; rank-deficient matrices get
/// n - rank(A) extension coordinates.
CartanDatum build_realization(const RationalMatrix& a, const std::vector<Rational>& d);
CartanDatum build_realization(const RationalMatrix& a);

/// Highest weight from values on the basis of h: either n values lambda(h_i)
/// (extension coordinates zero) or h_dim values.
Weight highest_weight(const CartanDatum& cd, const std::vector<Rational>& values);

/// Coordinates (values on the basis of h) of the functional mu.
RationalVector weight_vector(const Weight& w, const CartanDatum& cd);
/// The invariant form on h^*, bilinear in both arguments.
Rational weight_form(const Weight& x, const Weight& y, const CartanDatum& cd);
/// mu(h_i)
Rational weight_on_coroot(const Weight& w, std::size_t i, const CartanDatum& cd);
/// (alpha_i, mu)
Rational root_weight_form(std::size_t i, const Weight& w, const CartanDatum& cd);

/// gamma_i = d_i h_i as coordinates in h.
RationalVector gamma(std::size_t i, const CartanDatum& cd);

/// Least D such that every q-exponent of the session lies in (1/D)Z:
/// d_i, d_i a_ij, and all pairings among the supplied weights and roots.
Denominator session_denominator(const CartanDatum& cd, const std::vector<Weight>& weights = {});

/// Parses "2 -1; -1 2" (rows separated by ';', entries by whitespace).
RationalMatrix parse_matrix(const std::string& text);

}  // namespace kmq

#endif  // KMQ_CARTAN_HPP
