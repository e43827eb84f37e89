#ifndef KMQ_RMATRIX_HPP
#define KMQ_RMATRIX_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kmq/qmodules.hpp"
#include "kmq/tensor.hpp"

namespace kmq {

/// Dual bases of U_+[beta] and U_-[beta] under B: u_a = E_{u_words[a]}
/// (reduced words) and v_b = sum_c v_coeffs(c, b) F_{u_words[c]}, with
/// B(u_a, omega(v_b)) = delta_ab.
struct DualBasisPair {
  Multidegree degree;
  std::vector<Word> u_words;
  /// B(u_a, u_b)
  QMatrix gram;
  QMatrix v_coeffs;
};

DualBasisPair dual_bases(const Multidegree& beta, const DrinfeldPairing& pairing);

/// max |B(u_a, omega(v_b)) - delta_ab| == 0, recomputed from the pairing.
bool verify_duality(const DualBasisPair& pair, const DrinfeldPairing& pairing);

/// Presentation choices for the truncated R-matrix on V (x) W:
///   R = q^{(mu, nu)} sum_beta sum_a X_a (x) Y_a
/// with (X, Y) = (v_a, u_a) or, flipped, (u_a, v_a), and (mu, nu) read on
/// the source or target weights.
struct RConvention {
  bool flipped = false;
  bool cartan_on_target = false;
};

/// The only convention under which sigma R intertwines
/// Delta(E_i) = E_i (x) K_i + 1 (x) E_i and Delta(F_i) = F_i (x) 1 + K_i^{-1} (x) F_i:
///   R = q^{(mu, nu)} sum_a u_a (x) v_a, the Cartan factor applied last.
/// The highest pair has eigenvalue q^{(lambda, mu)}. Every variant satisfies
/// the braid relation, so only the intertwining test pins this one.
inline constexpr RConvention kRConvention{true, true};

/// Dual bases for all degrees, cached. Shared read-only across blocks.
class RMatrixData {
 public:
  explicit RMatrixData(const DrinfeldPairing& pairing, RConvention convention = kRConvention);
  const DrinfeldPairing& pairing() const { return pairing_; }
  RConvention convention() const { return convention_; }
  const DualBasisPair& dual(const Multidegree& beta) const;

 private:
  const DrinfeldPairing& pairing_;
  RConvention convention_;
  mutable std::mutex mutex_;
  mutable std::map<Multidegree, std::shared_ptr<const DualBasisPair>> cache_;
};

/// R acting on slots (p, p + 1) of a block of V_1 (x) ... (x) V_k, as a
/// matrix from `block` to itself. Exact: every beta with a nonzero action
/// on the block has |beta| <= |total|.
QMatrix r_action(const std::vector<const QuantumModule*>& factors, const TensorBlock& block, std::size_t p,
                 const RMatrixData& data);

/// sigma_p R_{p,p+1} on a weight block of V^{(x) k}.
struct BraidOperator {
  TensorBlock block;
  std::size_t position = 0;
  QMatrix matrix;
};

BraidOperator braid_operator(const QuantumModule& v, std::size_t strands, std::size_t p, const Multidegree& total,
                             const RMatrixData& data);

/// Diagonal action Delta(E_i) (raising) or Delta(F_i) between blocks of a
/// tensor product, using the iterated coproduct.
QMatrix tensor_action(const std::vector<const QuantumModule*>& factors, const TensorBlock& from,
                      const TensorBlock& to, std::size_t i, bool raising);

struct YbeBlock {
  Multidegree total;
  Index size = 0;
  bool holds = false;
};

struct YbeReport {
  bool ok = true;
  std::vector<YbeBlock> blocks;
};

/// (sigma R)_12 (sigma R)_23 (sigma R)_12 = (sigma R)_23 (sigma R)_12 (sigma R)_23
/// on every nonzero block of V^{(x) 3} with |total| <= max_total.
YbeReport check_ybe(const QuantumModule& v, int max_total, const RMatrixData& data);

}  // namespace kmq

#endif  // KMQ_RMATRIX_HPP
