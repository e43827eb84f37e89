#ifndef KMQ_QMODULES_HPP
#define KMQ_QMODULES_HPP

#include <optional>
#include <string>

#include "kmq/classical.hpp"
#include "kmq/qpairing.hpp"
#include "kmq/weight_module.hpp"

namespace kmq {

using QuantumModule = WeightModule<QScalar>;

/// Verma module of U_q(g): F-words modulo the mirrored kernel of B,
///   E_i F_w v = sum_{t : w_t = i} [mu_t(h_i)]_{q_i} F_{w without t} v,
///   [E_i, F_j] = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1}),  K_i = q^{d_i h_i}.
/// Throws DenominatorError when the pairing's D cannot express (alpha_i, mu).
QuantumModule verma(const Weight& lambda, int depth, const DrinfeldPairing& pairing);

/// Contravariant form per block (antiautomorphism E_i <-> F_i, K_i fixed).
std::map<Multidegree, QMatrix> contravariant_form(const QuantumModule& verma_module);

/// L(lambda) truncated at depth.
QuantumModule irreducible(const Weight& lambda, int depth, const DrinfeldPairing& pairing);

/// q^{(alpha_i, mu)}, the eigenvalue of K_i on offset m.
QScalar k_eigenvalue(const QuantumModule& mod, std::size_t i, const Multidegree& m);

struct CharacterComparison {
  bool equal = true;
  std::optional<Multidegree> first_discrepancy;
  CharacterTable quantum;
  CharacterTable classical;
};

/// Entrywise comparison up to the common depth.
CharacterComparison compare_characters(const QuantumModule& q, const ClassicalModule& c);

struct RelationCheck {
  bool ok = true;
  /// First failing identity, e.g. "[E_1,F_2] at (1,0)".
  std::string failure;
  long checked = 0;
};

/// [E_i, F_j] = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1}) and
/// K_i E_j K_i^{-1} = q^{(alpha_i, alpha_j)} E_j, K_i F_j K_i^{-1} = q^{-(alpha_i, alpha_j)} F_j
/// on every block within the depth.
RelationCheck check_module_relations(const QuantumModule& mod);

}  // namespace kmq

#endif  // KMQ_QMODULES_HPP
