#include "kmq/qmodules.hpp"

namespace kmq {

QuantumModule verma(const Weight& lambda, int depth, const DrinfeldPairing& pairing) {
  const CartanDatum& cd = pairing.datum();
  const Denominator D = pairing.denominator();
  if (depth > pairing.degree_cap()) throw ResourceError("qmodules/verma", "depth exceeds the degree cap");
  for (std::size_t i = 0; i < cd.n(); ++i)
    if (!(root_weight_form(i, lambda, cd) * Rational(D.value())).is_integer())
      throw DenominatorError("qmodules/verma", "session denominator does not clear (alpha_i, lambda)");
  return build_verma<QScalar>(
      ModuleKind::kQuantum, cd, lambda, depth, D,
      [&](const Multidegree& m) -> const DegreeReduction<QScalar>& { return pairing.reduction(m); },
      [&](std::size_t i, const Multidegree& suffix) {
        return q_bracket(weight_on_coroot(Weight{lambda.base, lambda.offset + suffix}, i, cd), cd.d(i), D);
      });
}

std::map<Multidegree, QMatrix> contravariant_form(const QuantumModule& verma_module) {
  return contravariant_blocks(verma_module);
}

QuantumModule irreducible(const Weight& lambda, int depth, const DrinfeldPairing& pairing) {
  return irreducible_quotient(verma(lambda, depth, pairing));
}

QScalar k_eigenvalue(const QuantumModule& mod, std::size_t i, const Multidegree& m) {
  return q_power(root_weight_form(i, mod.weight(m), mod.datum), mod.denominator);
}

CharacterComparison compare_characters(const QuantumModule& q, const ClassicalModule& c) {
  CharacterComparison out;
  const int depth = std::min(q.depth, c.depth);
  for (const auto& m : graded_multidegrees(q.n(), 0, depth)) {
    const auto a = static_cast<long>(q.dim(m));
    const auto b = static_cast<long>(c.dim(m));
    out.quantum.emplace(m, a);
    out.classical.emplace(m, b);
    if (a != b && out.equal) {
      out.equal = false;
      out.first_discrepancy = m;
    }
  }
  return out;
}

RelationCheck check_module_relations(const QuantumModule& mod) {
  RelationCheck out;
  const std::size_t n = mod.n();
  const CartanDatum& cd = mod.datum;
  const Denominator D = mod.denominator;
  auto fail = [&](const std::string& what) {
    if (out.ok) {
      out.ok = false;
      out.failure = what;
    }
  };
  auto name = [](const char* x, std::size_t i, std::size_t j, const Multidegree& m) {
    return std::string("[") + x + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] at " + m.to_string();
  };
  for (const auto& m : graded_multidegrees(n, 0, mod.depth)) {
    const auto d = static_cast<Index>(mod.dim(m));
    if (d == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const QScalar ki = k_eigenvalue(mod, i, m);
      for (std::size_t j = 0; j < n; ++j) {
        const Multidegree uj = Multidegree::unit(n, j);
        // K-conjugation of E_j and F_j
        if (m[j] > 0) {
          const Multidegree lo = m - uj;
          QMatrix lhs = mod.e(j, m) * (k_eigenvalue(mod, i, lo) / ki);
          QMatrix rhs = mod.e(j, m) * q_power(cd.root_form(i, j), D);
          ++out.checked;
          if (!(lhs == rhs)) fail(name("K", i, j, m) + " (E)");
        }
        if (m.total() < mod.depth) {
          QMatrix lhs = mod.f(j, m) * (k_eigenvalue(mod, i, m + uj) / ki);
          QMatrix rhs = mod.f(j, m) * q_power(-cd.root_form(i, j), D);
          ++out.checked;
          if (!(lhs == rhs)) fail(name("K", i, j, m) + " (F)");
        }
        // [E_i, F_j] from m stays inside the depth only when |m| < depth
        if (m.total() >= mod.depth) continue;
        const Multidegree up = m + uj;
        QMatrix ef = product(mod.e(i, up), mod.f(j, m));
        QMatrix fe = m[i] > 0 ? product(mod.f(j, m - Multidegree::unit(n, i)), mod.e(i, m))
                              : zeros<QScalar>(ef.rows(), d);
        QMatrix rhs = zeros<QScalar>(ef.rows(), d);
        if (i == j) {
          const QScalar qi = q_power(cd.d(i), D);
          rhs = identity<QScalar>(d) * ((ki - QScalar(1) / ki) / (qi - QScalar(1) / qi));
        }
        ++out.checked;
        if (!(QMatrix(ef - fe) == rhs)) fail(name("E", i, j, m));
      }
    }
  }
  return out;
}

}  // namespace kmq
