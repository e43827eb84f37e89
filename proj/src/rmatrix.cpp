#include "kmq/rmatrix.hpp"

namespace kmq {

DualBasisPair dual_bases(const Multidegree& beta, const DrinfeldPairing& pairing) {
  const auto& red = pairing.reduction(beta);
  DualBasisPair out;
  out.degree = beta;
  for (std::size_t a = 0; a < red.dim(); ++a) out.u_words.push_back(red.basis_word(a));
  const auto k = static_cast<Index>(out.u_words.size());
  out.gram = QMatrix(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b)
      out.gram(a, b) = pairing.pair_words(out.u_words[static_cast<std::size_t>(a)], out.u_words[static_cast<std::size_t>(b)]);
  out.v_coeffs = inverse(out.gram, "rmatrix/dual_bases");
  return out;
}

bool verify_duality(const DualBasisPair& pair, const DrinfeldPairing& pairing) {
  const auto k = static_cast<Index>(pair.u_words.size());
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) {
      QScalar s;
      for (Index c = 0; c < k; ++c)
        s += pair.v_coeffs(c, b) *
             pairing.pair_words(pair.u_words[static_cast<std::size_t>(a)], pair.u_words[static_cast<std::size_t>(c)]);
      if (!(s == QScalar(Rational(a == b ? 1 : 0)))) return false;
    }
  return true;
}

RMatrixData::RMatrixData(const DrinfeldPairing& pairing, RConvention convention)
    : pairing_(pairing), convention_(convention) {}

const DualBasisPair& RMatrixData::dual(const Multidegree& beta) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(beta);
    if (it != cache_.end()) return *it->second;
  }
  auto built = std::make_shared<const DualBasisPair>(dual_bases(beta, pairing_));
  std::lock_guard lock(mutex_);
  return *cache_.emplace(beta, std::move(built)).first->second;
}

namespace {

QMatrix e_word_action(const QuantumModule& mod, const Word& w, const Multidegree& m) {
  return word_operator(mod, w, m, true);
}

QMatrix v_action(const QuantumModule& mod, const DualBasisPair& pair, Index a, const Multidegree& m) {
  const Multidegree up = m + pair.degree;
  QMatrix acc = zeros<QScalar>(static_cast<Index>(mod.dim(up)), static_cast<Index>(mod.dim(m)));
  for (Index c = 0; c < static_cast<Index>(pair.u_words.size()); ++c) {
    const QScalar& k = pair.v_coeffs(c, a);
    if (k.is_zero()) continue;
    acc += word_operator(mod, pair.u_words[static_cast<std::size_t>(c)], m, false) * k;
  }
  return acc;
}

}  // namespace

QMatrix r_action(const std::vector<const QuantumModule*>& factors, const TensorBlock& block, std::size_t p,
                 const RMatrixData& data) {
  if (p + 1 >= factors.size()) throw Error("rmatrix/truncated_R", "slot pair out of range");
  const RConvention conv = data.convention();
  const QuantumModule& left = *factors[p];
  const QuantumModule& right = *factors[p + 1];
  const CartanDatum& cd = left.datum;
  const Denominator D = data.pairing().denominator();
  const std::size_t n = cd.n();
  if (block.total.total() > data.pairing().degree_cap())
    throw ResourceError("rmatrix/truncated_R", "block " + block.total.to_string() + " exceeds the degree cap");

  std::vector<ProductTerm<QScalar>> terms;
  for (const auto& beta : graded_multidegrees(n, 0, block.total.total())) {
    if (!beta.dominated_by(block.total)) continue;
    const DualBasisPair& pair = data.dual(beta);
    for (Index a = 0; a < static_cast<Index>(pair.u_words.size()); ++a) {
      const Word& u = pair.u_words[static_cast<std::size_t>(a)];
      SlotAction<QScalar> lower{conv.flipped ? p + 1 : p, shift_of(beta, 1), nullptr};
      SlotAction<QScalar> raise{conv.flipped ? p : p + 1, shift_of(beta, -1), nullptr};
      const QuantumModule& lm = conv.flipped ? right : left;
      const QuantumModule& rm = conv.flipped ? left : right;
      lower.matrix = [&lm, &pair, a](const Multidegree& m) { return v_action(lm, pair, a, m); };
      raise.matrix = [&rm, u](const Multidegree& m) { return e_word_action(rm, u, m); };
      ProductTerm<QScalar> term;
      term.actions = {lower, raise};
      term.scalar = [&, beta, conv](const std::vector<Multidegree>& src) {
        Multidegree ml = src[p], mr = src[p + 1];
        if (conv.cartan_on_target) {
          if (conv.flipped) {
            ml = ml - beta;
            mr = mr + beta;
          } else {
            ml = ml + beta;
            mr = mr - beta;
          }
        }
        return q_power(weight_form(left.weight(ml), right.weight(mr), cd), D);
      };
      terms.push_back(std::move(term));
    }
  }
  return assemble(block, block, terms);
}

BraidOperator braid_operator(const QuantumModule& v, std::size_t strands, std::size_t p, const Multidegree& total,
                             const RMatrixData& data) {
  if (strands < 2 || p + 1 >= strands) throw Error("rmatrix/braid_operator", "generator index out of range");
  std::vector<const QuantumModule*> factors(strands, &v);
  BraidOperator out;
  out.block = tensor_block(factors, total);
  out.position = p;
  out.matrix = product(slot_swap<QScalar>(out.block, p), r_action(factors, out.block, p, data));
  return out;
}

QMatrix tensor_action(const std::vector<const QuantumModule*>& factors, const TensorBlock& from,
                      const TensorBlock& to, std::size_t i, bool raising) {
  const std::size_t k = factors.size();
  const std::size_t n = factors[0]->n();
  const Multidegree ui = Multidegree::unit(n, i);
  std::vector<ProductTerm<QScalar>> terms;
  for (std::size_t p = 0; p < k; ++p) {
    ProductTerm<QScalar> term;
    const QuantumModule* mod = factors[p];
    if (raising) {
      term.actions = {{p, shift_of(ui, -1), [mod, i](const Multidegree& m) { return mod->e(i, m); }}};
      term.scalar = [&factors, p, k, i](const std::vector<Multidegree>& src) {
        QScalar c(Rational(1));
        for (std::size_t s = p + 1; s < k; ++s) c *= k_eigenvalue(*factors[s], i, src[s]);
        return c;
      };
    } else {
      term.actions = {{p, shift_of(ui, 1), [mod, i](const Multidegree& m) { return mod->f(i, m); }}};
      term.scalar = [&factors, p, i](const std::vector<Multidegree>& src) {
        QScalar c(Rational(1));
        for (std::size_t s = 0; s < p; ++s) c /= k_eigenvalue(*factors[s], i, src[s]);
        return c;
      };
    }
    terms.push_back(std::move(term));
  }
  return assemble(from, to, terms);
}

YbeReport check_ybe(const QuantumModule& v, int max_total, const RMatrixData& data) {
  YbeReport report;
  std::vector<const QuantumModule*> factors(3, &v);
  for (const auto& total : graded_multidegrees(v.n(), 0, max_total)) {
    TensorBlock block = tensor_block(factors, total);
    if (block.size == 0) continue;
    const QMatrix b1 = braid_operator(v, 3, 0, total, data).matrix;
    const QMatrix b2 = braid_operator(v, 3, 1, total, data).matrix;
    YbeBlock entry{total, block.size, product(b1, product(b2, b1)) == product(b2, product(b1, b2))};
    report.ok = report.ok && entry.holds;
    report.blocks.push_back(entry);
  }
  return report;
}

}  // namespace kmq
