#include "kmq/qpairing.hpp"

namespace kmq {

DrinfeldPairing::DrinfeldPairing(CartanDatum cd, Denominator denom, int degree_cap, ExponentSign sign)
    : cd_(std::move(cd)), denom_(denom), cap_(degree_cap), sign_(sign) {
  const std::size_t n = cd_.n();
  scaled_root_form_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational e = cd_.root_form(i, j) * Rational(denom_.value());
      if (!e.is_integer())
        throw DenominatorError("qpairing/pair_words", "session denominator does not clear (alpha_i, alpha_j)");
      scaled_root_form_[i * n + j] = e.to_long();
    }
}

void DrinfeldPairing::check_cap(const Multidegree& m, const char* origin) const {
  if (m.total() > cap_)
    throw ResourceError(origin, "total degree " + std::to_string(m.total()) + " exceeds cap " + std::to_string(cap_));
}

QScalar DrinfeldPairing::normalized_rec(const Word& x, const Word& y) const {
  if (x.empty()) return QScalar(1);
  std::string key;
  key.reserve(x.length() + y.length() + 1);
  key += x.key();
  key += static_cast<char>(-1);
  key += y.key();
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const std::size_t n = cd_.n();
  const auto i = static_cast<std::size_t>(x.front());
  const Word rest = x.tail();
  const long s = static_cast<long>(sign_);
  QScalar acc;
  // exponent at position t: s * D * (alpha_i, sum over letters before t)
  long prefix = 0;
  for (std::size_t t = 0; t < y.length(); ++t) {
    const auto letter = static_cast<std::size_t>(y[t]);
    if (letter == i) {
      QScalar sub = normalized_rec(rest, y.without(t));
      if (!sub.is_zero()) acc += QScalar::v_power(s * prefix) * sub;
    }
    prefix += scaled_root_form_[i * n + letter];
  }
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(std::move(key), acc);
  return acc;
}

QScalar DrinfeldPairing::normalized_pair(const Word& x, const Word& y) const {
  const Multidegree dx = x.degree(cd_.n());
  if (!(dx == y.degree(cd_.n()))) return QScalar();
  check_cap(dx, "qpairing/pair_words");
  return normalized_rec(x, y);
}

QScalar DrinfeldPairing::pair_words(const Word& x, const Word& y) const {
  QScalar value = normalized_pair(x, y);
  if (value.is_zero()) return value;
  QScalar denom(1);
  const QScalar step = q_minus_q_inverse(denom_);
  for (std::size_t k = 0; k < x.length(); ++k) denom *= step;
  return value / denom;
}

QScalar DrinfeldPairing::pair(const FreeElement& x, const Word& y) const {
  QScalar acc;
  for (const auto& [w, c] : x.terms()) acc += c * pair_words(w, y);
  return acc;
}

QMatrix DrinfeldPairing::normalized_gram(const Multidegree& m) const {
  check_cap(m, "qpairing/gram_block");
  auto words = enumerate_words(m, cap_);
  const auto k = static_cast<Index>(words.size());
  QMatrix g(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = a; b < k; ++b) {
      g(a, b) = normalized_rec(words[static_cast<std::size_t>(a)], words[static_cast<std::size_t>(b)]);
      if (b != a) g(b, a) = normalized_rec(words[static_cast<std::size_t>(b)], words[static_cast<std::size_t>(a)]);
    }
  return g;
}

GramBlock DrinfeldPairing::gram_block(const Multidegree& m) const {
  GramBlock block{m, enumerate_words(m, cap_), normalized_gram(m)};
  QScalar scale(1);
  const QScalar step = q_minus_q_inverse(denom_);
  for (int k = 0; k < m.total(); ++k) scale *= step;
  if (!scale.is_one()) {
    const QScalar inv = QScalar(1) / scale;
    for (Index a = 0; a < block.matrix.rows(); ++a)
      for (Index b = 0; b < block.matrix.cols(); ++b) block.matrix(a, b) *= inv;
  }
  return block;
}

KernelBasis DrinfeldPairing::kernel_block(const Multidegree& m) const {
  auto words = enumerate_words(m, cap_);
  QMatrix ns = null_space(normalized_gram(m));
  KernelBasis out{m, {}, static_cast<long>(words.size()) - static_cast<long>(ns.cols())};
  for (Index c = 0; c < ns.cols(); ++c) {
    FreeElement v(m);
    for (Index r = 0; r < ns.rows(); ++r) v.add_term(words[static_cast<std::size_t>(r)], ns(r, c));
    out.vectors.push_back(std::move(v));
  }
  return out;
}

const DegreeReduction<QScalar>& DrinfeldPairing::reduction(const Multidegree& m) const {
  {
    std::lock_guard lock(reduction_mutex_);
    auto it = reductions_.find(m);
    if (it != reductions_.end()) return *it->second;
  }
  auto built = std::make_shared<const DegreeReduction<QScalar>>(
      make_reduction(m, enumerate_words(m, cap_), normalized_gram(m)));
  std::lock_guard lock(reduction_mutex_);
  auto [it, inserted] = reductions_.emplace(m, std::move(built));
  return *it->second;
}

FreeElement quantum_serre_element(std::size_t i, std::size_t j, const CartanDatum& cd, Denominator denom) {
  if (i == j || i >= cd.n() || j >= cd.n())
    throw NotApplicable("qpairing/quantum_serre_element", "indices must be distinct and in range");
  if (!cd.is_generalized_cartan())
    throw NotApplicable("qpairing/quantum_serre_element", "matrix is not a generalized Cartan matrix");
  const long top = 1 - cd.a(i, j).to_long();
  const Multidegree deg = static_cast<int>(top) * Multidegree::unit(cd.n(), i) + Multidegree::unit(cd.n(), j);
  FreeElement out(deg);
  for (long m = 0; m <= top; ++m) {
    QScalar c = QScalar(m % 2 == 0 ? 1 : -1) /
                (q_factorial(m, cd.d(i), denom) * q_factorial(top - m, cd.d(i), denom));
    std::vector<int> letters(static_cast<std::size_t>(top - m), static_cast<int>(i));
    letters.push_back(static_cast<int>(j));
    letters.insert(letters.end(), static_cast<std::size_t>(m), static_cast<int>(i));
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

SerreReport verify_serre_in_kernel(std::size_t i, std::size_t j, const DrinfeldPairing& pairing) {
  SerreReport report;
  report.i = i;
  report.j = j;
  report.element = quantum_serre_element(i, j, pairing.datum(), pairing.denominator());
  report.in_kernel = true;
  for (const Word& y : enumerate_words(report.element.degree(), pairing.degree_cap())) {
    QScalar acc;
    for (const auto& [w, c] : report.element.terms()) acc += c * pairing.normalized_pair(w, y);
    if (!acc.is_zero()) {
      report.in_kernel = false;
      break;
    }
  }
  return report;
}

std::map<Multidegree, long> quotient_dims(const DrinfeldPairing& pairing, int max_total_degree) {
  std::map<Multidegree, long> out;
  for (const auto& m : graded_multidegrees(pairing.datum().n(), 0, max_total_degree))
    out.emplace(m, static_cast<long>(pairing.reduction(m).dim()));
  return out;
}

}  // namespace kmq
