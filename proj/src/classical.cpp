#include "kmq/classical.hpp"

#include <optional>
#include <set>

namespace kmq {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::optional<Multidegree> shifted(const Multidegree& m, const Multidegree& beta, bool raising) {
  if (!raising) return m + beta;
  if (!beta.dominated_by(m)) return std::nullopt;
  return m - beta;
}

}  // namespace

RationalVector generic_weight_values(const CartanDatum& cd) {
  RationalVector v(static_cast<Index>(cd.h_dim()));
  long p = 10000;
  for (Index k = 0; k < v.size(); ++k) {
    do ++p;
    while (!is_prime(p));
    v(k) = Rational(1, p);
  }
  return v;
}

ClassicalRelations::ClassicalRelations(CartanDatum cd, int degree_cap)
    : cd_(std::move(cd)), cap_(degree_cap), lambda_(generic_weight_values(cd_)) {}

Rational ClassicalRelations::rec(const Word& x, const Word& y) const {
  if (x.empty()) return Rational(1);
  std::string key = x.key();
  key += static_cast<char>(-1);
  key += y.key();
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const auto i = static_cast<std::size_t>(x.front());
  const Word rest = x.tail();
  Rational acc;
  // mu_t(h_i) = lambda(h_i) - sum_{u > t} a_{i, z_u}
  Rational value = lambda_(static_cast<Index>(i));
  for (std::size_t t = y.length(); t-- > 0;) {
    const auto letter = static_cast<std::size_t>(y[t]);
    if (letter == i) {
      Rational sub = rec(rest, y.without(t));
      if (!sub.is_zero()) acc += value * sub;
    }
    value -= cd_.a(i, letter);
  }
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(std::move(key), acc);
  return acc;
}

Rational ClassicalRelations::form(const Word& x, const Word& y) const {
  if (!(x.degree(cd_.n()) == y.degree(cd_.n()))) return Rational();
  return rec(x, y);
}

RationalMatrix ClassicalRelations::block(const Multidegree& m) const {
  auto words = enumerate_words(m, cap_);
  const auto k = static_cast<Index>(words.size());
  RationalMatrix g(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) g(a, b) = rec(words[static_cast<std::size_t>(a)], words[static_cast<std::size_t>(b)]);
  return g;
}

const DegreeReduction<Rational>& ClassicalRelations::reduction(const Multidegree& m) const {
  {
    std::lock_guard lock(reduction_mutex_);
    auto it = reductions_.find(m);
    if (it != reductions_.end()) return *it->second;
  }
  auto built =
      std::make_shared<const DegreeReduction<Rational>>(make_reduction(m, enumerate_words(m, cap_), block(m)));
  std::lock_guard lock(reduction_mutex_);
  auto [it, inserted] = reductions_.emplace(m, std::move(built));
  return *it->second;
}

Series multiply_binomial(const Series& s, const Multidegree& beta, long e, int max_total) {
  Series out = s;
  const int step = beta.total();
  if (step == 0 || e == 0) return out;
  // (1 - t^beta)^e = sum_j c_j t^{j beta},  c_j = (-1)^j binom(e, j)
  std::vector<long> c{1};
  for (long j = 1; j * step <= max_total; ++j) c.push_back(-c.back() * (e - j + 1) / j);
  for (const auto& [m, coef] : s) {
    if (coef == 0) continue;
    Multidegree cur = m;
    for (std::size_t j = 1; j < c.size(); ++j) {
      cur = cur + beta;
      if (cur.total() > max_total) break;
      out[cur] += coef * c[j];
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<Multidegree, long> pbw_multiplicities(const std::map<Multidegree, long>& dims, std::size_t n,
                                               int max_total) {
  std::map<Multidegree, long> mult;
  Series p{{Multidegree::zero(n), 1}};
  for (int k = 1; k <= max_total; ++k) {
    const auto level = graded_multidegrees(n, k, k);
    for (const auto& m : level) {
      auto d = dims.find(m);
      auto q = p.find(m);
      mult[m] = (d == dims.end() ? 0 : d->second) - (q == p.end() ? 0 : q->second);
    }
    for (const auto& m : level)
      if (mult[m] != 0) p = multiply_binomial(p, m, -mult[m], max_total);
  }
  return mult;
}

std::map<Multidegree, long> root_multiplicities(const ClassicalRelations& rel, int max_total) {
  std::map<Multidegree, long> dims;
  for (const auto& m : graded_multidegrees(rel.datum().n(), 0, max_total)) dims.emplace(m, rel.quotient_dim(m));
  return pbw_multiplicities(dims, rel.datum().n(), max_total);
}

Series weyl_kac_alternating_sum(const CartanDatum& cd, int max_total) {
  if (!cd.is_generalized_cartan())
    throw NotApplicable("classical/root_multiplicities", "denominator identity needs a generalized Cartan matrix");
  const std::size_t n = cd.n();
  Series s{{Multidegree::zero(n), 1}};
  std::set<Multidegree> seen{Multidegree::zero(n)};
  std::vector<Multidegree> frontier{Multidegree::zero(n)};
  long sign = 1;
  while (!frontier.empty()) {
    sign = -sign;
    std::vector<Multidegree> next;
    for (const auto& c : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        // (mu + rho)(h_i) with mu = -sum_j c_j alpha_j
        long k = 1;
        for (std::size_t j = 0; j < n; ++j) k -= c[j] * cd.a(i, j).to_long();
        if (k <= 0) continue;
        Multidegree up = c + static_cast<int>(k) * Multidegree::unit(n, i);
        if (up.total() > max_total || !seen.insert(up).second) continue;
        s[up] += sign;
        next.push_back(up);
      }
    frontier = std::move(next);
  }
  return s;
}

std::map<Multidegree, long> weyl_kac_multiplicities(const CartanDatum& cd, int max_total) {
  const Series s = weyl_kac_alternating_sum(cd, max_total);
  const std::size_t n = cd.n();
  std::map<Multidegree, long> mult;
  Series p{{Multidegree::zero(n), 1}};
  for (int k = 1; k <= max_total; ++k) {
    const auto level = graded_multidegrees(n, k, k);
    for (const auto& m : level) {
      auto a = p.find(m);
      auto b = s.find(m);
      mult[m] = (a == p.end() ? 0 : a->second) - (b == s.end() ? 0 : b->second);
    }
    for (const auto& m : level)
      if (mult[m] != 0) p = multiply_binomial(p, m, mult[m], max_total);
  }
  return mult;
}

ClassicalModule classical_module(const Weight& lambda, ModuleType type, int depth, const ClassicalRelations& rel) {
  const CartanDatum& cd = rel.datum();
  if (depth > rel.degree_cap())
    throw ResourceError("classical/classical_module", "depth exceeds the degree cap");
  auto verma = build_verma<Rational>(
      ModuleKind::kClassical, cd, lambda, depth, Denominator(1),
      [&](const Multidegree& m) -> const DegreeReduction<Rational>& { return rel.reduction(m); },
      [&](std::size_t i, const Multidegree& suffix) {
        return weight_on_coroot(Weight{lambda.base, lambda.offset + suffix}, i, cd);
      });
  if (type == ModuleType::kVerma) return verma;
  return irreducible_quotient(verma);
}

RationalMatrix lie_word_operator(const ClassicalModule& mod, const Word& w, const Multidegree& m, bool raising) {
  const std::size_t n = mod.n();
  const Multidegree beta = w.degree(n);
  const auto cols = static_cast<Index>(mod.dim(m));
  auto target = shifted(m, beta, raising);
  if (!target) return zeros<Rational>(0, cols);
  if (!raising && !mod.contains(*target))
    throw ResourceError("classical/casimir_omega", "commutator leaves the truncation depth");
  const auto rows = static_cast<Index>(mod.dim(*target));
  if (rows == 0 || cols == 0) return zeros<Rational>(rows, cols);
  const auto i = static_cast<std::size_t>(w.front());
  auto gen = [&](const Multidegree& at) { return raising ? mod.e(i, at) : mod.f(i, at); };
  if (w.length() == 1) return gen(m);
  const Word y = w.tail();
  const Multidegree unit = Multidegree::unit(n, i);
  // x_i Y - Y x_i
  RationalMatrix out = zeros<Rational>(rows, cols);
  if (auto mid = shifted(m, y.degree(n), raising)) out += product(gen(*mid), lie_word_operator(mod, y, m, raising));
  if (auto mid = shifted(m, unit, raising)) out -= product(lie_word_operator(mod, y, *mid, raising), gen(m));
  return out;
}

CasimirData::CasimirData(const ClassicalRelations& rel, int max_total) : cd_(rel.datum()), max_total_(max_total) {
  const std::size_t n = cd_.n();
  Weight generic{rel.generic_weight(), Multidegree::zero(n)};
  const ClassicalModule verma = classical_module(generic, ModuleType::kVerma, max_total, rel);
  const Multidegree zero = Multidegree::zero(n);
  for (const auto& beta : graded_multidegrees(n, 1, max_total)) {
    auto words = enumerate_words(beta, rel.degree_cap());
    const auto k = static_cast<Index>(words.size());
    const auto dim = static_cast<Index>(verma.dim(beta));
    RationalMatrix e_rows(k, dim), f_cols(dim, k);
    for (Index a = 0; a < k; ++a) {
      e_rows.row(a) = lie_word_operator(verma, words[static_cast<std::size_t>(a)], beta, true).row(0);
      f_cols.col(a) = lie_word_operator(verma, words[static_cast<std::size_t>(a)], zero, false).col(0);
    }
    // (e_[x], f_[y]) = <coefficient of v in e_[x] f_[y] v> / (lambda, beta)
    Rational lb;
    for (std::size_t i = 0; i < n; ++i) lb += Rational(beta[i]) * root_weight_form(i, generic, cd_);
    RationalMatrix p = product(e_rows, f_cols) * (Rational(1) / lb);
    auto cols = row_echelon(p).pivots;
    if (cols.empty()) continue;
    auto rows = row_echelon(RationalMatrix(p.transpose())).pivots;
    const auto r = static_cast<Index>(cols.size());
    RationalMatrix sub(r, r);
    for (Index a = 0; a < r; ++a)
      for (Index b = 0; b < r; ++b) sub(a, b) = p(rows[a], cols[b]);
    LieDualBasis lb_out;
    lb_out.degree = beta;
    for (Index a : rows) lb_out.e_words.push_back(words[static_cast<std::size_t>(a)]);
    for (Index b : cols) lb_out.f_words.push_back(words[static_cast<std::size_t>(b)]);
    lb_out.dual = inverse(sub, "classical/casimir_omega");
    bases_.push_back(std::move(lb_out));
  }
}

OmegaBlock casimir_omega(const std::vector<const ClassicalModule*>& factors, const Multidegree& total,
                         std::size_t a, std::size_t b, const CasimirData& data) {
  if (total.total() > data.max_total())
    throw ResourceError("classical/casimir_omega", "dual bases computed only to total degree " +
                                                       std::to_string(data.max_total()));
  OmegaBlock out;
  out.block = tensor_block(factors, total);
  const CartanDatum& cd = data.datum();
  std::vector<ProductTerm<Rational>> terms;
  ProductTerm<Rational> cartan;
  cartan.scalar = [&](const std::vector<Multidegree>& t) {
    return weight_form(Weight{factors[a]->highest.base, t[a]}, Weight{factors[b]->highest.base, t[b]}, cd);
  };
  terms.push_back(cartan);
  for (const auto& basis : data.bases()) {
    if (basis.degree.total() > total.total()) continue;
    for (std::size_t x = 0; x < basis.e_words.size(); ++x)
      for (std::size_t y = 0; y < basis.f_words.size(); ++y) {
        const Rational c = basis.dual(static_cast<Index>(y), static_cast<Index>(x));
        if (c.is_zero()) continue;
        const Word ew = basis.e_words[x], fw = basis.f_words[y];
        for (int order = 0; order < 2; ++order) {
          const std::size_t es = order == 0 ? a : b, fs = order == 0 ? b : a;
          ProductTerm<Rational> t;
          t.actions.push_back({es, shift_of(basis.degree, -1), [&, ew, es](const Multidegree& m) {
                                 return lie_word_operator(*factors[es], ew, m, true);
                               }});
          t.actions.push_back({fs, shift_of(basis.degree, 1), [&, fw, fs](const Multidegree& m) {
                                 return lie_word_operator(*factors[fs], fw, m, false);
                               }});
          t.scalar = [c](const std::vector<Multidegree>&) { return c; };
          terms.push_back(std::move(t));
        }
      }
  }
  out.matrix = assemble(out.block, out.block, terms);
  return out;
}

RationalMatrix tensor_generator(const std::vector<const ClassicalModule*>& factors, const TensorBlock& from,
                                const TensorBlock& to, std::size_t i, bool raising) {
  const Multidegree unit = Multidegree::unit(factors.front()->n(), i);
  std::vector<ProductTerm<Rational>> terms;
  for (std::size_t p = 0; p < factors.size(); ++p) {
    ProductTerm<Rational> t;
    t.actions.push_back({p, shift_of(unit, raising ? -1 : 1), [&, p](const Multidegree& m) {
                           return raising ? factors[p]->e(i, m) : factors[p]->f(i, m);
                         }});
    terms.push_back(std::move(t));
  }
  return assemble(from, to, terms);
}

}  // namespace kmq
