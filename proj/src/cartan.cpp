#include "kmq/cartan.hpp"

#include <deque>
#include <optional>
#include <sstream>
#include <string>

#include "kmq/error.hpp"

namespace kmq {

namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Rational CartanDatum::root_form(const Multidegree& m, const Multidegree& k) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (m[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (k[j] != 0) acc += Rational(m[i] * k[j]) * root_form(i, j);
  }
  return acc;
}

bool CartanDatum::is_generalized_cartan() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& x = a(i, j);
      if (i == j && !(x == Rational(2))) return false;
      if (i != j && (!x.is_integer() || x.sign() > 0)) return false;
    }
  return true;
}

std::vector<Rational> symmetrize(const RationalMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw NotSymmetrizable("cartan/symmetrize", "matrix must be square and nonempty");
  const auto n = static_cast<std::size_t>(a.rows());
  auto at = [&](std::size_t i, std::size_t j) -> const Rational& {
    return a(static_cast<Index>(i), static_cast<Index>(j));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && at(i, j).is_zero() != at(j, i).is_zero())
        throw NotSymmetrizable("cartan/symmetrize",
                               "a_ij = 0 but a_ji != 0 at pair " + pair_name(std::min(i, j), std::max(i, j)) +
                                   " forces a zero symmetrizer");
  std::vector<std::optional<Rational>> d(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root]) continue;
    d[root] = Rational(1);
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || at(i, j).is_zero()) continue;
        // d_i a_ij = d_j a_ji
        Rational dj = *d[i] * at(i, j) / at(j, i);
        if (!d[j]) {
          d[j] = dj;
          queue.push_back(j);
        } else if (!(*d[j] == dj)) {
          throw NotSymmetrizable("cartan/symmetrize", "inconsistent cycle through pair " +
                                                          pair_name(std::min(i, j), std::max(i, j)));
        }
      }
    }
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto& x : d) out.push_back(*x);
  return out;
}

CartanDatum build_realization(const RationalMatrix& a, const std::vector<Rational>& d) {
  const auto n = static_cast<std::size_t>(a.rows());
  if (a.rows() != a.cols() || n == 0) throw NotSymmetrizable("cartan/build_realization", "matrix must be square");
  if (d.size() != n) throw Error("cartan/build_realization", "symmetrizer length differs from matrix size");
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].is_zero()) throw NotSymmetrizable("cartan/build_realization", "zero symmetrizer entry");
    for (std::size_t j = 0; j < n; ++j)
      if (!(d[i] * a(static_cast<Index>(i), static_cast<Index>(j)) ==
            d[j] * a(static_cast<Index>(j), static_cast<Index>(i))))
        throw NotSymmetrizable("cartan/build_realization",
                               "d_i a_ij != d_j a_ji at pair " + pair_name(std::min(i, j), std::max(i, j)));
  }

  // alpha_i restricted to span{h_j}: alpha_i(h_j) = a_ji, i.e. row i of A^T.
  RationalMatrix base_roots = a.transpose();
  std::vector<std::size_t> complement;
  {
    RationalMatrix chosen(0, a.cols());
    Index r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      RationalMatrix trial(chosen.rows() + 1, a.cols());
      trial.topRows(chosen.rows()) = chosen;
      trial.row(chosen.rows()) = base_roots.row(static_cast<Index>(i));
      Index tr = rank(trial);
      if (tr > r) {
        chosen = trial;
        r = tr;
      } else {
        complement.push_back(i);
      }
    }
  }
  const std::size_t k = complement.size();
  const auto h = static_cast<Index>(n + k);

  CartanDatum cd;
  cd.n_ = n;
  cd.a_ = a;
  cd.d_ = d;
  cd.roots_ = zeros<Rational>(static_cast<Index>(n), h);
  cd.coroots_ = zeros<Rational>(static_cast<Index>(n), h);
  for (std::size_t i = 0; i < n; ++i) {
    cd.roots_.row(static_cast<Index>(i)).head(static_cast<Index>(n)) = base_roots.row(static_cast<Index>(i));
    cd.coroots_(static_cast<Index>(i), static_cast<Index>(i)) = 1;
  }
  for (std::size_t l = 0; l < k; ++l) cd.roots_(static_cast<Index>(complement[l]), static_cast<Index>(n + l)) = 1;

  // (b, h_i) = d_i^{-1} alpha_i(b) for every basis vector b; the extension
  // block pairs to zero.
  cd.form_ = zeros<Rational>(h, h);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational inv = Rational(1) / d[i];
    for (Index b = 0; b < h; ++b) {
      cd.form_(b, static_cast<Index>(i)) = inv * cd.roots_(static_cast<Index>(i), b);
      cd.form_(static_cast<Index>(i), b) = cd.form_(b, static_cast<Index>(i));
    }
  }
  auto inv = try_inverse(cd.form_);
  if (!inv) throw InternalError("cartan/build_realization", "invariant form on h is degenerate");
  cd.dual_form_ = *std::move(inv);
  return cd;
}

CartanDatum build_realization(const RationalMatrix& a) { return build_realization(a, symmetrize(a)); }

Weight highest_weight(const CartanDatum& cd, const std::vector<Rational>& values) {
  const std::size_t h = cd.h_dim();
  if (values.size() != cd.n() && values.size() != h)
    throw Error("cartan/highest_weight", "weight has " + std::to_string(values.size()) +
                                             " coordinates; expected " + std::to_string(cd.n()) +
                                             " or " + std::to_string(h));
  Weight w{zeros<Rational>(static_cast<Index>(h), 1), Multidegree::zero(cd.n())};
  for (std::size_t j = 0; j < values.size(); ++j) w.base(static_cast<Index>(j)) = values[j];
  return w;
}

RationalVector weight_vector(const Weight& w, const CartanDatum& cd) {
  RationalVector v = w.base;
  for (std::size_t i = 0; i < cd.n(); ++i) {
    if (w.offset[i] == 0) continue;
    const Rational m(w.offset[i]);
    for (Index b = 0; b < v.size(); ++b) v(b) -= m * cd.roots()(static_cast<Index>(i), b);
  }
  return v;
}

Rational weight_form(const Weight& x, const Weight& y, const CartanDatum& cd) {
  RationalVector u = weight_vector(x, cd);
  RationalVector v = weight_vector(y, cd);
  Rational acc = 0;
  const auto& g = cd.dual_form();
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i).is_zero()) continue;
    for (Index j = 0; j < v.size(); ++j)
      if (!v(j).is_zero() && !g(i, j).is_zero()) acc += u(i) * g(i, j) * v(j);
  }
  return acc;
}

Rational weight_on_coroot(const Weight& w, std::size_t i, const CartanDatum& cd) {
  RationalVector v = weight_vector(w, cd);
  Rational acc = 0;
  for (Index b = 0; b < v.size(); ++b) acc += v(b) * cd.coroots()(static_cast<Index>(i), b);
  return acc;
}

Rational root_weight_form(std::size_t i, const Weight& w, const CartanDatum& cd) {
  return cd.d(i) * weight_on_coroot(w, i, cd);
}

RationalVector gamma(std::size_t i, const CartanDatum& cd) {
  if (i >= cd.n()) throw Error("cartan/gamma", "index out of range");
  RationalVector v = cd.coroots().row(static_cast<Index>(i)).transpose();
  for (Index b = 0; b < v.size(); ++b) v(b) *= cd.d(i);
  return v;
}

Denominator session_denominator(const CartanDatum& cd, const std::vector<Weight>& weights) {
  mpz_class D = 1;
  auto absorb = [&](const Rational& x) { D = lcm(D, x.denominator()); };
  for (std::size_t i = 0; i < cd.n(); ++i) {
    absorb(cd.d(i));
    for (std::size_t j = 0; j < cd.n(); ++j) absorb(cd.root_form(i, j));
  }
  for (std::size_t a = 0; a < weights.size(); ++a) {
    for (std::size_t i = 0; i < cd.n(); ++i) absorb(root_weight_form(i, weights[a], cd));
    for (std::size_t b = a; b < weights.size(); ++b) absorb(weight_form(weights[a], weights[b], cd));
  }
  if (!D.fits_slong_p()) throw ResourceError("scalars/denominator", "session denominator too large");
  return Denominator(D.get_si());
}

RationalMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::stringstream rs(row);
    std::string tok;
    std::vector<Rational> r;
    while (rs >> tok) r.push_back(Rational::parse(tok));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw Error("cartan/parse_matrix", "empty matrix");
  const std::size_t n = rows.size();
  RationalMatrix m(static_cast<Index>(n), static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != rows[0].size()) throw Error("cartan/parse_matrix", "ragged matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return m;
}

}  // namespace kmq
