#ifndef KMQ_WEIGHT_MODULE_HPP
#define KMQ_WEIGHT_MODULE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kmq/cartan.hpp"
#include "kmq/error.hpp"
#include "kmq/freealg.hpp"
#include "kmq/matrix.hpp"
#include "kmq/reduction.hpp"

namespace kmq {

enum class ModuleKind { kQuantum, kClassical };
enum class ModuleType { kVerma, kIrreducible };

/// One weight space lambda - sum m_i alpha_i with the generator actions
/// leaving it.
template <typename Scalar>
struct WeightSpace {
  /// F-words labelling the basis vectors F_w v.
  std::vector<Word> words;
  /// e[i]: dim(m - 1_i) x dim(m); 0 rows when m_i = 0.
  std::vector<Matrix<Scalar>> e;
  /// f[i]: dim(m + 1_i) x dim(m); empty (0 x 0) when m + 1_i is beyond the depth.
  std::vector<Matrix<Scalar>> f;
};

/// Highest-weight module truncated at total offset `depth`, with E_i and F_i
/// stored per weight block. Weight spaces of dimension zero are not stored.
template <typename Scalar>
struct WeightModule {
  ModuleKind kind = ModuleKind::kClassical;
  ModuleType type = ModuleType::kVerma;
  CartanDatum datum;
  Weight highest;
  int depth = 0;
  Denominator denominator;
  std::map<Multidegree, WeightSpace<Scalar>> spaces;

  std::size_t n() const { return datum.n(); }

  std::size_t dim(const Multidegree& m) const {
    auto it = spaces.find(m);
    return it == spaces.end() ? 0 : it->second.words.size();
  }
  std::size_t total_dim() const {
    std::size_t s = 0;
    for (const auto& [m, sp] : spaces) s += sp.words.size();
    return s;
  }
  bool contains(const Multidegree& m) const { return m.total() <= depth; }
  Weight weight(const Multidegree& m) const { return Weight{highest.base, m}; }

  /// E_i from offset m; dim(m - 1_i) x dim(m).
  Matrix<Scalar> e(std::size_t i, const Multidegree& m) const {
    auto it = spaces.find(m);
    if (it == spaces.end()) {
      const bool down = m[i] > 0;
      return zeros<Scalar>(down ? static_cast<Index>(dim(m - Multidegree::unit(n(), i))) : 0, 0);
    }
    return it->second.e[i];
  }
  /// F_i from offset m; dim(m + 1_i) x dim(m). Throws ResourceError past the depth.
  Matrix<Scalar> f(std::size_t i, const Multidegree& m) const {
    if (m.total() + 1 > depth)
      throw ResourceError("qmodules/action", "F_" + std::to_string(i + 1) + " from offset " + m.to_string() +
                                                 " leaves depth " + std::to_string(depth));
    auto it = spaces.find(m);
    if (it == spaces.end()) return zeros<Scalar>(static_cast<Index>(dim(m + Multidegree::unit(n(), i))), 0);
    return it->second.f[i];
  }
};

/// Verma module from per-degree reductions of the free F-algebra and the
/// scalar c(i, mu) by which [E_i, F_i] acts on weight mu (given as an
/// offset from lambda).
///
///   E_i F_{w_1} ... F_{w_k} v = sum_{t : w_t = i} c(i, mu_t) F_{w without t} v,
///   mu_t = lambda - sum_{u > t} alpha_{w_u}.
template <typename Scalar, typename ReductionFn, typename CoefFn>
WeightModule<Scalar> build_verma(ModuleKind kind, const CartanDatum& cd, const Weight& lambda, int depth,
                                 Denominator denom, ReductionFn&& reduction, CoefFn&& coef) {
  WeightModule<Scalar> mod;
  mod.kind = kind;
  mod.type = ModuleType::kVerma;
  mod.datum = cd;
  mod.highest = lambda;
  mod.depth = depth;
  mod.denominator = denom;
  const std::size_t n = cd.n();
  const auto degrees = graded_multidegrees(n, 0, depth);

  for (const auto& m : degrees) {
    const DegreeReduction<Scalar>& red = reduction(m);
    if (red.dim() == 0) continue;
    WeightSpace<Scalar> sp;
    for (std::size_t a = 0; a < red.dim(); ++a) sp.words.push_back(red.basis_word(a));
    mod.spaces.emplace(m, std::move(sp));
  }
  for (auto& [m, sp] : mod.spaces) {
    const auto cols = static_cast<Index>(sp.words.size());
    sp.e.resize(n);
    sp.f.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (m.total() < depth) {
        const Multidegree up = m + Multidegree::unit(n, i);
        const DegreeReduction<Scalar>& red = reduction(up);
        Matrix<Scalar> fm = zeros<Scalar>(static_cast<Index>(red.dim()), cols);
        for (Index c = 0; c < cols; ++c) fm.col(c) = red.reduce(Word::letter(static_cast<int>(i)) + sp.words[c]);
        sp.f[i] = std::move(fm);
      }
      if (m[i] == 0) {
        sp.e[i] = zeros<Scalar>(0, cols);
        continue;
      }
      const Multidegree down = m - Multidegree::unit(n, i);
      const DegreeReduction<Scalar>& red = reduction(down);
      Matrix<Scalar> em = zeros<Scalar>(static_cast<Index>(red.dim()), cols);
      for (Index c = 0; c < cols; ++c) {
        const Word& w = sp.words[static_cast<std::size_t>(c)];
        Multidegree suffix = Multidegree::zero(n);
        for (std::size_t t = w.length(); t-- > 0;) {
          if (static_cast<std::size_t>(w[t]) == i) {
            Scalar k = coef(i, suffix);
            if (!is_zero(k)) em.col(c) += red.reduce(w.without(t)) * k;
          }
          suffix = suffix + Multidegree::unit(n, static_cast<std::size_t>(w[t]));
        }
      }
      sp.e[i] = std::move(em);
    }
  }
  return mod;
}

/// Operator of a word of generators from offset m: E_{w_1} ... E_{w_k}
/// (raising) or F_{w_1} ... F_{w_k}, rightmost letter applied first.
template <typename Scalar>
Matrix<Scalar> word_operator(const WeightModule<Scalar>& mod, const Word& w, const Multidegree& m, bool raising) {
  const std::size_t n = mod.n();
  Matrix<Scalar> acc = identity<Scalar>(static_cast<Index>(mod.dim(m)));
  Multidegree cur = m;
  for (std::size_t t = w.length(); t-- > 0;) {
    const auto i = static_cast<std::size_t>(w[t]);
    if (raising) {
      if (cur[i] == 0) return zeros<Scalar>(0, acc.cols());
      acc = product(mod.e(i, cur), acc);
      cur = cur - Multidegree::unit(n, i);
    } else {
      acc = product(mod.f(i, cur), acc);
      cur = cur + Multidegree::unit(n, i);
    }
  }
  return acc;
}

/// <F_x v, F_y v> per block, with the antiautomorphism F_i <-> E_i and
/// <v, v> = 1:  <F_i F_y v, u> = <F_y v, E_i u>.
template <typename Scalar>
std::map<Multidegree, Matrix<Scalar>> contravariant_blocks(const WeightModule<Scalar>& mod) {
  if (mod.type != ModuleType::kVerma) throw Error("qmodules/contravariant_form", "defined on Verma modules");
  std::map<Multidegree, Matrix<Scalar>> out;
  for (const auto& [m, sp] : mod.spaces) {
    const auto k = static_cast<Index>(sp.words.size());
    Matrix<Scalar> s(k, k);
    for (Index r = 0; r < k; ++r) {
      // <F_x v, u> = coefficient of v in E_{x_k} ... E_{x_1} u
      Matrix<Scalar> row = word_operator(mod, sp.words[static_cast<std::size_t>(r)].reversed(), m, true);
      s.row(r) = row.row(0);
    }
    out.emplace(m, std::move(s));
  }
  return out;
}

/// The quotient of a Verma module by the radical of its contravariant form.
template <typename Scalar>
WeightModule<Scalar> irreducible_quotient(const WeightModule<Scalar>& verma) {
  const auto forms = contravariant_blocks(verma);
  const std::size_t n = verma.n();
  struct Projection {
    std::vector<Index> basis;
    Matrix<Scalar> coords;  // dimL x dimM
  };
  std::map<Multidegree, Projection> proj;
  for (const auto& [m, s] : forms) {
    auto ech = row_echelon(s);
    if (ech.pivots.empty()) continue;
    Projection p;
    p.basis = ech.pivots;
    const auto b = static_cast<Index>(p.basis.size());
    Matrix<Scalar> sbb(b, b), sb(b, s.cols());
    for (Index r = 0; r < b; ++r) {
      for (Index c = 0; c < b; ++c) sbb(r, c) = s(p.basis[r], p.basis[c]);
      sb.row(r) = s.row(p.basis[r]);
    }
    p.coords = product(inverse(sbb, "qmodules/irreducible"), sb);
    proj.emplace(m, std::move(p));
  }

  WeightModule<Scalar> out;
  out.kind = verma.kind;
  out.type = ModuleType::kIrreducible;
  out.datum = verma.datum;
  out.highest = verma.highest;
  out.depth = verma.depth;
  out.denominator = verma.denominator;
  auto restrict_action = [&](const Matrix<Scalar>& x, const Multidegree& from, const Multidegree& to) {
    const auto& pf = proj.at(from);
    auto it = proj.find(to);
    if (it == proj.end()) return zeros<Scalar>(0, static_cast<Index>(pf.basis.size()));
    Matrix<Scalar> incl = zeros<Scalar>(x.cols(), static_cast<Index>(pf.basis.size()));
    for (std::size_t a = 0; a < pf.basis.size(); ++a) incl(pf.basis[a], static_cast<Index>(a)) = Scalar(1);
    return product(it->second.coords, product(x, incl));
  };
  for (const auto& [m, p] : proj) {
    const auto& vsp = verma.spaces.at(m);
    WeightSpace<Scalar> sp;
    for (Index a : p.basis) sp.words.push_back(vsp.words[static_cast<std::size_t>(a)]);
    sp.e.resize(n);
    sp.f.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) {
        sp.e[i] = zeros<Scalar>(0, static_cast<Index>(p.basis.size()));
      } else {
        sp.e[i] = restrict_action(vsp.e[i], m, m - Multidegree::unit(n, i));
      }
      if (m.total() < verma.depth) sp.f[i] = restrict_action(vsp.f[i], m, m + Multidegree::unit(n, i));
    }
    out.spaces.emplace(m, std::move(sp));
  }
  return out;
}

/// Dimensions per offset, up to the module depth.
using CharacterTable = std::map<Multidegree, long>;

template <typename Scalar>
CharacterTable character(const WeightModule<Scalar>& mod) {
  CharacterTable t;
  for (const auto& m : graded_multidegrees(mod.n(), 0, mod.depth)) t.emplace(m, static_cast<long>(mod.dim(m)));
  return t;
}

}  // namespace kmq

#endif  // KMQ_WEIGHT_MODULE_HPP
