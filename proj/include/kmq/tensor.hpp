#ifndef KMQ_TENSOR_HPP
#define KMQ_TENSOR_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "kmq/error.hpp"
#include "kmq/matrix.hpp"
#include "kmq/multidegree.hpp"
#include "kmq/weight_module.hpp"

namespace kmq {

/// A weight block of V_1 (x) ... (x) V_k: every tuple of offsets summing to
/// `total`, each tuple contributing a product basis (slot 0 most
/// significant, as in kron).
struct TensorBlock {
  Multidegree total;
  std::vector<std::vector<Multidegree>> tuples;
  std::vector<Index> start;
  std::vector<std::vector<std::size_t>> dims;
  Index size = 0;
  std::map<std::vector<Multidegree>, std::size_t> lookup;
};

template <typename Scalar>
TensorBlock tensor_block(const std::vector<const WeightModule<Scalar>*>& factors, const Multidegree& total) {
  TensorBlock tb;
  tb.total = total;
  const std::size_t k = factors.size();
  for (const auto* f : factors)
    if (total.total() > f->depth)
      throw ResourceError("rmatrix/tensor_block", "block " + total.to_string() + " is deeper than a factor's truncation");
  std::vector<Multidegree> cur;
  std::function<void(std::size_t, const Multidegree&)> rec = [&](std::size_t slot, const Multidegree& rest) {
    if (slot + 1 == k) {
      if (factors[slot]->dim(rest) == 0) return;
      cur.push_back(rest);
      tb.tuples.push_back(cur);
      cur.pop_back();
      return;
    }
    for (const auto& m : graded_multidegrees(total.size(), 0, rest.total())) {
      if (!m.dominated_by(rest) || factors[slot]->dim(m) == 0) continue;
      cur.push_back(m);
      rec(slot + 1, rest - m);
      cur.pop_back();
    }
  };
  if (k > 0) rec(0, total);
  for (std::size_t t = 0; t < tb.tuples.size(); ++t) {
    tb.lookup.emplace(tb.tuples[t], t);
    tb.start.push_back(tb.size);
    std::vector<std::size_t> d;
    Index prod = 1;
    for (std::size_t s = 0; s < k; ++s) {
      d.push_back(factors[s]->dim(tb.tuples[t][s]));
      prod *= static_cast<Index>(d.back());
    }
    tb.dims.push_back(std::move(d));
    tb.size += prod;
  }
  return tb;
}

/// One tensor factor of a product operator: a map on `slot` from offset m to
/// offset m + shift.
template <typename Scalar>
struct SlotAction {
  std::size_t slot = 0;
  std::vector<int> shift;
  std::function<Matrix<Scalar>(const Multidegree&)> matrix;
};

/// prod_p actions_p, times scalar(source tuple) when given; identity on the
/// remaining slots.
template <typename Scalar>
struct ProductTerm {
  std::vector<SlotAction<Scalar>> actions;
  std::function<Scalar(const std::vector<Multidegree>&)> scalar;
};

/// Sum of product terms as a matrix from block `from` to block `to`.
template <typename Scalar>
Matrix<Scalar> assemble(const TensorBlock& from, const TensorBlock& to, const std::vector<ProductTerm<Scalar>>& terms) {
  Matrix<Scalar> out = zeros<Scalar>(to.size, from.size);
  for (std::size_t s = 0; s < from.tuples.size(); ++s) {
    const auto& src = from.tuples[s];
    const auto& sdims = from.dims[s];
    const std::size_t k = src.size();
    for (const auto& term : terms) {
      std::vector<Multidegree> dst = src;
      bool valid = true;
      for (const auto& act : term.actions) {
        std::vector<int> v = src[act.slot].values();
        for (std::size_t j = 0; j < v.size(); ++j) {
          v[j] += act.shift[j];
          if (v[j] < 0) valid = false;
        }
        if (!valid) break;
        dst[act.slot] = Multidegree(v);
      }
      if (!valid) continue;
      auto it = to.lookup.find(dst);
      if (it == to.lookup.end()) continue;
      const std::size_t t = it->second;
      const auto& tdims = to.dims[t];
      Scalar c = term.scalar ? term.scalar(src) : Scalar(1);
      if (is_zero(c)) continue;
      // per-slot matrices; slots without an action are the identity
      std::vector<const Matrix<Scalar>*> mats(k, nullptr);
      std::vector<Matrix<Scalar>> storage;
      storage.reserve(term.actions.size());
      for (const auto& act : term.actions) {
        storage.push_back(act.matrix(src[act.slot]));
        mats[act.slot] = &storage.back();
      }
      // enumerate source and target multi-indices
      std::vector<std::size_t> si(k, 0), ti(k, 0);
      std::function<void(std::size_t, Scalar, Index, Index)> walk = [&](std::size_t p, Scalar acc, Index row,
                                                                         Index col) {
        if (p == k) {
          out(to.start[t] + row, from.start[s] + col) += acc;
          return;
        }
        const auto sd = static_cast<Index>(sdims[p]);
        const auto td = static_cast<Index>(tdims[p]);
        if (mats[p] == nullptr) {
          for (Index a = 0; a < sd; ++a) walk(p + 1, acc, row * td + a, col * sd + a);
          return;
        }
        const Matrix<Scalar>& m = *mats[p];
        for (Index a = 0; a < sd; ++a)
          for (Index b = 0; b < td; ++b) {
            if (is_zero(m(b, a))) continue;
            walk(p + 1, acc * m(b, a), row * td + b, col * sd + a);
          }
      };
      walk(0, c, 0, 0);
    }
  }
  return out;
}

/// Swap of slots p and p + 1 on a block of identical factors.
template <typename Scalar>
Matrix<Scalar> slot_swap(const TensorBlock& block, std::size_t p) {
  Matrix<Scalar> out = zeros<Scalar>(block.size, block.size);
  for (std::size_t s = 0; s < block.tuples.size(); ++s) {
    auto dst = block.tuples[s];
    std::swap(dst[p], dst[p + 1]);
    const std::size_t t = block.lookup.at(dst);
    const auto& d = block.dims[s];
    const std::size_t k = d.size();
    Index count = 1;
    for (auto x : d) count *= static_cast<Index>(x);
    for (Index lin = 0; lin < count; ++lin) {
      std::vector<Index> idx(k);
      Index r = lin;
      for (std::size_t q = k; q-- > 0;) {
        idx[q] = r % static_cast<Index>(d[q]);
        r /= static_cast<Index>(d[q]);
      }
      std::swap(idx[p], idx[p + 1]);
      const auto& td = block.dims[t];
      Index row = 0;
      for (std::size_t q = 0; q < k; ++q) row = row * static_cast<Index>(td[q]) + idx[q];
      out(block.start[t] + row, block.start[s] + lin) = Scalar(1);
    }
  }
  return out;
}

inline std::vector<int> shift_of(const Multidegree& m, int sign) {
  std::vector<int> v = m.values();
  for (int& x : v) x *= sign;
  return v;
}

}  // namespace kmq

#endif  // KMQ_TENSOR_HPP
