#include "kmq/multidegree.hpp"

#include <numeric>

#include "kmq/error.hpp"

namespace kmq {

Multidegree::Multidegree(std::vector<int> m) : m_(std::move(m)) {
  for (int x : m_)
    if (x < 0) throw Error("freealg/multidegree", "negative multidegree component");
}

Multidegree Multidegree::unit(std::size_t n, std::size_t i) {
  Multidegree m = zero(n);
  m.m_[i] = 1;
  return m;
}

int Multidegree::total() const { return std::accumulate(m_.begin(), m_.end(), 0); }

bool Multidegree::can_subtract(const Multidegree& b) const { return b.dominated_by(*this); }

bool Multidegree::dominated_by(const Multidegree& b) const {
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (m_[i] > b.m_[i]) return false;
  return true;
}

Multidegree& Multidegree::operator+=(const Multidegree& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

Multidegree& Multidegree::operator-=(const Multidegree& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    m_[i] -= o.m_[i];
    if (m_[i] < 0) throw Error("freealg/multidegree", "negative multidegree component");
  }
  return *this;
}

Multidegree operator*(int k, Multidegree a) {
  for (auto& x : a.m_) x *= k;
  return a;
}

std::string Multidegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(m_[i]);
  }
  return s + ")";
}

namespace {

void fill(std::size_t n, std::size_t pos, int remaining, std::vector<int>& cur,
          std::vector<Multidegree>& out) {
  if (pos + 1 == n) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    fill(n, pos + 1, remaining - k, cur, out);
  }
}

}  // namespace

std::vector<Multidegree> graded_multidegrees(std::size_t n, int min_total, int max_total) {
  std::vector<Multidegree> out;
  if (n == 0) return out;
  std::vector<int> cur(n, 0);
  for (int t = std::max(0, min_total); t <= max_total; ++t) fill(n, 0, t, cur, out);
  return out;
}

}  // namespace kmq
