#include "kmq/kz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace kmq {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::vector<Complex>;

struct Closest {
  double distance = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  std::size_t j = 0;
};

Closest closest_pair(const Point& z) {
  Closest c;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const double d = std::abs(z[i] - z[j]);
      if (d < c.distance) c = {d, i, j};
    }
  return c;
}

double speed(const Point& v) {
  double s = 0;
  for (const auto& x : v) s = std::max(s, std::abs(x));
  return s;
}

[[noreturn]] void refuse(const Closest& c, std::size_t segment, double t) {
  std::ostringstream os;
  os << "path comes within " << c.distance << " of the diagonal z_" << c.i + 1 << " = z_" << c.j + 1
     << " (segment " << segment << ", t = " << t << ")";
  throw IntegrationError("kz/kz_transport", os.str());
}

}  // namespace

KZSystem kz_system(const ClassicalModule& v, std::size_t k, const Multidegree& total, const CasimirData& casimir,
                   Complex hbar) {
  if (k < 2) throw Error("kz/kz_system", "at least two points are needed");
  KZSystem sys;
  sys.k = k;
  sys.hbar = hbar;
  std::vector<const ClassicalModule*> factors(k, &v);
  sys.block = tensor_block(factors, total);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      sys.omega.emplace(std::make_pair(i, j), to_complex(casimir_omega(factors, total, i, j, casimir).matrix));
  return sys;
}

Point reference_point(std::size_t k) {
  Point z(k);
  for (std::size_t i = 0; i < k; ++i) z[i] = static_cast<double>(i + 1);
  return z;
}

Path exchange_path(std::size_t k, std::size_t p) {
  if (p + 1 >= k) throw Error("kz/braid_monodromy", "generator index out of range");
  const Point base = reference_point(k);
  const Complex centre = 0.5 * (base[p] + base[p + 1]);
  const double pi = std::numbers::pi;
  PathSegment seg;
  seg.position = [base, centre, p, pi](double t) {
    Point z = base;
    const Complex r = 0.5 * std::exp(Complex(0, pi * t));
    z[p] = centre - r;
    z[p + 1] = centre + r;
    return z;
  };
  seg.velocity = [k, p, pi](double t) {
    Point v(k, 0.0);
    const Complex dr = 0.5 * Complex(0, pi) * std::exp(Complex(0, pi * t));
    v[p] = -dr;
    v[p + 1] = dr;
    return v;
  };
  return {seg};
}

CMatrix kz_transport(const KZSystem& system, const Path& path, const IntegratorOptions& options) {
  const auto n = static_cast<Index>(system.block.size);
  const Complex coef = system.hbar / Complex(0, 2 * std::numbers::pi);
  CMatrix total = CMatrix::Identity(n, n);
  if (n == 0) return total;

  // refuse before integrating when a sampled point is too close
  constexpr int kSamples = 4096;
  for (std::size_t s = 0; s < path.size(); ++s)
    for (int a = 0; a <= kSamples; ++a) {
      const double t = static_cast<double>(a) / kSamples;
      Closest c = closest_pair(path[s].position(t));
      if (c.distance < options.safety_radius) refuse(c, s, t);
    }
  if (system.hbar == Complex(0)) return total;

  for (std::size_t s = 0; s < path.size(); ++s) {
    const PathSegment& seg = path[s];
    auto generator = [&](double t) {
      const Point z = seg.position(t);
      const Point v = seg.velocity(t);
      CMatrix a = CMatrix::Zero(n, n);
      for (const auto& [ij, om] : system.omega) {
        const auto [i, j] = ij;
        a += om * ((v[i] - v[j]) / (z[i] - z[j]));
      }
      return CMatrix(a * coef);
    };
    auto rhs = [&](const State& x, State& dxdt, double t) {
      Eigen::Map<const CMatrix> f(x.data(), n, n);
      Eigen::Map<CMatrix> df(dxdt.data(), n, n);
      df = generator(t) * f;
    };
    State x(static_cast<std::size_t>(n * n));
    Eigen::Map<CMatrix>(x.data(), n, n) = CMatrix::Identity(n, n);
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(options.abs_tol, options.rel_tol);
    double t = 0;
    double dt = 1e-3;
    long steps = 0;
    while (t < 1.0) {
      const Point z = seg.position(t);
      const Closest c = closest_pair(z);
      if (c.distance < options.safety_radius) refuse(c, s, t);
      const double ceiling = options.step_fraction * c.distance / std::max(speed(seg.velocity(t)), 1e-300);
      dt = std::min({dt, ceiling, 1.0 - t});
      if (++steps > options.max_steps)
        throw IntegrationError("kz/kz_transport", "step budget exhausted at t = " + std::to_string(t));
      const double before = t;
      if (stepper.try_step(rhs, x, t, dt) == odeint::fail) continue;
      if (t >= 1.0 || 1.0 - t < 1e-15 * std::max(1.0, before)) t = 1.0;
    }
    total = Eigen::Map<CMatrix>(x.data(), n, n) * total;
  }
  return total;
}

CMatrix braid_monodromy(const KZSystem& system, std::size_t p, const IntegratorOptions& options) {
  const CMatrix transport = kz_transport(system, exchange_path(system.k, p), options);
  const CMatrix swap = to_complex(slot_swap<Rational>(system.block, p));
  return swap * transport;
}

double eigenvalue_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0;
  for (const auto& x : a) {
    std::size_t best = b.size();
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j] && std::abs(x - b[j]) < bd) {
        bd = std::abs(x - b[j]);
        best = j;
      }
    used[best] = true;
    worst = std::max(worst, bd);
  }
  return worst;
}

namespace {

std::vector<Complex> eigenvalues(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  const auto& ev = solver.eigenvalues();
  std::vector<Complex> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

// All words of length 1..max_length in the letters +-1 .. +-g, shortest first.
std::vector<std::vector<int>> braid_words(std::size_t g, int max_length) {
  std::vector<int> letters;
  for (std::size_t i = 1; i <= g; ++i) {
    letters.push_back(static_cast<int>(i));
    letters.push_back(-static_cast<int>(i));
  }
  std::vector<std::vector<int>> out, layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int l : letters) {
        auto x = w;
        x.push_back(l);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

CMatrix word_matrix(const std::vector<int>& w, const std::vector<CMatrix>& gens, const std::vector<CMatrix>& invs) {
  CMatrix acc = CMatrix::Identity(gens[0].rows(), gens[0].cols());
  for (int l : w) acc = acc * (l > 0 ? gens[static_cast<std::size_t>(l - 1)] : invs[static_cast<std::size_t>(-l - 1)]);
  return acc;
}

}  // namespace

MonodromyReport drinfeld_kohno_compare(const ClassicalModule& classical, const QuantumModule& quantum,
                                       const CasimirData& casimir, const RMatrixData& rdata, std::size_t k,
                                       int max_total, Complex hbar, int word_length,
                                       const IntegratorOptions& options) {
  if (k < 2) throw Error("kz/drinfeld_kohno_compare", "at least two strands are needed");
  MonodromyReport report;
  const Denominator D = rdata.pairing().denominator();
  std::vector<const ClassicalModule*> cf(k, &classical);
  std::vector<const QuantumModule*> qf(k, &quantum);
  for (const auto& total : graded_multidegrees(classical.n(), 0, max_total)) {
    const TensorBlock cblock = tensor_block(cf, total);
    const TensorBlock qblock = tensor_block(qf, total);
    if (cblock.size == 0 && qblock.size == 0) continue;
    BlockComparison bc;
    bc.total = total;
    bc.size = cblock.size;
    if (cblock.size != qblock.size) {
      bc.max_deviation = std::numeric_limits<double>::infinity();
      report.max_deviation = bc.max_deviation;
      report.blocks.push_back(std::move(bc));
      continue;
    }
    const KZSystem sys = kz_system(classical, k, total, casimir, hbar);
    std::vector<CMatrix> kz_inv, r_inv;
    for (std::size_t p = 0; p + 1 < k; ++p) {
      bc.monodromy.push_back(braid_monodromy(sys, p, options));
      bc.braided.push_back(evaluate_numeric(braid_operator(quantum, k, p, total, rdata).matrix, hbar, D));
      kz_inv.push_back(bc.monodromy.back().inverse());
      r_inv.push_back(bc.braided.back().inverse());
      EigenComparison ec;
      ec.generator = p + 1;
      ec.monodromy = eigenvalues(bc.monodromy.back());
      ec.braided = eigenvalues(bc.braided.back());
      ec.deviation = eigenvalue_distance(ec.monodromy, ec.braided);
      bc.max_deviation = std::max(bc.max_deviation, ec.deviation);
      bc.eigenvalues.push_back(std::move(ec));
    }
    for (const auto& w : braid_words(k - 1, word_length)) {
      TraceComparison tc;
      std::ostringstream name;
      for (std::size_t a = 0; a < w.size(); ++a) name << (a ? " " : "") << w[a];
      tc.word = name.str();
      tc.monodromy = word_matrix(w, bc.monodromy, kz_inv).trace();
      tc.braided = word_matrix(w, bc.braided, r_inv).trace();
      bc.max_deviation = std::max(bc.max_deviation, std::abs(tc.monodromy - tc.braided));
      bc.traces.push_back(std::move(tc));
    }
    report.max_deviation = std::max(report.max_deviation, bc.max_deviation);
    report.blocks.push_back(std::move(bc));
  }
  return report;
}

}  // namespace kmq
