#ifndef KMQ_KZ_HPP
#define KMQ_KZ_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kmq/classical.hpp"
#include "kmq/rmatrix.hpp"

namespace kmq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Point = std::vector<Complex>;

/// dF/dz_i = (hbar / 2 pi i) sum_{j != i} Omega_ij F / (z_i - z_j) on one
/// weight block of V^{(x) k}.
struct KZSystem {
  std::size_t k = 0;
  TensorBlock block;
  /// Omega_ij for i < j.
  std::map<std::pair<std::size_t, std::size_t>, CMatrix> omega;
  Complex hbar;
};

KZSystem kz_system(const ClassicalModule& v, std::size_t k, const Multidegree& total, const CasimirData& casimir,
                   Complex hbar);

/// A smooth piece of a path in configuration space, parametrized by [0, 1].
struct PathSegment {
  std::function<Point(double)> position;
  std::function<Point(double)> velocity;
};
using Path = std::vector<PathSegment>;

struct IntegratorOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  /// Paths coming closer than this to a diagonal are refused.
  double safety_radius = 1e-6;
  /// Step ceiling as a fraction of (distance to the nearest diagonal) / speed.
  double step_fraction = 0.05;
  long max_steps = 2000000;
};

/// (1, 2, ..., k)
Point reference_point(std::size_t k);

/// Points p and p + 1 of the reference point swap by a counterclockwise
/// half-turn about their midpoint; the others stay fixed.
Path exchange_path(std::size_t k, std::size_t p);

/// Transport of the fundamental solution along the path (identity at the
/// start). Throws IntegrationError when the path comes within the safety
/// radius of a diagonal or the step budget runs out.
CMatrix kz_transport(const KZSystem& system, const Path& path, const IntegratorOptions& options = {});

/// Monodromy of the braid generator b_{p+1}: transport along the exchange
/// path followed by the slot permutation identifying the endpoint fiber.
CMatrix braid_monodromy(const KZSystem& system, std::size_t p, const IntegratorOptions& options = {});

struct TraceComparison {
  /// Generators 1..k-1, negative for inverses, e.g. "1 -2 1".
  std::string word;
  Complex monodromy;
  Complex braided;
};

struct EigenComparison {
  std::size_t generator = 0;
  std::vector<Complex> monodromy;
  std::vector<Complex> braided;
  double deviation = 0;
};

struct BlockComparison {
  Multidegree total;
  Index size = 0;
  std::vector<CMatrix> monodromy;
  std::vector<CMatrix> braided;
  std::vector<TraceComparison> traces;
  std::vector<EigenComparison> eigenvalues;
  double max_deviation = 0;
};

struct MonodromyReport {
  std::vector<BlockComparison> blocks;
  double max_deviation = 0;
};

/// Compares the KZ monodromy of the classical module with b_i -> sigma_i R_{i,i+1}
/// of its quantum counterpart at q = e^{hbar / 2} by conjugation invariants:
/// traces of all words of length <= word_length in the generators and their
/// inverses, and eigenvalue multisets of the generators. Every nonzero block
/// with |total| <= max_total is compared.
MonodromyReport drinfeld_kohno_compare(const ClassicalModule& classical, const QuantumModule& quantum,
                                       const CasimirData& casimir, const RMatrixData& rdata, std::size_t k,
                                       int max_total, Complex hbar, int word_length,
                                       const IntegratorOptions& options = {});

/// Greedy nearest matching of two eigenvalue lists; the largest distance.
double eigenvalue_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace kmq

#endif  // KMQ_KZ_HPP
