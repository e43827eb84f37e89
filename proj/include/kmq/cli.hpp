#ifndef KMQ_CLI_HPP
#define KMQ_CLI_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmq/matrix.hpp"
#include "kmq/rational.hpp"
#include "kmq/weight_module.hpp"

namespace kmq {

/// Session parameters. Text form: one `key = value` per line, `#` starts a
/// comment, matrices and weight lists are `;`-separated rows of rationals.
struct SessionConfig {
  RationalMatrix matrix;
  /// Explicit symmetrizer; when absent `symmetrizer` comes from symmetrize.
  std::optional<std::vector<Rational>> d;
  std::vector<Rational> symmetrizer;
  int max_degree = 6;
  int depth = 4;
  /// lambda(h_i), optionally followed by the extension coordinates.
  std::vector<std::vector<Rational>> highest_weights;
  std::complex<double> hbar{0.1, 0.0};
  double tol = 1e-9;
  int wordlen = 4;
  int strands = 3;
  ModuleType module = ModuleType::kIrreducible;
  /// dk passes when the largest deviation stays below this.
  double max_deviation = 1e-6;

  friend bool operator==(const SessionConfig& a, const SessionConfig& b);
};

/// Throws ParseError with line and column, or the validation error
/// (NotSymmetrizable, dimension mismatch).
SessionConfig parse_config(const std::string& text);

/// Canonical text; parse_config(emit_config(c)) == c.
std::string emit_config(const SessionConfig& config);

/// Fills `symmetrizer` and checks dimensions.
void validate_config(SessionConfig& config);

std::uint64_t fnv1a(const std::string& text);

struct Report {
  std::string command;
  std::uint64_t input_digest = 0;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool pass = true;

  /// `#` metadata block (command, digest, verdict, extra keys), then TSV.
  std::string render() const;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"symmetrize", "relations", "dims", "character",
                                              "compare-characters", "ybe", "dk"};
  return names;
}

/// Runs one pipeline. Errors from the pipelines propagate.
Report run(const std::string& command, const SessionConfig& config);

}  // namespace kmq

#endif  // KMQ_CLI_HPP
