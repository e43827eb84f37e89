#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "kmq/cli.hpp"
#include "kmq/error.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

// Comments out file lines whose key is overridden, keeping line numbers.
std::string merge(const std::string& file_text, const std::map<std::string, std::string>& overrides) {
  std::istringstream in(file_text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    const auto hash = line.find('#');
    if (eq != std::string::npos && (hash == std::string::npos || eq < hash)) {
      std::string key = line.substr(0, eq);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      if (overrides.count(key)) {
        out << "# " << line << "\n";
        continue;
      }
    }
    out << line << "\n";
  }
  for (const auto& [k, v] : overrides) out << k << " = " << v << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized Kac-Moody algebras: relations, characters, R-matrices and KZ monodromy"};
  std::string command;
  std::string config_path;
  std::map<std::string, std::string> overrides;
  std::string matrix, d, hw, hbar, tol, max_deviation;
  int max_degree = 0, depth = -1, wordlen = -1, strands = 0;
  bool verma_flag = false, irr_flag = false;

  app.add_option("command", command, "Pipeline to run")
      ->required()
      ->check(CLI::IsMember(kmq::command_names()));
  app.add_option("--config", config_path, "Config file (key = value lines)")->check(CLI::ExistingFile);
  app.add_option("--matrix", matrix, "Cartan matrix, rows separated by ';'");
  app.add_option("--d", d, "Explicit symmetrizer");
  app.add_option("--max-degree", max_degree, "Degree cap")->check(CLI::PositiveNumber);
  app.add_option("--depth", depth, "Module truncation depth")->check(CLI::NonNegativeNumber);
  app.add_option("--hw", hw, "Highest weights: \"r1 r2 ...\", several separated by ';'");
  app.add_option("--hbar", hbar, "hbar as \"re\" or \"re im\"");
  app.add_option("--tol", tol, "Integrator relative tolerance");
  app.add_option("--wordlen", wordlen, "Braid word length for dk")->check(CLI::NonNegativeNumber);
  app.add_option("--strands", strands, "Number of strands for dk")->check(CLI::Range(2, 16));
  app.add_option("--max-deviation", max_deviation, "dk pass threshold");
  auto* verma_opt = app.add_flag("--verma", verma_flag, "Verma modules");
  app.add_flag("--irr", irr_flag, "Irreducible modules")->excludes(verma_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kUsage;
  }

  if (!matrix.empty()) overrides["matrix"] = matrix;
  if (!d.empty()) overrides["d"] = d;
  if (max_degree > 0) overrides["max_degree"] = std::to_string(max_degree);
  if (depth >= 0) overrides["depth"] = std::to_string(depth);
  if (!hw.empty()) overrides["hw"] = hw;
  if (!hbar.empty()) overrides["hbar"] = hbar;
  if (!tol.empty()) overrides["tol"] = tol;
  if (wordlen >= 0) overrides["wordlen"] = std::to_string(wordlen);
  if (strands > 0) overrides["strands"] = std::to_string(strands);
  if (!max_deviation.empty()) overrides["max_deviation"] = max_deviation;
  if (verma_flag) overrides["module"] = "verma";
  if (irr_flag) overrides["module"] = "irreducible";

  std::string file_text;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    file_text = ss.str();
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const kmq::SessionConfig config = kmq::parse_config(merge(file_text, overrides));
    const kmq::Report report = kmq::run(command, config);
    std::cout << report.render();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "# elapsed_ms\t" << ms << "\n";
    return report.pass ? kPass : kFail;
  } catch (const kmq::ParseError& e) {
    std::cerr << "error: " << e.origin() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const kmq::ResourceError& e) {
    std::cerr << "error: " << e.origin() << ": " << e.what() << "\n";
    return kResource;
  } catch (const kmq::Error& e) {
    std::cerr << "error: " << e.origin() << ": " << e.what() << "\n";
    return e.origin().rfind("cli/", 0) == 0 ? kUsage : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
