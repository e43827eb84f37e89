// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>

#include "kmq/classical.hpp"
#include "kmq/cli.hpp"
#include "kmq/error.hpp"
#include "kmq/kz.hpp"
#include "kmq/qmodules.hpp"
#include "kmq/qpairing.hpp"
#include "kmq/rmatrix.hpp"
#include "support/hopf_oracle.hpp"

using namespace kmq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

CartanDatum datum(const char* a) { return build_realization(parse_matrix(a)); }

Outcome symmetrizability() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto d = symmetrize(parse_matrix("2 -2; -1 2"));
  bool rejected = false;
  try {
    symmetrize(parse_matrix("2 -1; 0 2"));
  } catch (const NotSymmetrizable& e) {
    rejected = std::string(e.what()).find("(1,2)") != std::string::npos;
  }
  const double us =
      std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  o.require(d == std::vector<Rational>{Rational(1), Rational(2)}, "d for [[2,-2],[-1,2]] is not (1,2)");
  o.require(rejected, "[[2,-1],[0,2]] was not rejected naming the pair (1,2)");
  o.require(us < 1000, "took " + std::to_string(us) + " us");
  o.detail = o.pass ? "d=(1,2); rejected (1,2); " + std::to_string(static_cast<long>(us)) + " us" : o.detail;
  return o;
}

Outcome pairing_normalization() {
  Outcome o;
  long blocks = 0, oracle_pairs = 0;
  for (const char* a : {"2 -1; -1 2", "2 -2; -2 2"}) {
    const CartanDatum cd = datum(a);
    const Denominator D = session_denominator(cd);
    DrinfeldPairing b(cd, D);
    for (std::size_t i = 0; i < cd.n(); ++i) {
      const auto g = b.gram_block(Multidegree::unit(cd.n(), i));
      o.require(g.matrix.rows() == 1 && g.matrix(0, 0) == QScalar(1) / q_minus_q_inverse(D),
                std::string(a) + ": B(E_i, E_i) != 1/(q - q^-1)");
    }
    for (const auto& m : graded_multidegrees(cd.n(), 1, 6)) {
      const QMatrix g = b.gram_block(m).matrix;
      o.require(g == QMatrix(g.transpose()), std::string(a) + ": Gram block " + m.to_string() + " not symmetric");
      ++blocks;
    }
    oracle::HopfOracle hopf(cd, D);
    for (const auto& m : graded_multidegrees(cd.n(), 1, 4)) {
      const auto words = enumerate_words(m);
      for (const auto& x : words)
        for (const auto& y : words) {
          o.require(b.pair_words(x, y) == hopf.pair(x, y),
                    std::string(a) + ": recursion and oracle differ at " + x.to_string() + ", " + y.to_string());
          ++oracle_pairs;
        }
    }
  }
  if (o.pass)
    o.detail = std::to_string(blocks) + " symmetric blocks; " + std::to_string(oracle_pairs) + " oracle pairs agree";
  return o;
}

Outcome quantum_serre() {
  Outcome o;
  long checked = 0;
  for (const char* a : {"2 0; 0 2", "2 -1; -1 2", "2 -2; -2 2"}) {
    const CartanDatum cd = datum(a);
    DrinfeldPairing b(cd, session_denominator(cd));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        if (i == j) continue;
        o.require(verify_serre_in_kernel(i, j, b).in_kernel, std::string(a) + ": Serre element not in the kernel");
        ++checked;
      }
  }
  const CartanDatum sl3 = datum("2 -1; -1 2");
  DrinfeldPairing b(sl3, session_denominator(sl3));
  const auto k = b.kernel_block(Multidegree({2, 1}));
  o.require(k.vectors.size() == 1, "sl3 kernel at (2,1) has dimension " + std::to_string(k.vectors.size()));
  if (o.pass) o.detail = std::to_string(checked) + " Serre elements; sl3 (2,1) kernel dimension 1";
  return o;
}

Outcome flatness() {
  Outcome o;
  long degrees = 0;
  struct Case {
    const char* a;
    int max;
  };
  for (const auto& c : {Case{"2 -1; -1 2", 6}, Case{"2 -2; -2 2", 6}, Case{"2 -1/2; -1/2 2", 5}}) {
    const CartanDatum cd = datum(c.a);
    DrinfeldPairing b(cd, session_denominator(cd));
    ClassicalRelations rel(cd);
    for (const auto& m : graded_multidegrees(cd.n(), 1, c.max)) {
      const long q = static_cast<long>(b.reduction(m).radical_dim());
      const long cl = rel.relation_rank(m);
      o.require(q == cl, std::string(c.a) + " at " + m.to_string() + ": quantum kernel rank " + std::to_string(q) +
                             ", classical " + std::to_string(cl));
      ++degrees;
    }
  }
  if (o.pass) o.detail = std::to_string(degrees) + " multidegrees with equal kernel ranks";
  return o;
}

Outcome root_multiplicities_affine() {
  Outcome o;
  const CartanDatum cd = datum("2 -2; -2 2");
  ClassicalRelations rel(cd);
  const auto mult = root_multiplicities(rel, 6);
  const auto oracle = weyl_kac_multiplicities(cd, 6);
  long roots = 0;
  for (const auto& m : graded_multidegrees(2, 1, 6)) {
    auto get = [&m](const std::map<Multidegree, long>& t) {
      auto it = t.find(m);
      return it == t.end() ? 0L : it->second;
    };
    const long k = get(mult);
    o.require(k == get(oracle), "multiplicity differs from the denominator identity at " + m.to_string());
    o.require(k == 0 || k == 1, "multiplicity " + std::to_string(k) + " at " + m.to_string());
    const bool is_root = std::abs(m[0] - m[1]) <= 1;
    o.require((k == 1) == is_root, "unexpected root set at " + m.to_string());
    roots += k;
  }
  if (o.pass) o.detail = std::to_string(roots) + " roots, all of multiplicity 1";
  return o;
}

struct ModuleCase {
  const char* a;
  std::vector<Rational> hw;
  int depth;
};

const std::vector<ModuleCase>& character_cases() {
  static const std::vector<ModuleCase> cases{
      {"2", {Rational(0)}, 3},          {"2", {Rational(1)}, 4},
      {"2", {Rational(3)}, 6},          {"2 -1; -1 2", {Rational(1), Rational(0)}, 4},
      {"2 -1; -1 2", {Rational(1), Rational(1)}, 6}, {"2 -2; -2 2", {Rational(1), Rational(0)}, 5}};
  return cases;
}

Outcome characters() {
  Outcome o;
  long entries = 0;
  for (const auto& c : character_cases()) {
    const CartanDatum cd = datum(c.a);
    const Weight lambda = highest_weight(cd, c.hw);
    DrinfeldPairing b(cd, session_denominator(cd, {lambda}));
    ClassicalRelations rel(cd);
    const auto cmp = compare_characters(irreducible(lambda, c.depth, b),
                                        classical_module(lambda, ModuleType::kIrreducible, c.depth, rel));
    o.require(cmp.equal, std::string(c.a) + ": characters differ at " +
                             (cmp.first_discrepancy ? cmp.first_discrepancy->to_string() : std::string("?")));
    entries += static_cast<long>(cmp.quantum.size());
  }
  if (o.pass) o.detail = std::to_string(entries) + " weight multiplicities agree";
  return o;
}

Outcome module_relations() {
  Outcome o;
  long modules = 0, identities = 0;
  std::vector<ModuleCase> cases = character_cases();
  cases.push_back({"2", {Rational(1, 3)}, 5});
  cases.push_back({"2 -1/2; -1/2 2", {Rational(1), Rational(1, 2)}, 4});
  cases.push_back({"2 -2; -1 2", {Rational(1), Rational(2)}, 4});
  for (const auto& c : cases) {
    const CartanDatum cd = datum(c.a);
    const Weight lambda = highest_weight(cd, c.hw);
    DrinfeldPairing b(cd, session_denominator(cd, {lambda}));
    const auto v = verma(lambda, c.depth, b);
    const auto rv = check_module_relations(v);
    o.require(rv.ok, std::string(c.a) + " Verma: " + rv.failure);
    const auto rl = check_module_relations(irreducible_quotient(v));
    o.require(rl.ok, std::string(c.a) + " irreducible: " + rl.failure);
    identities += rv.checked + rl.checked;
    modules += 2;
  }
  if (o.pass) o.detail = std::to_string(modules) + " modules, " + std::to_string(identities) + " block identities";
  return o;
}

Outcome yang_baxter() {
  Outcome o;
  const CartanDatum cd = datum("2");
  const Weight lambda = highest_weight(cd, {Rational(1)});
  const Denominator D = session_denominator(cd, {lambda});
  DrinfeldPairing b(cd, D);
  const auto v = irreducible(lambda, 3, b);
  RMatrixData data(b);
  const auto report = check_ybe(v, 3, data);
  o.require(report.ok && report.blocks.size() == 4, "braid relation fails on some block");
  std::vector<const QuantumModule*> f2(2, &v);
  const QMatrix top = r_action(f2, tensor_block(f2, Multidegree({0})), 0, data);
  o.require(top(0, 0) == q_power(weight_form(lambda, lambda, cd), D), "highest pair eigenvalue is not q^(lambda,lambda)");
  if (o.pass) o.detail = "4 blocks; highest pair eigenvalue q^(1/2)";
  return o;
}

Outcome drinfeld_kohno() {
  Outcome o;
  const CartanDatum cd = datum("2");
  const Weight lambda = highest_weight(cd, {Rational(1)});
  const Denominator D = session_denominator(cd, {lambda});
  ClassicalRelations rel(cd);
  const auto cm = classical_module(lambda, ModuleType::kIrreducible, 3, rel);
  CasimirData casimir(rel, 3);
  DrinfeldPairing b(cd, D);
  const auto qm = irreducible(lambda, 3, b);
  RMatrixData data(b);
  IntegratorOptions opts;
  opts.rel_tol = 1e-9;
  const auto report = drinfeld_kohno_compare(cm, qm, casimir, data, 3, 3, 0.1, 4, opts);
  o.require(report.max_deviation < 1e-6, "deviation " + std::to_string(report.max_deviation));

  // z_1 circles without enclosing the other points
  const double pi = std::numbers::pi;
  PathSegment loop;
  loop.position = [pi](double t) { return Point{1.0 + 0.4 * (std::exp(Complex(0, 2 * pi * t)) - 1.0), 2.0, 3.0}; };
  loop.velocity = [pi](double t) { return Point{0.4 * Complex(0, 2 * pi) * std::exp(Complex(0, 2 * pi * t)), 0.0, 0.0}; };
  double loop_err = 0;
  for (int t = 0; t <= 3; ++t) {
    const auto sys = kz_system(cm, 3, Multidegree({t}), casimir, 0.1);
    const auto n = static_cast<Index>(sys.block.size);
    loop_err = std::max(loop_err, (kz_transport(sys, {loop}, opts) - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff());
  }
  o.require(loop_err < 1e-7, "contractible loop transport off by " + std::to_string(loop_err));

  double perm_err = 0;
  for (int t = 0; t <= 3; ++t) {
    const auto sys = kz_system(cm, 3, Multidegree({t}), casimir, 0.0);
    for (std::size_t p = 0; p < 2; ++p)
      perm_err = std::max(perm_err,
                          (braid_monodromy(sys, p, opts) - to_complex(slot_swap<Rational>(sys.block, p))).cwiseAbs().maxCoeff());
  }
  o.require(perm_err == 0.0, "hbar = 0 monodromy is not the permutation action");
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "max deviation %.2e over %zu blocks; loop %.2e; hbar=0 exact", report.max_deviation,
                  report.blocks.size(), loop_err);
    o.detail = buf;
  }
  return o;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(KMQ_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> runs{
      "symmetrize --matrix \"2 -1/2; -1/2 2\"",
      "relations --matrix \"2 -1; -1 2\" --max-degree 5",
      "dims --matrix \"2 -2; -2 2\" --max-degree 6",
      "character --matrix \"2 -1; -1 2\" --hw \"1 1; 1 0\" --depth 4",
      "compare-characters --matrix \"2 -2; -2 2\" --hw \"1 0\" --depth 4",
      "ybe --matrix \"2 -1; -1 2\" --hw \"1 0\" --depth 3",
  };
  for (const auto& args : runs) {
    const std::string a = capture(args), b = capture(args);
    o.require(!a.empty() && a == b, "reports differ for: " + args);
  }
  if (o.pass) o.detail = std::to_string(runs.size()) + " exact commands byte-identical across runs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"symmetrizability gate", symmetrizability},
      {"pairing normalization, symmetry and oracle agreement", pairing_normalization},
      {"quantum Serre elements in the kernel", quantum_serre},
      {"flatness of kernel ranks", flatness},
      {"affine sl2 root multiplicities", root_multiplicities_affine},
      {"quantum and classical characters", characters},
      {"module block identities", module_relations},
      {"Yang-Baxter and highest pair eigenvalue", yang_baxter},
      {"Drinfeld-Kohno monodromy comparison", drinfeld_kohno},
      {"determinism of exact reports", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].check();
    } catch (const Error& e) {
      o.pass = false;
      o.detail = e.origin() + ": " + e.what();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", s);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].name << " (" << timing
              << "): " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
