#include "kmq/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "kmq/classical.hpp"
#include "kmq/error.hpp"
#include "kmq/kz.hpp"
#include "kmq/qmodules.hpp"
#include "kmq/rmatrix.hpp"

namespace kmq {

bool operator==(const SessionConfig& a, const SessionConfig& b) {
  const bool same_matrix = a.matrix.rows() == b.matrix.rows() && a.matrix.cols() == b.matrix.cols() &&
                           (a.matrix.size() == 0 || a.matrix == b.matrix);
  return same_matrix && a.d == b.d && a.symmetrizer == b.symmetrizer && a.max_degree == b.max_degree &&
         a.depth == b.depth && a.highest_weights == b.highest_weights && a.hbar == b.hbar && a.tol == b.tol &&
         a.wordlen == b.wordlen && a.strands == b.strands && a.module == b.module &&
         a.max_deviation == b.max_deviation;
}

namespace {

struct Token {
  std::string text;
  int column;
};

// Rows separated by ';', entries by whitespace; columns are 1-based.
std::vector<std::vector<Token>> split_rows(const std::string& value, int first_column) {
  std::vector<std::vector<Token>> rows(1);
  std::size_t k = 0;
  while (k < value.size()) {
    const char c = value[k];
    if (c == ';') {
      rows.emplace_back();
      ++k;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else {
      const std::size_t start = k;
      while (k < value.size() && value[k] != ';' && !std::isspace(static_cast<unsigned char>(value[k]))) ++k;
      rows.back().push_back({value.substr(start, k - start), first_column + static_cast<int>(start)});
    }
  }
  return rows;
}

Rational parse_rational(const Token& t, int line) {
  try {
    return Rational::parse(t.text);
  } catch (const std::exception&) {
    throw ParseError("'" + t.text + "' is not a rational", line, t.column);
  }
}

std::vector<std::vector<Rational>> parse_rational_rows(const std::string& value, int column, int line) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : split_rows(value, column)) {
    if (row.empty()) throw ParseError("empty row", line, column);
    std::vector<Rational> r;
    for (const auto& t : row) r.push_back(parse_rational(t, line));
    out.push_back(std::move(r));
  }
  return out;
}

template <typename T>
T parse_number(const Token& t, int line) {
  T x{};
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, x);
  if (ec != std::errc() || ptr != end) throw ParseError("'" + t.text + "' is not a number", line, t.column);
  return x;
}

std::vector<Token> single_row(const std::string& value, int column, int line, std::size_t min, std::size_t max) {
  auto rows = split_rows(value, column);
  if (rows.size() != 1 || rows[0].size() < min || rows[0].size() > max)
    throw ParseError("expected " + std::to_string(min) + (min == max ? "" : " to " + std::to_string(max)) +
                         " value(s)",
                     line, column);
  return rows[0];
}

std::string trim(const std::string& s, std::size_t& offset) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  offset = a;
  return s.substr(a, b - a);
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string rows_text(const std::vector<std::vector<Rational>>& rows) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) out += (c ? " " : "") + rows[r][c].to_string();
  }
  return out;
}

}  // namespace

SessionConfig parse_config(const std::string& text) {
  SessionConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string content = raw.substr(0, raw.find('#'));
    std::size_t lead = 0;
    if (trim(content, lead).empty()) continue;
    const std::size_t eq = content.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line, static_cast<int>(lead) + 1);
    std::size_t key_off = 0, val_off = 0;
    const std::string key = trim(content.substr(0, eq), key_off);
    const std::string value = trim(content.substr(eq + 1), val_off);
    const int key_col = static_cast<int>(key_off) + 1;
    const int col = static_cast<int>(eq + 1 + val_off) + 1;
    if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line, key_col);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line, col);
    if (key == "matrix") {
      auto rows = parse_rational_rows(value, col, line);
      const auto n = static_cast<Index>(rows.size());
      cfg.matrix = RationalMatrix(n, n);
      for (Index r = 0; r < n; ++r) {
        if (static_cast<Index>(rows[static_cast<std::size_t>(r)].size()) != n)
          throw ParseError("matrix is not square", line, col);
        for (Index c = 0; c < n; ++c) cfg.matrix(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      }
    } else if (key == "d") {
      auto rows = parse_rational_rows(value, col, line);
      if (rows.size() != 1) throw ParseError("d is a single row", line, col);
      cfg.d = rows[0];
    } else if (key == "hw") {
      cfg.highest_weights = parse_rational_rows(value, col, line);
    } else if (key == "max_degree") {
      cfg.max_degree = parse_number<int>(single_row(value, col, line, 1, 1)[0], line);
    } else if (key == "depth") {
      cfg.depth = parse_number<int>(single_row(value, col, line, 1, 1)[0], line);
    } else if (key == "wordlen") {
      cfg.wordlen = parse_number<int>(single_row(value, col, line, 1, 1)[0], line);
    } else if (key == "strands") {
      cfg.strands = parse_number<int>(single_row(value, col, line, 1, 1)[0], line);
    } else if (key == "tol") {
      cfg.tol = parse_number<double>(single_row(value, col, line, 1, 1)[0], line);
    } else if (key == "max_deviation") {
      cfg.max_deviation = parse_number<double>(single_row(value, col, line, 1, 1)[0], line);
    } else if (key == "hbar") {
      auto toks = single_row(value, col, line, 1, 2);
      const double re = parse_number<double>(toks[0], line);
      const double im = toks.size() > 1 ? parse_number<double>(toks[1], line) : 0.0;
      cfg.hbar = {re, im};
    } else if (key == "module") {
      if (value == "verma")
        cfg.module = ModuleType::kVerma;
      else if (value == "irreducible")
        cfg.module = ModuleType::kIrreducible;
      else
        throw ParseError("module is 'verma' or 'irreducible'", line, col);
    } else {
      throw ParseError("unknown key '" + key + "'", line, key_col);
    }
  }
  if (!seen.count("matrix")) throw ParseError("missing key 'matrix'", line + 1, 1);
  validate_config(cfg);
  return cfg;
}

void validate_config(SessionConfig& cfg) {
  const auto n = static_cast<std::size_t>(cfg.matrix.rows());
  if (n == 0) throw Error("cli/validate", "empty matrix");
  if (cfg.d) {
    if (cfg.d->size() != n)
      throw Error("cli/validate", "d has " + std::to_string(cfg.d->size()) + " entries; expected " + std::to_string(n));
    cfg.symmetrizer = *cfg.d;
  } else {
    cfg.symmetrizer = symmetrize(cfg.matrix);
  }
  const CartanDatum cd = build_realization(cfg.matrix, cfg.symmetrizer);
  for (const auto& w : cfg.highest_weights)
    if (w.size() != n && w.size() != cd.h_dim())
      throw Error("cli/validate", "highest weight has " + std::to_string(w.size()) + " coordinates; expected " +
                                      std::to_string(n) + " or " + std::to_string(cd.h_dim()));
  if (cfg.max_degree < 1) throw Error("cli/validate", "max_degree must be at least 1");
  if (cfg.depth < 0) throw Error("cli/validate", "depth must be nonnegative");
  if (cfg.strands < 2) throw Error("cli/validate", "strands must be at least 2");
  if (cfg.wordlen < 0) throw Error("cli/validate", "wordlen must be nonnegative");
  if (!(cfg.tol > 0)) throw Error("cli/validate", "tol must be positive");
}

std::string emit_config(const SessionConfig& cfg) {
  std::vector<std::vector<Rational>> rows;
  for (Index r = 0; r < cfg.matrix.rows(); ++r) {
    rows.emplace_back();
    for (Index c = 0; c < cfg.matrix.cols(); ++c) rows.back().push_back(cfg.matrix(r, c));
  }
  std::ostringstream os;
  os << "matrix = " << rows_text(rows) << "\n";
  if (cfg.d) os << "d = " << rows_text({*cfg.d}) << "\n";
  os << "max_degree = " << cfg.max_degree << "\n";
  os << "depth = " << cfg.depth << "\n";
  if (!cfg.highest_weights.empty()) os << "hw = " << rows_text(cfg.highest_weights) << "\n";
  os << "hbar = " << format_double(cfg.hbar.real()) << " " << format_double(cfg.hbar.imag()) << "\n";
  os << "tol = " << format_double(cfg.tol) << "\n";
  os << "wordlen = " << cfg.wordlen << "\n";
  os << "strands = " << cfg.strands << "\n";
  os << "module = " << (cfg.module == ModuleType::kVerma ? "verma" : "irreducible") << "\n";
  os << "max_deviation = " << format_double(cfg.max_deviation) << "\n";
  return os.str();
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Report::render() const {
  std::ostringstream os;
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(input_digest));
  os << "# command\t" << command << "\n";
  os << "# input_fnv1a\t" << digest << "\n";
  for (const auto& [k, v] : metadata) os << "# " << k << "\t" << v << "\n";
  os << "# verdict\t" << (pass ? "pass" : "fail") << "\n";
  for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "\t" : "") << header[c];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "\t" : "") << row[c];
    os << "\n";
  }
  return os.str();
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12e%+.12ei", z.real(), z.imag());
  return buf;
}

std::string format_deviation(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Refuses up front when some degree up to max_total has too many words.
void check_budget(std::size_t n, int max_total) {
  for (const auto& m : graded_multidegrees(n, max_total, max_total)) {
    double count = 1;
    int acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 1; k <= m[i]; ++k) count = count * ++acc / k;
    if (count > static_cast<double>(kMaxBlockWords))
      throw ResourceError("cli/run", "degree " + m.to_string() + " has more than " + std::to_string(kMaxBlockWords) +
                                         " words; lower max_degree or depth");
  }
}

struct Session {
  CartanDatum cd;
  std::vector<Weight> weights;
  Denominator D;
  int cap;

  explicit Session(const SessionConfig& cfg)
      : cd(build_realization(cfg.matrix, cfg.symmetrizer)), cap(std::max(cfg.max_degree, cfg.depth)) {
    for (const auto& w : cfg.highest_weights) weights.push_back(highest_weight(cd, w));
    D = session_denominator(cd, weights);
  }

  void budget(int max_total) const { check_budget(cd.n(), max_total); }

  const Weight& first_weight() const {
    if (weights.empty()) throw Error("cli/run", "this command needs a highest weight (hw)");
    return weights.front();
  }
};

QuantumModule quantum_module(const Weight& w, const SessionConfig& cfg, const DrinfeldPairing& b) {
  return cfg.module == ModuleType::kVerma ? verma(w, cfg.depth, b) : irreducible(w, cfg.depth, b);
}

Report run_symmetrize(const SessionConfig& cfg, Report r) {
  Session s(cfg);
  r.metadata.push_back({"n", std::to_string(s.cd.n())});
  r.metadata.push_back({"h_dim", std::to_string(s.cd.h_dim())});
  r.metadata.push_back({"denominator", std::to_string(s.D.value())});
  r.header = {"index", "d"};
  for (std::size_t i = 0; i < s.cd.n(); ++i) r.rows.push_back({std::to_string(i + 1), s.cd.d(i).to_string()});
  return r;
}

Report run_relations(const SessionConfig& cfg, Report r) {
  Session s(cfg);
  s.budget(cfg.max_degree);
  DrinfeldPairing b(s.cd, s.D, s.cap);
  ClassicalRelations rel(s.cd, s.cap);
  r.metadata.push_back({"denominator", std::to_string(s.D.value())});
  r.header = {"degree", "words", "kernel_rank", "quotient_dim", "classical_rank", "flat"};
  for (const auto& m : graded_multidegrees(s.cd.n(), 1, cfg.max_degree)) {
    const auto& red = b.reduction(m);
    const long classical = rel.relation_rank(m);
    const bool flat = classical == static_cast<long>(red.radical_dim());
    r.pass = r.pass && flat;
    r.rows.push_back({m.to_string(), std::to_string(red.words.size()), std::to_string(red.radical_dim()),
                      std::to_string(red.dim()), std::to_string(classical), yes_no(flat)});
  }
  return r;
}

Report run_dims(const SessionConfig& cfg, Report r) {
  Session s(cfg);
  s.budget(cfg.max_degree);
  ClassicalRelations rel(s.cd, s.cap);
  const auto mult = root_multiplicities(rel, cfg.max_degree);
  std::optional<std::map<Multidegree, long>> oracle;
  if (s.cd.is_generalized_cartan()) oracle = weyl_kac_multiplicities(s.cd, cfg.max_degree);
  r.metadata.push_back({"oracle", oracle ? "weyl-kac" : "none"});
  r.header = {"root", "multiplicity", "weyl_kac", "match"};
  std::set<Multidegree> roots;
  for (const auto& [m, k] : mult)
    if (k != 0) roots.insert(m);
  if (oracle)
    for (const auto& [m, k] : *oracle)
      if (k != 0) roots.insert(m);
  for (const auto& m : roots) {
    auto get = [&m](const std::map<Multidegree, long>& t) {
      auto it = t.find(m);
      return it == t.end() ? 0L : it->second;
    };
    const long k = get(mult);
    std::string wk = "-", match = "-";
    if (oracle) {
      const long o = get(*oracle);
      wk = std::to_string(o);
      match = yes_no(o == k);
      r.pass = r.pass && o == k;
    }
    r.rows.push_back({m.to_string(), std::to_string(k), wk, match});
  }
  return r;
}

Report run_character(const SessionConfig& cfg, Report r) {
  Session s(cfg);
  s.budget(cfg.depth);
  if (s.weights.empty()) throw Error("cli/run", "character needs at least one highest weight (hw)");
  DrinfeldPairing b(s.cd, s.D, s.cap);
  r.metadata.push_back({"module", cfg.module == ModuleType::kVerma ? "verma" : "irreducible"});
  r.header = {"weight", "offset", "dim"};
  for (std::size_t w = 0; w < s.weights.size(); ++w) {
    const auto mod = quantum_module(s.weights[w], cfg, b);
    for (const auto& [m, d] : character(mod)) r.rows.push_back({std::to_string(w + 1), m.to_string(), std::to_string(d)});
  }
  return r;
}

Report run_compare(const SessionConfig& cfg, Report r) {
  Session s(cfg);
  s.budget(cfg.depth);
  if (s.weights.empty()) throw Error("cli/run", "compare-characters needs at least one highest weight (hw)");
  DrinfeldPairing b(s.cd, s.D, s.cap);
  ClassicalRelations rel(s.cd, s.cap);
  r.metadata.push_back({"module", cfg.module == ModuleType::kVerma ? "verma" : "irreducible"});
  r.header = {"weight", "offset", "quantum", "classical", "match"};
  bool relations = true;
  for (std::size_t w = 0; w < s.weights.size(); ++w) {
    const auto qm = quantum_module(s.weights[w], cfg, b);
    const auto cm = classical_module(s.weights[w], cfg.module, cfg.depth, rel);
    const auto check = check_module_relations(qm);
    if (!check.ok) {
      relations = false;
      r.metadata.push_back({"relation_failure", std::to_string(w + 1) + " " + check.failure});
    }
    const auto cmp = compare_characters(qm, cm);
    r.pass = r.pass && cmp.equal;
    for (const auto& [m, dq] : cmp.quantum) {
      const long dc = cmp.classical.at(m);
      r.rows.push_back({std::to_string(w + 1), m.to_string(), std::to_string(dq), std::to_string(dc), yes_no(dq == dc)});
    }
  }
  r.metadata.push_back({"module_relations", relations ? "ok" : "fail"});
  r.pass = r.pass && relations;
  return r;
}

Report run_ybe(const SessionConfig& cfg, Report r) {
  Session s(cfg);
  s.budget(cfg.depth);
  const Weight& lambda = s.first_weight();
  DrinfeldPairing b(s.cd, s.D, s.cap);
  const auto v = quantum_module(lambda, cfg, b);
  RMatrixData data(b);
  std::vector<const QuantumModule*> f2(2, &v);
  const QMatrix top = r_action(f2, tensor_block(f2, Multidegree::zero(s.cd.n())), 0, data);
  const bool highest = top.rows() == 1 && top(0, 0) == q_power(weight_form(lambda, lambda, s.cd), s.D);
  r.metadata.push_back({"highest_pair_eigenvalue", highest ? "ok" : "fail"});
  const auto report = check_ybe(v, cfg.depth, data);
  r.header = {"total", "size", "braid_relation"};
  for (const auto& blk : report.blocks)
    r.rows.push_back({blk.total.to_string(), std::to_string(blk.size), blk.holds ? "pass" : "fail"});
  r.pass = highest && report.ok;
  return r;
}

Report run_dk(const SessionConfig& cfg, Report r) {
  Session s(cfg);
  s.budget(cfg.depth);
  const Weight& lambda = s.first_weight();
  DrinfeldPairing b(s.cd, s.D, s.cap);
  ClassicalRelations rel(s.cd, s.cap);
  const auto qm = quantum_module(lambda, cfg, b);
  const auto cm = classical_module(lambda, cfg.module, cfg.depth, rel);
  CasimirData casimir(rel, cfg.depth);
  RMatrixData data(b);
  IntegratorOptions opts;
  opts.rel_tol = cfg.tol;
  opts.abs_tol = cfg.tol * 1e-3;
  const auto report = drinfeld_kohno_compare(cm, qm, casimir, data, static_cast<std::size_t>(cfg.strands), cfg.depth,
                                             cfg.hbar, cfg.wordlen, opts);
  r.metadata.push_back({"max_deviation", format_deviation(report.max_deviation)});
  r.header = {"total", "size", "kind", "item", "monodromy", "braided", "deviation"};
  for (const auto& blk : report.blocks) {
    for (const auto& e : blk.eigenvalues)
      for (std::size_t a = 0; a < e.monodromy.size(); ++a)
        r.rows.push_back({blk.total.to_string(), std::to_string(blk.size), "eigenvalue",
                          "b" + std::to_string(e.generator), format_complex(e.monodromy[a]),
                          format_complex(e.braided[a]), format_deviation(e.deviation)});
    for (const auto& t : blk.traces)
      r.rows.push_back({blk.total.to_string(), std::to_string(blk.size), "trace", t.word, format_complex(t.monodromy),
                        format_complex(t.braided), format_deviation(std::abs(t.monodromy - t.braided))});
  }
  r.pass = report.max_deviation < cfg.max_deviation;
  return r;
}

}  // namespace

Report run(const std::string& command, const SessionConfig& config) {
  Report r;
  r.command = command;
  r.input_digest = fnv1a(emit_config(config));
  if (command == "symmetrize") return run_symmetrize(config, std::move(r));
  if (command == "relations") return run_relations(config, std::move(r));
  if (command == "dims") return run_dims(config, std::move(r));
  if (command == "character") return run_character(config, std::move(r));
  if (command == "compare-characters") return run_compare(config, std::move(r));
  if (command == "ybe") return run_ybe(config, std::move(r));
  if (command == "dk") return run_dk(config, std::move(r));
  throw Error("cli/run", "unknown command '" + command + "'");
}

}  // namespace kmq
