#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include "doctest.h"
#include "kmq/cli.hpp"
#include "kmq/error.hpp"

using namespace kmq;

namespace {

bool has_row(const Report& r, const std::vector<std::string>& prefix) {
  for (const auto& row : r.rows)
    if (std::equal(prefix.begin(), prefix.end(), row.begin())) return true;
  return false;
}

int exit_code(const std::string& args) {
  const std::string cmd = std::string(KMQ_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse_config") {
  SUBCASE("defaults and symmetrizer") {
    auto c = parse_config("matrix = 2 -1; -1 2\n");
    CHECK(c.symmetrizer == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(!c.d.has_value());
    CHECK(c.max_degree == 6);
    CHECK(c.module == ModuleType::kIrreducible);
  }
  SUBCASE("comments, blanks and every key") {
    auto c = parse_config(
        "# session\n\nmatrix = 2 -2; -1 2   # affine type\nd = 1 2\nmax_degree = 5\ndepth = 3\nhw = 1 0; 0 1\n"
        "hbar = 0.1 0.02\ntol = 1e-8\nwordlen = 3\nstrands = 4\nmodule = verma\nmax_deviation = 1e-5\n");
    CHECK(c.symmetrizer == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(c.highest_weights.size() == 2);
    CHECK(c.hbar == std::complex<double>(0.1, 0.02));
    CHECK(c.module == ModuleType::kVerma);
    CHECK(c.strands == 4);
  }
  SUBCASE("not symmetrizable") {
    try {
      parse_config("matrix = 2 -1; 0 2\n");
      FAIL("expected NotSymmetrizable");
    } catch (const NotSymmetrizable& e) {
      CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }
  }
  SUBCASE("rational matrix") {
    auto c = parse_config("matrix = 2 -1/2; -1/2 2\n");
    auto r = run("symmetrize", c);
    CHECK(std::find(r.metadata.begin(), r.metadata.end(), std::make_pair(std::string("denominator"), std::string("2"))) !=
          r.metadata.end());
  }
}

TEST_CASE("parse errors carry line and column") {
  auto expect = [](const std::string& text, int line, int column) {
    try {
      parse_config(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect("matrix = 2 -1; -1 x\n", 1, 19);
  expect("matrix = 2\nbogus = 1\n", 2, 1);
  expect("matrix = 2\n  depth 3\n", 2, 3);
  expect("matrix = 2\ndepth = three\n", 2, 9);
  expect("matrix = 2 -1; -1\n", 1, 10);
  expect("matrix = 2\nmatrix = 2\n", 2, 1);
  expect("depth = 3\n", 2, 1);
  CHECK_THROWS_AS(parse_config("matrix = 2\nhw = 1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_config("matrix = 2 -1; -1 2\nd = 1\n"), Error);
}

TEST_CASE("emit round trip") {
  for (const char* text : {"matrix = 2\n", "matrix = 2 -1/2; -1/2 2\nhw = 1/3 1\nhbar = 0.1 -0.25\n",
                           "matrix = 2 -2; -1 2\nd = 2 4\nmodule = verma\ntol = 3.3e-10\nmax_deviation = 0.001\n"}) {
    auto c = parse_config(text);
    const std::string emitted = emit_config(c);
    CHECK(parse_config(emitted) == c);
    CHECK(emit_config(parse_config(emitted)) == emitted);
  }
}

TEST_CASE("commands") {
  SUBCASE("relations on sl3") {
    auto r = run("relations", parse_config("matrix = 2 -1; -1 2\nmax_degree = 4\n"));
    CHECK(r.pass);
    CHECK(has_row(r, {"(2,1)", "3", "1"}));
    CHECK(has_row(r, {"(1,2)", "3", "1"}));
    CHECK(has_row(r, {"(1,1)", "2", "0"}));
  }
  SUBCASE("dims on affine sl2") {
    auto r = run("dims", parse_config("matrix = 2 -2; -2 2\nmax_degree = 6\n"));
    CHECK(r.pass);
    CHECK(r.rows.size() == 9);
    for (const auto& row : r.rows) CHECK(row[1] == "1");
  }
  SUBCASE("compare-characters and character") {
    auto c = parse_config("matrix = 2 -1; -1 2\nhw = 1 0; 1 1\ndepth = 4\n");
    CHECK(run("compare-characters", c).pass);
    auto ch = run("character", c);
    CHECK(has_row(ch, {"2", "(1,1)", "2"}));
  }
  SUBCASE("ybe and dk") {
    auto c = parse_config("matrix = 2\nhw = 1\ndepth = 3\n");
    auto y = run("ybe", c);
    CHECK(y.pass);
    CHECK(y.rows.size() == 4);
    auto d = run("dk", c);
    CHECK(d.pass);
  }
  SUBCASE("missing weight") {
    CHECK_THROWS_AS(run("ybe", parse_config("matrix = 2\n")), Error);
  }
  SUBCASE("unknown command") {
    CHECK_THROWS_AS(run("nope", parse_config("matrix = 2\n")), Error);
  }
}

TEST_CASE("exact reports are deterministic") {
  auto c = parse_config("matrix = 2 -1; -1 2\nhw = 1 1\nmax_degree = 4\ndepth = 3\n");
  for (const char* cmd : {"symmetrize", "relations", "dims", "character", "compare-characters", "ybe"})
    CHECK(run(cmd, c).render() == run(cmd, c).render());
  CHECK(run("relations", c).input_digest == fnv1a(emit_config(c)));
}

TEST_CASE("exit codes") {
  CHECK(exit_code("symmetrize --matrix \"2 -2; -1 2\"") == 0);
  CHECK(exit_code("symmetrize --matrix \"2 -1; 0 2\"") == 1);
  CHECK(exit_code("frobnicate --matrix 2") == 2);
  CHECK(exit_code("symmetrize --matrix \"2 x\"") == 2);
  CHECK(exit_code("relations --matrix \"2 -1; -1 2\" --max-degree 20") == 3);
  CHECK(exit_code("dk --matrix 2 --hw 1 --depth 3 --wordlen 2 --max-deviation 1e-30") == 1);
  CHECK(exit_code("dk --matrix 2 --hw 1 --depth 3 --wordlen 3") == 0);
}
