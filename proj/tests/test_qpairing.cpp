#include "doctest.h"
#include "kmq/error.hpp"
#include "kmq/qpairing.hpp"
#include "support/hopf_oracle.hpp"

using namespace kmq;

namespace {

QScalar q(long e) { return QScalar::v_power(e); }

bool matches_oracle(const DrinfeldPairing& pairing, int max_total) {
  const auto& cd = pairing.datum();
  oracle::HopfOracle slow(cd, pairing.denominator());
  for (const auto& m : graded_multidegrees(cd.n(), 0, max_total)) {
    auto words = enumerate_words(m);
    for (const auto& x : words)
      for (const auto& y : words)
        if (pairing.pair_words(x, y) != slow.pair(x, y)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generator normalization") {
  auto cd = build_realization(parse_matrix("2 -1; -1 2"));
  DrinfeldPairing b(cd, Denominator(1));
  const QScalar inv = QScalar(1) / q_minus_q_inverse(Denominator(1));
  CHECK(b.pair_words(Word::parse("1"), Word::parse("1")) == inv);
  CHECK(b.pair_words(Word::parse("2"), Word::parse("2")) == inv);
  CHECK(b.pair_words(Word::parse("1"), Word::parse("2")).is_zero());
  CHECK(b.pair_words(Word(), Word()).is_one());
  auto g = b.gram_block(Multidegree({1, 0}));
  REQUIRE(g.matrix.rows() == 1);
  CHECK(g.matrix(0, 0) == inv);
  CHECK(b.gram_block(Multidegree({0, 0})).matrix(0, 0).is_one());
  // the normalization does not see d_i
  auto b2 = build_realization(parse_matrix("2 -2; -1 2"));
  DrinfeldPairing bb(b2, Denominator(1));
  CHECK(bb.pair_words(Word::parse("2"), Word::parse("2")) == inv);
}

TEST_CASE("sl2 degree two") {
  auto cd = build_realization(parse_matrix("2"));
  DrinfeldPairing b(cd, Denominator(1));
  const QScalar d = q_minus_q_inverse(Denominator(1));
  CHECK(b.pair_words(Word::parse("11"), Word::parse("11")) == q(-1) * q_integer(2, Rational(1), Denominator(1)) / (d * d));
  for (int k = 1; k <= 6; ++k) {
    auto kb = b.kernel_block(Multidegree({k}));
    CHECK(kb.vectors.empty());
    CHECK(kb.quotient_dim == 1);
  }
}

TEST_CASE("agreement with the Hopf-axiom oracle") {
  SUBCASE("sl3") {
    DrinfeldPairing b(build_realization(parse_matrix("2 -1; -1 2")), Denominator(1));
    CHECK(matches_oracle(b, 4));
  }
  SUBCASE("B2") {
    DrinfeldPairing b(build_realization(parse_matrix("2 -2; -1 2")), Denominator(1));
    CHECK(matches_oracle(b, 4));
  }
  SUBCASE("affine sl2") {
    DrinfeldPairing b(build_realization(parse_matrix("2 -2; -2 2")), Denominator(1));
    CHECK(matches_oracle(b, 4));
  }
  SUBCASE("rational matrix") {
    auto cd = build_realization(parse_matrix("2 -1/2; -1/2 2"));
    DrinfeldPairing b(cd, session_denominator(cd));
    CHECK(matches_oracle(b, 4));
  }
  SUBCASE("rank three") {
    DrinfeldPairing b(build_realization(parse_matrix("2 -1 0; -1 2 -2; 0 -1 2")), Denominator(1));
    CHECK(matches_oracle(b, 3));
  }
}

TEST_CASE("the opposite exponent sign disagrees with the oracle") {
  auto cd = build_realization(parse_matrix("2 -1; -1 2"));
  DrinfeldPairing minus(cd, Denominator(1), kDefaultDegreeCap, ExponentSign::kMinus);
  DrinfeldPairing plus(cd, Denominator(1), kDefaultDegreeCap, ExponentSign::kPlus);
  CHECK(kPairingSign == ExponentSign::kMinus);
  oracle::HopfOracle slow(cd, Denominator(1));
  const Word x = Word::parse("12"), y = Word::parse("21");
  CHECK(minus.pair_words(x, y) == slow.pair(x, y));
  CHECK(plus.pair_words(x, y) != slow.pair(x, y));
  // both signs still give symmetric blocks containing the Serre element
  for (const auto* b : {&plus, &minus}) {
    auto g = b->normalized_gram(Multidegree({2, 1}));
    CHECK(g == QMatrix(g.transpose()));
    CHECK(verify_serre_in_kernel(0, 1, *b).in_kernel);
  }
}

TEST_CASE("sl3 degree (2,1)") {
  DrinfeldPairing b(build_realization(parse_matrix("2 -1; -1 2")), Denominator(1));
  auto n = b.normalized_gram(Multidegree({2, 1}));
  QMatrix expected(3, 3);
  expected << q(-2) + 1, q(1) + q(-1), q(2) + 1,
              q(1) + q(-1), QScalar(2), q(1) + q(-1),
              q(2) + 1, q(1) + q(-1), q(-2) + 1;
  CHECK(n == expected);
  CHECK(rank(n) == 2);
  auto kb = b.kernel_block(Multidegree({2, 1}));
  CHECK(kb.vectors.size() == 1);
  CHECK(kb.quotient_dim == 2);
}

TEST_CASE("Gram blocks are symmetric and graded") {
  for (const char* a : {"2 -1; -1 2", "2 -2; -2 2", "2 -3; -1 2"}) {
    DrinfeldPairing b(build_realization(parse_matrix(a)), Denominator(1));
    for (const auto& m : graded_multidegrees(2, 0, 5)) {
      auto g = b.gram_block(m);
      CHECK(static_cast<long>(g.basis.size()) == multinomial(m));
      CHECK(g.matrix == QMatrix(g.matrix.transpose()));
    }
    CHECK(b.pair_words(Word::parse("12"), Word::parse("11")).is_zero());
    CHECK(b.pair_words(Word::parse("1"), Word::parse("11")).is_zero());
  }
}

TEST_CASE("quantum Serre elements") {
  const Denominator D(1);
  SUBCASE("sl3 element") {
    auto cd = build_realization(parse_matrix("2 -1; -1 2"));
    auto s = quantum_serre_element(0, 1, cd, D);
    CHECK(s.degree() == Multidegree({2, 1}));
    const QScalar inv2 = QScalar(1) / q_integer(2, Rational(1), D);
    CHECK(s.terms().at(Word::parse("112")) == inv2);
    CHECK(s.terms().at(Word::parse("121")) == QScalar(-1));
    CHECK(s.terms().at(Word::parse("211")) == inv2);
  }
  SUBCASE("commuting pair") {
    auto cd = build_realization(parse_matrix("2 0; 0 2"));
    auto s = quantum_serre_element(0, 1, cd, D);
    CHECK(s.terms().size() == 2);
    CHECK(s.terms().at(Word::parse("12")).is_one());
    CHECK(s.terms().at(Word::parse("21")) == QScalar(-1));
  }
  SUBCASE("a_12 = -2") {
    auto cd = build_realization(parse_matrix("2 -2; -2 2"));
    auto s = quantum_serre_element(0, 1, cd, D);
    CHECK(s.terms().size() == 4);
    CHECK(s.degree() == Multidegree({3, 1}));
  }
  SUBCASE("membership") {
    for (const char* a : {"2 0; 0 2", "2 -1; -1 2", "2 -2; -2 2", "2 -2; -1 2", "2 -3; -1 2"}) {
      DrinfeldPairing b(build_realization(parse_matrix(a)), D);
      CHECK(verify_serre_in_kernel(0, 1, b).in_kernel);
      CHECK(verify_serre_in_kernel(1, 0, b).in_kernel);
    }
  }
  SUBCASE("errors") {
    auto rat = build_realization(parse_matrix("2 -1/2; -1/2 2"));
    CHECK_THROWS_AS(quantum_serre_element(0, 1, rat, Denominator(2)), NotApplicable);
    auto cd = build_realization(parse_matrix("2 -1; -1 2"));
    CHECK_THROWS_AS(quantum_serre_element(0, 0, cd, D), NotApplicable);
  }
}

TEST_CASE("the kernel is a two-sided ideal") {
  auto cd = build_realization(parse_matrix("2 -2; -2 2"));
  DrinfeldPairing b(cd, Denominator(1));
  for (const auto& m : graded_multidegrees(2, 2, 4)) {
    auto kb = b.kernel_block(m);
    for (const auto& r : kb.vectors) {
      for (std::size_t i = 0; i < 2; ++i) {
        auto gen = FreeElement::generator(2, i);
        for (const auto& prod : {free_mul(gen, r), free_mul(r, gen)})
          for (const auto& y : enumerate_words(prod.degree())) {
            QScalar acc;
            for (const auto& [w, c] : prod.terms()) acc += c * b.normalized_pair(w, y);
            CHECK(acc.is_zero());
          }
      }
    }
  }
}

TEST_CASE("quotient dimensions") {
  DrinfeldPairing sl2(build_realization(parse_matrix("2")), Denominator(1));
  for (const auto& [m, dim] : quotient_dims(sl2, 6)) CHECK(dim == 1);
  DrinfeldPairing sl3(build_realization(parse_matrix("2 -1; -1 2")), Denominator(1));
  auto dims = quotient_dims(sl3, 4);
  CHECK(dims.at(Multidegree({1, 1})) == 2);
  CHECK(dims.at(Multidegree({2, 1})) == 2);
  CHECK(dims.at(Multidegree({1, 2})) == 2);
  CHECK(dims.at(Multidegree({2, 2})) == 3);
  CHECK(dims.at(Multidegree({3, 1})) == 2);
  CHECK(dims.at(Multidegree({4, 0})) == 1);
  CHECK_THROWS_AS(sl3.gram_block(Multidegree({5, 4})), ResourceError);
}

TEST_CASE("reduction reproduces the pairing") {
  DrinfeldPairing b(build_realization(parse_matrix("2 -1; -1 2")), Denominator(1));
  const auto& red = b.reduction(Multidegree({2, 2}));
  CHECK(red.dim() == 3);
  // B(w, y) = sum_a coord_a(w) B(basis_a, y)
  for (const auto& w : red.words) {
    auto c = red.reduce(w);
    for (const auto& y : red.words) {
      QScalar acc;
      for (std::size_t a = 0; a < red.dim(); ++a) acc += c(static_cast<Index>(a)) * b.normalized_pair(red.basis_word(a), y);
      CHECK(acc == b.normalized_pair(w, y));
    }
  }
}
