#include <random>

#include "doctest.h"
#include "kmq/error.hpp"
#include "kmq/freealg.hpp"

using namespace kmq;

namespace {

FreeElement random_element(std::mt19937& rng, const Multidegree& m) {
  std::uniform_int_distribution<int> coef(-3, 3);
  FreeElement e(m);
  for (const Word& w : enumerate_words(m))
    if (int c = coef(rng); c != 0) e.add_term(w, QScalar(c) * QScalar::v_power(coef(rng)));
  return e;
}

}  // namespace

TEST_CASE("word enumeration") {
  auto one = enumerate_words(Multidegree({1, 0}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Word::parse("1"));

  auto w21 = enumerate_words(Multidegree({2, 1}));
  REQUIRE(w21.size() == 3);
  CHECK(w21[0].to_string() == "112");
  CHECK(w21[1].to_string() == "121");
  CHECK(w21[2].to_string() == "211");

  CHECK(enumerate_words(Multidegree({2, 2})).size() == 6);
  CHECK(enumerate_words(Multidegree({0, 0})).size() == 1);
  CHECK_THROWS_AS(enumerate_words(Multidegree({5, 4})), ResourceError);

  for (const auto& m : graded_multidegrees(3, 0, 5)) CHECK(static_cast<long>(enumerate_words(m).size()) == multinomial(m));
}

TEST_CASE("word weight") {
  auto cd = build_realization(parse_matrix("2 -1; -1 2"));
  CHECK(word_weight(Word::parse("121"), cd) == Multidegree({2, 1}));
  CHECK(word_weight(Word(), cd) == Multidegree({0, 0}));
  CHECK(word_weight(Word::parse("211"), cd) == word_weight(Word::parse("112"), cd));
}

TEST_CASE("free multiplication") {
  const std::size_t n = 2;
  auto e1 = FreeElement::generator(n, 0), e2 = FreeElement::generator(n, 1);
  auto p = free_mul(e1, e2);
  CHECK(p.terms().size() == 1);
  CHECK(p.terms().begin()->first == Word::parse("12"));
  CHECK(p.terms().begin()->second.is_one());

  FreeElement s = e1;
  CHECK_THROWS(s.add_term(Word::parse("2"), QScalar(1)));
  CHECK_THROWS(s.add_term(Word::parse("12"), QScalar(1)));
  CHECK_THROWS(e1 + e2);

  auto e12 = free_mul(e1 + FreeElement(Multidegree::unit(n, 0)), e1);
  CHECK(e12.terms().size() == 1);
  CHECK(e12.degree() == Multidegree({2, 0}));

  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_element(rng, Multidegree({1, 1}));
    auto b = random_element(rng, Multidegree({1, 0}));
    auto c = random_element(rng, Multidegree({0, 2}));
    auto left = free_mul(free_mul(a, b), c);
    auto right = free_mul(a, free_mul(b, c));
    CHECK(left == right);
    CHECK(left.degree() == Multidegree({2, 3}));
  }
}

TEST_CASE("unit and zero") {
  auto u = FreeElement::unit(2);
  auto e = FreeElement::generator(2, 1);
  CHECK(free_mul(u, e) == e);
  CHECK(free_mul(e, u) == e);
  auto z = e * QScalar();
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");
}
