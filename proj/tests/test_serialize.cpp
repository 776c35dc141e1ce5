#include <doctest.h>

#include <random>

#include "qshuffle/serialize.hpp"

using namespace qshuffle;

namespace {

Index random_composition(std::mt19937_64& rng, int n) {
  std::vector<int> v;
  while (n > 0) {
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    v.push_back(k);
    n -= k;
  }
  return Index(std::move(v));
}

Element random_element(std::mt19937_64& rng, PrimeField f, int max_weight) {
  Element e(f);
  const int terms = static_cast<int>(rng() % 6);
  for (int t = 0; t < terms; ++t) {
    const int w = static_cast<int>(rng() % (max_weight + 1));
    const int wx = static_cast<int>(rng() % (w + 1));
    e.add_term(Word(random_composition(rng, wx), random_composition(rng, w - wx)),
               static_cast<Coeff>(rng() % f.p()));
  }
  return e;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("format examples") {
    PrimeField f3(3);
    Element e = Element::x(f3, {1, 2}) + Element::y(f3, {3}).scaled(2);
    CHECK(format_element(e) == "x[1,2] + 2*y[3]");
    CHECK(format_element(Element::zero(f3)) == "0");
    CHECK(format_element(Element::one(f3)) == "1");
    CHECK(format_word(Word({1}, {2})) == "x[1]y[2]");
  }

  TEST_CASE("parse examples") {
    PrimeField f3(3);
    CHECK(parse_word("x[1]y[2]") == Word({1}, {2}));
    CHECK(parse_word("1") == Word{});
    CHECK(parse_element("x[1,2] + 2*y[3]", f3) ==
          Element::x(f3, {1, 2}) + Element::y(f3, {3}).scaled(2));
    CHECK(parse_element("x[1] - x[1]", f3).is_zero());
    CHECK(parse_element("-x[2]", f3).coeff(Word::xw({2})) == 2);
    CHECK(parse_element("5*x[2]", f3).coeff(Word::xw({2})) == 2);
    CHECK(parse_element("0", f3).is_zero());
    CHECK(parse_element("1 + x[1]", f3).size() == 2);
  }

  TEST_CASE("parse errors report position and expectation") {
    PrimeField f3(3);
    try {
      parse_element("x[0]", f3);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
      CHECK(e.expected() == "index entry >= 1");
    }
    CHECK_THROWS_AS(parse_element("x[1", f3), ParseError);
    CHECK_THROWS_AS(parse_element("x[1] +", f3), ParseError);
    CHECK_THROWS_AS(parse_element("z[1]", f3), ParseError);
    CHECK_THROWS_AS(parse_element("y[1]x[2]", f3), ParseError);
    CHECK_THROWS_AS(parse_word("x[]"), ParseError);
    CHECK_THROWS_AS(parse_tensor("x[1] x[2]", f3), ParseError);
  }

  TEST_CASE("tensor text form") {
    PrimeField f5(5);
    TensorElement t(f5, Word{}, Word::xw({1}));
    t.add_term(Word::xw({1}), Word{}, 4);
    CHECK(format_tensor(t) == "1 (x) x[1] + 4*x[1] (x) 1");
    CHECK(parse_tensor("1 (x) x[1] - x[1] (x) 1", f5) == t);
  }

  TEST_CASE("text and JSON round-trips on 1000 pseudorandom elements") {
    std::mt19937_64 rng(20261015);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      PrimeField f(p);
      for (int n = 0; n < 250; ++n) {
        const Element e = random_element(rng, f, 8);
        REQUIRE(parse_element(format_element(e), f) == e);
        REQUIRE(element_from_json(element_to_json(e), f) == e);
        const TensorElement t = TensorElement::outer(e, random_element(rng, f, 4));
        REQUIRE(parse_tensor(format_tensor(t), f) == t);
        REQUIRE(tensor_from_json(tensor_to_json(t), f) == t);
      }
    }
  }

  TEST_CASE("JSON schema shape") {
    PrimeField f3(3);
    const auto j = element_to_json(Element(f3, Word({1}, {2}), 2));
    CHECK(j.dump() == R"([{"coeff":2,"x":[1],"y":[2]}])");
  }
}
