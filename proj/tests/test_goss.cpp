#include <doctest.h>

#include "qshuffle/goss.hpp"

using namespace qshuffle;

TEST_SUITE("goss") {
  TEST_CASE("goss examples") {
    CHECK(goss(1, 2).to_string() == "X");
    CHECK(goss(1, 9).to_string() == "X");
    CHECK(goss(4, 3).to_string() == "X^4 + a1*X^2");
    CHECK(goss(3, 2).to_string() == "X^3 + a1*X^2");
    CHECK_THROWS_AS(goss(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(goss(3, 6), std::invalid_argument);
  }

  TEST_CASE("G_n = X^n for n <= q") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      for (int n = 1; n <= static_cast<int>(q); ++n) {
        CAPTURE(q);
        CAPTURE(n);
        const auto g = goss(n, q);
        CHECK(g.is_pure_power());
        CHECK(g.to_string() == (n == 1 ? std::string("X") : "X^" + std::to_string(n)));
      }
    }
  }

  TEST_CASE("G_{q+1} = X^{q+1} + a1 X^2") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
      const auto g = goss(static_cast<int>(q) + 1, q);
      REQUIRE(g.coeffs.size() == 2);
      CHECK(g.is_monic());
      CHECK(g.coeffs.at(2) == FormalCoeff::alpha(PrimeField(prime_power(q).p), 1));
    }
  }

  TEST_CASE("goss_table examples") {
    auto t = goss_table(3, 3);
    REQUIRE(t.size() == 3);
    CHECK(t[0].to_string() == "X");
    CHECK(t[1].to_string() == "X^2");
    CHECK(t[2].to_string() == "X^3");
    CHECK(goss_table(4, 3).back().to_string() == "X^4 + a1*X^2");
    CHECK(goss_table(1, 2).size() == 1);
    CHECK_THROWS_AS(goss_table(0, 2), std::invalid_argument);
  }

  TEST_CASE("monic of degree n and divisible by X for n <= 200") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
      const auto t = goss_table(200, q);
      for (int n = 1; n <= 200; ++n) {
        const auto& g = t[n - 1];
        REQUIRE(g.n == n);
        REQUIRE(g.degree() == n);
        REQUIRE(g.is_monic());
        REQUIRE(g.divisible_by_x());
        REQUIRE(g.specialize_zero().is_pure_power());
        if (n <= static_cast<int>(q)) REQUIRE(g.is_pure_power());
      }
      bool seen = false;
      for (int n = q + 1; n <= static_cast<int>(2 * q); ++n) seen = seen || t[n - 1].mentions_alpha1();
      CHECK(seen);
    }
  }

  TEST_CASE("table entries equal direct evaluation") {
    const auto t = goss_table(40, 3);
    for (int n = 1; n <= 40; ++n) CHECK(t[n - 1].to_string() == goss(n, 3).to_string());
  }

  TEST_CASE("upper index equals ceil(log_q n) - 1 for n <= 10^4") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u}) {
      for (int n = 1; n <= 10000; ++n) {
        // smallest k with q^k >= n
        int k = 0;
        for (std::int64_t v = 1; v < n; v *= q) ++k;
        REQUIRE(goss_upper_index(n, q) == k - 1);
      }
    }
  }

  TEST_CASE("formatting of compound coefficients and JSON form") {
    // q = 2: G_5 = X^5 + a1 X^4 + ... collects several monomials in some degree
    const auto g = goss(5, 2);
    const std::string s = g.to_string();
    CHECK(s.rfind("X^5", 0) == 0);
    const auto j = goss(4, 3).to_json();
    CHECK(j.dump() == R"({"2":"a1","4":"1"})");
    PrimeField f(3);
    FormalCoeff c = FormalCoeff::alpha(f, 1);
    c += FormalCoeff::alpha(f, 2).times_alpha(2);
    c.add_term({}, 2);
    CHECK(c.to_string() == "2 + a1 + a2^2");
    GossPolynomial p{3, 3, {}};
    p.coeffs.emplace(3, FormalCoeff::constant(f, 1));
    p.coeffs.emplace(1, c);
    CHECK(p.to_string() == "X^3 + (2 + a1 + a2^2)*X");
  }
}
