#include <doctest.h>

#include <random>

#include "qshuffle/laurent.hpp"

using namespace qshuffle;

namespace {

using Elem = FiniteField::Elem;

// Long division, coefficient by coefficient: b_k = -u0^-1 sum_{i>=1} u_i b_{k-i}.
std::vector<Elem> naive_inverse(const FiniteField& f, const std::vector<Elem>& u, std::size_t n) {
  std::vector<Elem> b(n, 0);
  const Elem inv0 = f.inv(u[0]);
  for (std::size_t k = 0; k < n; ++k) {
    Elem s = k == 0 ? f.one() : f.zero();
    for (std::size_t i = 1; i <= k && i < u.size(); ++i) s = f.sub(s, f.mul(u[i], b[k - i]));
    b[k] = f.mul(s, inv0);
  }
  return b;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("printing in theta powers") {
    const auto f2 = make_field(2);
    const LaurentSeries s(f2, 2, {1, 1}, 30);
    CHECK(s.to_string() == "t^-2 + t^-3 + O(t^-31)");
    CHECK(LaurentSeries::one(f2).to_string() == "1");
    CHECK(LaurentSeries::zero(f2, 5).to_string() == "O(t^-6)");
    CHECK(LaurentSeries::from_theta_poly(f2, {0, 1, 1}).to_string() == "t^2 + t");
    const auto f4 = make_field(4);
    CHECK(LaurentSeries(f4, 1, {2}, 3).to_string() == "[0,1]*t^-1 + O(t^-4)");
  }

  TEST_CASE("JSON form") {
    const auto f3 = make_field(3);
    CHECK(LaurentSeries(f3, 1, {2, 0, 1}, 4).to_json().dump() ==
          R"({"coeffs":[2,0,1],"precision":4,"valuation":1})");
    CHECK(LaurentSeries::one(f3).to_json().dump() == R"({"coeffs":[1],"precision":null,"valuation":0})");
  }

  TEST_CASE("normalization strips zeros and beyond-precision terms") {
    const auto f3 = make_field(3);
    const LaurentSeries s(f3, -1, {0, 0, 2, 1, 1}, 2);
    CHECK(s.valuation() == 1);
    CHECK(s.coeffs() == std::vector<Elem>{2, 1});
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
    const LaurentSeries z(f3, 0, {0, 0}, 4);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 5);
  }

  TEST_CASE("precision rules for sums and products") {
    const auto f5 = make_field(5);
    const LaurentSeries a(f5, 1, {1, 2}, 10), b(f5, 3, {4}, 6);
    CHECK((a + b).precision() == 6);
    CHECK((a * b).precision() == std::min(1 + 6, 3 + 10));
    const auto theta = LaurentSeries::from_theta_poly(f5, {0, 1});
    CHECK((theta * a).precision() == 9);
    CHECK((theta * theta).is_exact());
    CHECK((a - a).is_zero());
  }

  TEST_CASE("Newton inverse agrees with long division") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
      const auto f = make_field(q);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<Elem> u(1 + rng() % 6);
        for (auto& c : u) c = static_cast<Elem>(rng() % q);
        if (u[0] == 0) u[0] = 1;
        const std::size_t n = 1 + rng() % 40;
        REQUIRE(inverse_power_series(*f, u, n) == naive_inverse(*f, u, n));
      }
    }
  }

  TEST_CASE("series inverse round trip") {
    const auto f3 = make_field(3);
    const auto p = LaurentSeries::from_theta_poly(f3, {1, 0, 2, 1});  // theta^3 + 2 theta^2 + 1
    const auto inv = p.inverse(20);
    CHECK(inv.valuation() == 3);
    CHECK(inv.precision() == 20);
    const auto prod = (p * inv).truncated(17);
    CHECK(prod == LaurentSeries::one(f3, 17));
    CHECK_THROWS_AS(p.inverse(), std::invalid_argument);
    CHECK_THROWS_AS(LaurentSeries::zero(f3, 4).inverse(3), DivisionByZero);
    const LaurentSeries s(f3, 1, {1, 1}, 8);
    CHECK(s.inverse().precision() == 8 - 2);
  }

  TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(11);
    const auto f = make_field(9);
    auto rnd = [&] {
      std::vector<Elem> c(rng() % 8);
      for (auto& x : c) x = static_cast<Elem>(rng() % 9);
      return LaurentSeries(f, static_cast<int>(rng() % 5) - 2, c, 12 + static_cast<int>(rng() % 5));
    };
    for (int k = 0; k < 200; ++k) {
      const auto a = rnd(), b = rnd(), c = rnd();
      REQUIRE(a * b == b * a);
      REQUIRE(a + b == b + a);
      const int p = std::min({(a * (b + c)).precision(), (a * b + a * c).precision()});
      REQUIRE((a * (b + c)).truncated(p) == (a * b + a * c).truncated(p));
    }
  }
}
