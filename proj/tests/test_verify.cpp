#include <doctest.h>

#include <cstdlib>

#include "qshuffle/structure_maps.hpp"
#include "qshuffle/verify.hpp"

using namespace qshuffle;

namespace {

VerificationReport run(const std::string& name, std::uint32_t q, int cap, int threads = 1) {
  SweepOptions o;
  o.q = q;
  o.weight_cap = cap;
  o.threads = threads;
  return verify_property(name, o);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("every property passes at weight 4 for q = 2, 3, 4") {
    for (const auto& name : property_names()) {
      for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto r = run(name, q, 4);
        CAPTURE(name);
        CAPTURE(q);
        CHECK(r.pass());
        CHECK(r.checked == r.cases);
        CHECK(r.passed + r.failed == r.checked);
        CHECK(r.checked > 0);
        CHECK(r.witnesses.empty());
      }
    }
  }

  TEST_CASE("case counts match direct enumeration") {
    int triples = 0;
    const auto rw = r_words_up_to(3);
    for (const auto& u : rw)
      for (const auto& v : rw)
        for (const auto& w : rw) triples += u.weight() + v.weight() + w.weight() <= 3;
    CHECK(run("assoc-R", 2, 3).cases == static_cast<std::uint64_t>(triples));

    int pairs = 0;
    const auto ew = e_words_up_to(3);
    for (const auto& u : ew)
      for (const auto& v : ew) pairs += u.weight() + v.weight() <= 3;
    CHECK(run("comm", 3, 3).cases == static_cast<std::uint64_t>(pairs));
    CHECK(run("pi-hom", 3, 3).cases == static_cast<std::uint64_t>(pairs));
    CHECK(run("phi-iso", 2, 3).cases == run("phi-roundtrip", 2, 3).cases + run("phi-hom", 2, 3).cases);
  }

  TEST_CASE("documented sweeps") {
    const auto r = run("assoc-R", 3, 6, 0);
    CHECK(r.pass());
    CHECK(r.checked == 688);
    CHECK(run("ehat-hom", 2, 6, 0).pass());
    const auto small = run("assoc-E", 2, 2);
    CHECK(small.pass());
    CHECK(small.checked < 100);
  }

  TEST_CASE("thread count does not change the report") {
    const auto a = run("assoc-E", 3, 4, 1);
    const auto b = run("assoc-E", 3, 4, 4);
    CHECK(a.to_json().dump() == b.to_json().dump());
  }

  TEST_CASE("sampled sweeps are reproducible from the seed") {
    SweepOptions o;
    o.q = 2;
    o.weight_cap = 5;
    o.samples = 50;
    o.seed = 42;
    const auto a = verify_property("comm", o);
    const auto b = verify_property("comm", o);
    CHECK(a.sampled);
    CHECK(a.checked == 50);
    CHECK(a.cases > 50);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_json()["seed"] == 42);
    CHECK(a.to_text().find("seed 42") != std::string::npos);
    o.samples = 1'000'000;
    const auto all = verify_property("comm", o);
    CHECK_FALSE(all.sampled);
    CHECK(all.checked == all.cases);
  }

  TEST_CASE("report JSON") {
    const auto j = run("lemma-3-7", 2, 3).to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["property"] == "lemma-3-7");
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["pass"] == true);
    CHECK_FALSE(j.contains("wall_seconds"));
    CHECK(run("lemma-3-7", 2, 3).to_json(true).contains("wall_seconds"));
  }

  TEST_CASE("bad requests") {
    CHECK_THROWS_AS(run("commutativity", 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(run("comm", 6, 3), std::invalid_argument);
    CHECK_THROWS_AS(run("comm", 2, -1), std::invalid_argument);
    CHECK(is_property("lemma-3-9"));
  }

  TEST_CASE("QSHUFFLE_THREADS caps the worker count") {
    ::setenv("QSHUFFLE_THREADS", "3", 1);
    CHECK(resolve_threads(8) == 3);
    CHECK(resolve_threads(2) == 2);
    ::setenv("QSHUFFLE_THREADS", "junk", 1);
    CHECK(resolve_threads(5) == 5);
    ::unsetenv("QSHUFFLE_THREADS");
    CHECK(resolve_threads(0) >= 1);
  }

  TEST_CASE("the correction sum in the yx expansion is not vacuous") {
    // (y_1) * (y_2) at q = 2: the expansion without the Delta terms misses terms.
    ShuffleContext ctx(2);
    const PrimeField f(2);
    const Element A = Element::y(f, {1}), B = Element::y(f, {2});
    const Element one = Element::one(f);
    Element partial = element_left_mul_letter(Letter::y(1), shuffle_E(one, B, ctx));
    partial += element_left_mul_letter(Letter::y(2), shuffle_E(A, one, ctx));
    partial += element_left_mul_letter(Letter::y(3), one);
    CHECK_FALSE(ctx.delta_terms(1, 2).empty());
    CHECK(shuffle_E(A, B, ctx) != partial);
  }
}
