#include <doctest.h>

#include <fstream>

#include "qshuffle/hopf.hpp"
#include "qshuffle/serialize.hpp"

using namespace qshuffle;

namespace {

const std::string kFixture = std::string(QSHUFFLE_TEST_DATA_DIR) + "/hopf_fixture_q2_w3.json";

Element E2(const char* text) { return parse_element(text, PrimeField(2)); }

const AxiomReport& report(const std::vector<AxiomReport>& rs, const std::string& name) {
  for (const auto& r : rs) {
    if (r.axiom == name) return r;
  }
  throw std::out_of_range(name);
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("trivial structure on the weight-0 truncation passes") {
    for (Algebra a : {Algebra::R, Algebra::E}) {
      const HopfStructure h = trivial_structure(3, a);
      ShuffleContext ctx(3);
      const auto rs = check_axioms(h, ctx, 0);
      CHECK(rs.size() == 4);
      CHECK(all_pass(rs));
    }
  }

  TEST_CASE("shipped fixture loads and passes at every cap <= 3") {
    const HopfStructure h = load_hopf_file(kFixture);
    CHECK(h.q == 2);
    CHECK(h.weight_bound == 3);
    ShuffleContext ctx(2);
    for (int cap = 0; cap <= 3; ++cap) CHECK(all_pass(check_axioms(h, ctx, cap)));
    CHECK_THROWS_AS(check_axioms(h, ctx, 4), std::invalid_argument);
  }

  TEST_CASE("regenerating the fixture reproduces the shipped file") {
    const auto result = search_hopf_structure(2, 3);
    CHECK(result.candidates == 512);
    CHECK(result.passing > 0);
    CHECK(result.generators ==
          std::vector<Word>{Word::xw({1}), Word::xw({1, 1}), Word::xw({3}), Word::xw({2, 1})});
    std::ifstream in(kFixture);
    nlohmann::json shipped;
    in >> shipped;
    CHECK(hopf_to_json(result.structure) == shipped);
  }

  TEST_CASE("fixture coproduct values") {
    const HopfStructure h = load_hopf_file(kFixture);
    const PrimeField f(2);
    CHECK(h.coproduct_at(Word::xw({1})) == parse_tensor("1 (x) x[1] + x[1] (x) 1", f));
    CHECK(h.coproduct_at(Word::xw({1, 1})) == parse_tensor("1 (x) x[1,1] + x[1] (x) x[1] + x[1,1] (x) 1", f));
  }

  TEST_CASE("a corrupted counit entry is reported with that word") {
    const HopfStructure h = load_hopf_file(kFixture);
    ShuffleContext ctx(2);
    const auto bad = apply_corruption(h, {Corruption::Kind::Counit, Word::xw({2})});
    const auto rs = check_axioms(bad, ctx, 3);
    const auto& counit = report(rs, "counit");
    REQUIRE_FALSE(counit.pass);
    REQUIRE_FALSE(counit.witnesses.empty());
    CHECK(counit.witnesses.front().input.rfind("x[2]", 0) == 0);
  }

  TEST_CASE("ten single-entry corruptions are all rejected") {
    const HopfStructure h = load_hopf_file(kFixture);
    ShuffleContext ctx(2);
    const auto cs = standard_corruptions(h, 10);
    REQUIRE(cs.size() == 10);
    for (const auto& c : cs) {
      CAPTURE(c.describe());
      const auto rs = check_axioms(apply_corruption(h, c), ctx, 3);
      CHECK_FALSE(all_pass(rs));
      for (const auto& r : rs) CHECK(r.pass == r.witnesses.empty());
    }
  }

  TEST_CASE("transport agrees with the source on R and unfolds at depth 1") {
    const HopfStructure h = load_hopf_file(kFixture);
    ShuffleContext ctx(2);
    const HopfStructure e = transport(h, ctx);
    for (const auto& w : r_words_up_to(3)) {
      CHECK(e.coproduct_at(w) == h.coproduct_at(w));
      CHECK(e.antipode_at(w) == h.antipode_at(w));
      CHECK(e.counit_at(w) == h.counit_at(w));
    }
    CHECK(e.coproduct_at(Word{}) == TensorElement::one(PrimeField(2)));
    CHECK(e.counit_at(Word{}) == 1);
    const auto ehat_fn = [](const Element& u) { return ehat(u); };
    for (int a = 1; a <= 3; ++a) {
      const TensorElement& d = h.coproduct_at(Word::xw({a}));
      CHECK(e.coproduct_at(Word::yw({a})) == tensor_map(d, ehat_fn, ehat_fn) - d);
    }
    CHECK(e.coproduct_at(Word::yw({1})) == parse_tensor("1 (x) y[1] + y[1] (x) 1", PrimeField(2)));
  }

  TEST_CASE("transported structure passes the checker at every cap") {
    const HopfStructure h = load_hopf_file(kFixture);
    ShuffleContext ctx(2);
    const HopfStructure e = transport(h, ctx);
    for (int cap = 0; cap <= 3; ++cap) CHECK(all_pass(check_axioms(e, ctx, cap)));
  }

  TEST_CASE("iota and ehat are Hopf homomorphisms on the truncation") {
    const HopfStructure h = load_hopf_file(kFixture);
    ShuffleContext ctx(2);
    const HopfStructure e = transport(h, ctx);
    const auto ehat_fn = [](const Element& u) { return ehat(u); };
    for (const auto& w : r_words_up_to(3)) {
      const Element x(PrimeField(2), w);
      CHECK(e.apply_coproduct(ehat(x)) == tensor_map(h.coproduct_at(w), ehat_fn, ehat_fn));
      CHECK(e.apply_coproduct(iota(x)) == h.coproduct_at(w));
      CHECK(e.apply_counit(ehat(x)) == h.counit_at(w));
      CHECK(e.apply_antipode(ehat(x)) == ehat(h.antipode_at(w)));
    }
  }

  TEST_CASE("transport matches phi-conjugation of the componentwise structure") {
    const HopfStructure h = load_hopf_file(kFixture);
    ShuffleContext ctx(2);
    const HopfStructure e = transport(h, ctx);
    for (const auto& w : e_words_up_to(3)) {
      CAPTURE(format_word(w));
      const Element u(PrimeField(2), w);
      CHECK(e.coproduct_at(w) == conjugated_coproduct(h, u, ctx));
      CHECK(e.counit_at(w) == conjugated_counit(h, u, ctx));
      CHECK(e.antipode_at(w) == conjugated_antipode(h, u, ctx));
    }
  }

  TEST_CASE("counit recursion vanishes on y-words for any supplied counit values") {
    HopfStructure h = load_hopf_file(kFixture);
    ShuffleContext ctx(2);
    h.counit.at(Word::xw({1})) = 1;
    h.counit.at(Word::xw({2, 1})) = 1;
    for (const auto& b : indices_up_to(3)) {
      if (b.empty()) continue;
      CHECK(transport_counit(h, Word::yw(b), ctx) == 0);
    }
    CHECK(transport_counit(h, Word{}, ctx) == 1);
  }

  TEST_CASE("transport and tables reject words beyond the bound") {
    const HopfStructure h = load_hopf_file(kFixture);
    ShuffleContext ctx(2);
    CHECK_THROWS_AS(transport_coproduct(h, Word::yw({4}), ctx), HopfTableError);
    CHECK_THROWS_AS(h.coproduct_at(Word::xw({2, 2})), HopfTableError);
    CHECK_THROWS_AS(h.counit_at(Word::yw({1})), HopfTableError);
    ShuffleContext q3(3);
    CHECK_THROWS_AS(transport(h, q3), FieldMismatch);
  }

  TEST_CASE("malformed or partial tables are rejected on load") {
    auto j = hopf_to_json(load_hopf_file(kFixture));
    auto missing = j;
    missing["counit"].erase(missing["counit"].begin() + 1);
    CHECK_THROWS_AS(hopf_from_json(missing), HopfTableError);
    auto ungraded = j;
    ungraded["antipode"][1]["image"] = element_to_json(E2("x[2]"));
    CHECK_THROWS_AS(hopf_from_json(ungraded), HopfTableError);
    CHECK_THROWS_AS(hopf_from_json(nlohmann::json{{"q", 2}}), HopfTableError);
  }

  TEST_CASE("JSON round-trip of a transported structure") {
    ShuffleContext ctx(2);
    const HopfStructure e = transport(load_hopf_file(kFixture), ctx);
    const HopfStructure back = hopf_from_json(hopf_to_json(e));
    CHECK(back.algebra == Algebra::E);
    CHECK(back.coproduct == e.coproduct);
    CHECK(back.counit == e.counit);
    CHECK(back.antipode == e.antipode);
  }

  TEST_CASE("search also succeeds at q = 3") {
    const auto r = search_hopf_structure(3, 2);
    ShuffleContext ctx(3);
    CHECK(all_pass(check_axioms(r.structure, ctx, 2)));
    CHECK(all_pass(check_axioms(transport(r.structure, ctx), ctx, 2)));
  }
}
