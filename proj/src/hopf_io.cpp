#include <fstream>

#include "qshuffle/hopf.hpp"
#include "qshuffle/serialize.hpp"

namespace qshuffle {

nlohmann::json hopf_to_json(const HopfStructure& h) {
  nlohmann::json j;
  j["q"] = h.q;
  j["weight_bound"] = h.weight_bound;
  j["algebra"] = h.algebra == Algebra::R ? "R" : "E";
  j["coproduct"] = nlohmann::json::array();
  j["counit"] = nlohmann::json::array();
  j["antipode"] = nlohmann::json::array();
  for (const auto& [w, t] : h.coproduct) {
    j["coproduct"].push_back({{"word", format_word(w)}, {"image", tensor_to_json(t)}});
  }
  for (const auto& [w, c] : h.counit) j["counit"].push_back({{"word", format_word(w)}, {"value", c}});
  for (const auto& [w, e] : h.antipode) {
    j["antipode"].push_back({{"word", format_word(w)}, {"image", element_to_json(e)}});
  }
  return j;
}

HopfStructure hopf_from_json(const nlohmann::json& j) {
  HopfStructure h;
  try {
    h.q = j.at("q").get<std::uint32_t>();
    h.weight_bound = j.at("weight_bound").get<int>();
    const std::string algebra = j.value("algebra", std::string("R"));
    if (algebra != "R" && algebra != "E") throw HopfTableError("algebra must be \"R\" or \"E\"");
    h.algebra = algebra == "R" ? Algebra::R : Algebra::E;
    const PrimeField f = h.field();
    for (const auto& e : j.at("coproduct")) {
      h.coproduct.insert_or_assign(parse_word(e.at("word").get<std::string>()), tensor_from_json(e.at("image"), f));
    }
    for (const auto& e : j.at("counit")) {
      h.counit.insert_or_assign(parse_word(e.at("word").get<std::string>()), f.reduce(e.at("value").get<std::int64_t>()));
    }
    for (const auto& e : j.at("antipode")) {
      h.antipode.insert_or_assign(parse_word(e.at("word").get<std::string>()), element_from_json(e.at("image"), f));
    }
  } catch (const nlohmann::json::exception& e) {
    throw HopfTableError(std::string("malformed Hopf structure: ") + e.what());
  }
  if (h.weight_bound < 0) throw HopfTableError("weight_bound must be >= 0");
  h.validate();
  return h;
}

HopfStructure load_hopf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw HopfTableError(path + ": " + e.what());
  }
  return hopf_from_json(j);
}

nlohmann::json axiom_reports_to_json(const std::vector<AxiomReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : r.witnesses) w.push_back({{"input", x.input}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    out.push_back({{"axiom", r.axiom}, {"verdict", r.pass ? "pass" : "fail"}, {"checked", r.checked}, {"witnesses", w}});
  }
  return out;
}

}  // namespace qshuffle
