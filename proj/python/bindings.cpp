#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qshuffle/cli.hpp"
#include "qshuffle/goss.hpp"
#include "qshuffle/mzv.hpp"
#include "qshuffle/serialize.hpp"
#include "qshuffle/structure_maps.hpp"
#include "qshuffle/verify.hpp"

namespace py = pybind11;
using namespace qshuffle;

namespace {

PrimeField field_for(std::uint32_t q) { return PrimeField(prime_power(q).p); }

std::string shuffle(const std::string& left, const std::string& right, std::uint32_t q, const std::string& algebra) {
  ShuffleContext ctx(q);
  const Element u = parse_element(left, field_for(q)), v = parse_element(right, field_for(q));
  if (algebra == "R") return format_element(shuffle_R(u, v, ctx));
  if (algebra == "E") return format_element(shuffle_E(u, v, ctx));
  throw std::invalid_argument("algebra must be 'R' or 'E'");
}

std::string ehat_text(const std::string& u, std::uint32_t q) { return format_element(ehat(parse_element(u, field_for(q)))); }

std::string pi_text(const std::string& u, std::uint32_t q) { return format_element(pi_hat(parse_element(u, field_for(q)))); }

std::string phi_text(const std::string& t, std::uint32_t q) {
  ShuffleContext ctx(q);
  return format_element(phi(parse_tensor(t, field_for(q)), ctx));
}

std::string phi_inv_text(const std::string& u, std::uint32_t q) {
  ShuffleContext ctx(q);
  return format_tensor(phi_inv(parse_element(u, field_for(q)), ctx));
}

std::string zeta_json(const std::vector<int>& index, std::uint32_t q, int precision) {
  return mzv(Index(index), make_field(q), precision).value.to_json().dump();
}

std::string zeta_text(const std::vector<int>& index, std::uint32_t q, int precision) {
  return mzv(Index(index), make_field(q), precision).value.to_string();
}

bool oracle(const std::vector<int>& a, const std::vector<int>& b, std::uint32_t q, int precision) {
  return check_shuffle_oracle(Index(a), Index(b), make_field(q), precision).pass;
}

bool thakur(std::uint32_t q, int precision) { return thakur_relation_check(make_field(q), precision).pass; }

std::string verify_json(const std::string& property, std::uint32_t q, int weight_cap, int threads) {
  SweepOptions o;
  o.q = q;
  o.weight_cap = weight_cap;
  o.threads = threads;
  VerificationReport r;
  {
    py::gil_scoped_release release;
    r = verify_property(property, o);
  }
  return r.to_json().dump();
}

py::tuple run(const std::vector<std::string>& args, const std::string& stdin_text) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("shuffle", &shuffle, py::arg("left"), py::arg("right"), py::arg("q"), py::arg("algebra") = "E");
  m.def("ehat", &ehat_text, py::arg("element"), py::arg("q"));
  m.def("pi_hat", &pi_text, py::arg("element"), py::arg("q"));
  m.def("phi", &phi_text, py::arg("tensor"), py::arg("q"));
  m.def("phi_inv", &phi_inv_text, py::arg("element"), py::arg("q"));
  m.def("zeta_json", &zeta_json, py::arg("index"), py::arg("q"), py::arg("precision"));
  m.def("zeta", &zeta_text, py::arg("index"), py::arg("q"), py::arg("precision"));
  m.def("oracle", &oracle, py::arg("a"), py::arg("b"), py::arg("q"), py::arg("precision"));
  m.def("thakur", &thakur, py::arg("q"), py::arg("precision"));
  m.def("goss", [](int n, std::uint32_t q) { return goss(n, q).to_string(); }, py::arg("n"), py::arg("q"));
  m.def("verify_json", &verify_json, py::arg("property"), py::arg("q"), py::arg("weight_cap"),
        py::arg("threads") = 0);
  m.def("properties", &property_names);
  m.def("run", &run, py::arg("args"), py::arg("stdin") = "");
}
