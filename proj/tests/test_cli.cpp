#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qshuffle/cli.hpp"
#include "qshuffle/hopf.hpp"
#include "qshuffle/mzv.hpp"
#include "qshuffle/serialize.hpp"

using namespace qshuffle;

namespace {

const std::string kFixture = std::string(QSHUFFLE_TEST_DATA_DIR) + "/hopf_fixture_q2_w3.json";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qshuffle_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("shuffle examples") {
    auto r = run({"shuffle", "x[1]", "x[1]", "--algebra", "R", "--q", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "x[2]\n");
    r = run({"shuffle", "y[1]", "y[1]", "--algebra", "E", "--q", "3"});
    CHECK(r.code == kExitOk);
    const PrimeField f3(3);
    CHECK(parse_element(r.out, f3) == parse_element("2*y[1,1] + y[2]", f3));
    CHECK(r.out == "y[2] + 2*y[1,1]\n");
    r = run({"shuffle", "1", "x[5]", "--algebra", "R", "--q", "4"});
    CHECK(r.out == "x[5]\n");
  }

  TEST_CASE("verify examples") {
    auto r = run({"verify", "--property", "assoc-R", "--weight-cap", "6", "--q", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("PASS (checked 688, passed 688, failed 0)") != std::string::npos);
    CHECK(run({"verify", "--property", "ehat-hom", "--weight-cap", "6", "--q", "2"}).code == kExitOk);
    r = run({"verify", "--property", "assoc-E", "--weight-cap", "2", "--q", "2", "--output", "json"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["checked"].get<int>() < 100);
    CHECK(j["schema"] == 1);
  }

  TEST_CASE("zeta, goss and hopf examples") {
    auto r = run({"zeta", "--index", "1,1", "--q", "2", "--prec", "20"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == mzv(Index{1, 1}, make_field(2), 20).value.to_string() + "\n");
    r = run({"goss", "--n", "4", "--q", "3"});
    CHECK(r.out == "X^4 + a1*X^2\n");
    r = run({"hopf", "--structure", kFixture, "--check", "--weight-cap", "3", "--output", "json"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["reports"].size() == 4);
    for (const auto& rep : j["reports"]) CHECK(rep.at("verdict") == "pass");
  }

  TEST_CASE("hopf transport and search") {
    auto r = run({"hopf", "--structure", kFixture, "--check", "--transport"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("ehat-is-hopf-hom: PASS") != std::string::npos);
    r = run({"hopf", "--search", "--q", "2", "--weight-bound", "3"});
    std::ifstream file(kFixture);
    const std::string fixture((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(r.out == fixture);
    r = run({"hopf", "--structure", kFixture, "--transport", "--output", "json"});
    const HopfStructure e = hopf_from_json(nlohmann::json::parse(r.out)["structure"]);
    CHECK(e.algebra == Algebra::E);
  }

  TEST_CASE("a corrupted structure fails with exit code 1") {
    const HopfStructure h = load_hopf_file(kFixture);
    const auto bad = apply_corruption(h, standard_corruptions(h, 1).front());
    const std::string path = temp_file("corrupt.json", hopf_to_json(bad).dump());
    const auto r = run({"hopf", "--structure", path, "--check"});
    CHECK(r.code == kExitFailure);
    CHECK(r.out.find("witness") != std::string::npos);
  }

  TEST_CASE("oracle command") {
    CHECK(run({"oracle", "--a", "1", "--b", "2", "--q", "2", "--prec", "20"}).code == kExitOk);
    const auto r = run({"oracle", "--a", "1", "--b", "2", "--q", "2", "--product", "x[1,2]"});
    CHECK(r.code == kExitFailure);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(run({"thakur", "--q", "3", "--prec", "40"}).code == kExitOk);
  }

  TEST_CASE("structure map commands and stdin") {
    CHECK(run({"ehat", "x[1,2]", "--q", "2"}).out == "x[1,2] + x[2]y[1] + y[1,2]\n");
    CHECK(run({"pi", "x[1]y[2] + x[3]", "--q", "2"}).out == "x[3]\n");
    CHECK(run({"phi", "--q", "2"}, "x[1] (x) x[2]\n").out == "x[3] + x[1,2] + x[1]y[2]\n");
    CHECK(run({"phi-inv", "-", "--q", "2"}, "x[3] + x[1,2] + x[1]y[2]").out == "x[1] (x) x[2]\n");
    CHECK(run({"ehat", "--q", "2"}).code == kExitUsage);
    CHECK(run({"ehat", "y[1]", "--q", "2"}).code == kExitUsage);
  }

  TEST_CASE("identical invocations give byte-identical JSON") {
    const std::vector<std::string> args{"verify", "--property", "lemma-3-8", "--weight-cap", "4",
                                        "--q",    "3",          "--output",  "json"};
    const auto a = run(args);
    auto with_threads = args;
    with_threads.insert(with_threads.end(), {"--threads", "3"});
    CHECK(a.out == run(args).out);
    CHECK(a.out == run(with_threads).out);
    const std::vector<std::string> z{"zeta", "--index", "2,1", "--q", "3", "--prec", "15", "--output", "json"};
    CHECK(run(z).out == run(z).out);
    const std::vector<std::string> s{"verify", "--property", "comm", "--weight-cap", "5",
                                     "--samples", "20", "--seed", "5", "--output", "json"};
    const auto sa = run(s);
    CHECK(sa.out == run(s).out);
    CHECK(nlohmann::json::parse(sa.out)["seed"] == 5);
  }

  TEST_CASE("timing is reported only on request") {
    const auto plain = run({"goss", "--n", "5", "--q", "2", "--output", "json"});
    CHECK(plain.out.find("wall_seconds") == std::string::npos);
    const auto timed = run({"goss", "--n", "5", "--q", "2", "--output", "json", "--timing"});
    CHECK(nlohmann::json::parse(timed.out).contains("wall_seconds"));
  }

  TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"verify", "--property", "nope"}).code == kExitUsage);
    CHECK(run({"shuffle", "x[0]", "x[1]", "--q", "2"}).code == kExitUsage);
    CHECK(run({"shuffle", "x[1", "x[1]"}).err.find("parse error at position") != std::string::npos);
    CHECK(run({"shuffle", "y[1]", "x[1]", "--algebra", "R"}).code == kExitUsage);
    CHECK(run({"shuffle", "x[1]", "x[1]", "--q", "6"}).code == kExitUsage);
    CHECK(run({"zeta", "--index", "1,0"}).code == kExitUsage);
    CHECK(run({"zeta", "--index", "1", "--prec", "0"}).code == kExitUsage);
    CHECK(run({"hopf", "--check"}).code == kExitUsage);
    CHECK(run({"hopf", "--structure", "/nonexistent/table.json", "--check"}).code == kExitUsage);
    CHECK(run({"hopf", "--structure", kFixture, "--check", "--weight-cap", "4"}).code == kExitUsage);
    CHECK(run({"goss", "--n", "0"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("config file preloads settings and flags override") {
    const std::string path = temp_file("config.json", R"({"q": 3, "output": "json", "precision": 5})");
    auto r = run({"zeta", "--index", "2", "--config", path});
    CHECK(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["q"] == 3);
    CHECK(j["precision"] == 5);
    r = run({"zeta", "--index", "2", "--config", path, "--q", "2", "--output", "text"});
    CHECK(r.out == mzv(Index{2}, make_field(2), 5).value.to_string() + "\n");
    CHECK(run({"goss", "--n", "2", "--config", temp_file("bad.json", "{\"colour\": 1}")}).code == kExitUsage);
    CHECK(run({"goss", "--n", "2", "--config", temp_file("broken.json", "{")}).code == kExitUsage);
    const RunConfig c = load_run_config(temp_file("full.json", R"({"weight_cap": 3, "seed": 7, "samples": 9})"));
    CHECK(c.weight_cap == 3);
    CHECK(c.seed == 7);
    CHECK(c.samples == 9u);
  }
}
