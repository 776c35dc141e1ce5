#include "qshuffle/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qshuffle/goss.hpp"
#include "qshuffle/hopf.hpp"
#include "qshuffle/mzv.hpp"
#include "qshuffle/serialize.hpp"
#include "qshuffle/structure_maps.hpp"
#include "qshuffle/verify.hpp"

namespace qshuffle {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Index parse_index(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v < 1) {
      throw UsageError("index entries must be positive integers, got '" + text + "'");
    }
    entries.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw UsageError("trailing comma in index '" + text + "'");
  return Index(std::move(entries));
}

json index_json(const Index& a) { return a.entries(); }

std::string index_list(const Index& a) {
  std::string s;
  for (int k : a.entries()) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

std::string read_operand(const std::string& given, std::istream& in) {
  if (!given.empty() && given != "-") return given;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  if (text.empty()) throw UsageError("missing operand (none given and stdin is empty)");
  return text;
}

void validate(const RunConfig& c) {
  prime_power(c.q);
  if (c.q > 32) throw UsageError("q must be at most 32");
  if (c.weight_cap < 0) throw UsageError("weight cap must be >= 0");
  if (c.precision < 1) throw UsageError("precision must be >= 1");
}

json header(const std::string& command, const RunConfig& c) {
  return {{"schema", 1}, {"command", command}, {"q", c.q}};
}

std::string output_name(OutputFormat f) { return f == OutputFormat::Json ? "json" : "text"; }

class Command {
 public:
  Command(const RunConfig& config, std::istream& in, std::ostream& out) : c_(config), in_(in), out_(out) {}

  int shuffle(const std::string& left, const std::string& right, const std::string& algebra) {
    const PrimeField f(prime_power(c_.q).p);
    ShuffleContext ctx(c_.q);
    const Element u = parse_element(left, f), v = parse_element(right, f);
    Element r(f);
    if (algebra == "R") {
      if (!u.in_R() || !v.in_R()) throw UsageError("algebra R does not allow y-letters");
      r = shuffle_R(u, v, ctx);
    } else {
      r = shuffle_E(u, v, ctx);
    }
    if (json_out()) {
      json j = header("shuffle", c_);
      j["algebra"] = algebra;
      j["left"] = format_element(u);
      j["right"] = format_element(v);
      j["result"] = element_to_json(r);
      j["text"] = format_element(r);
      emit(j);
    } else {
      emit_text(format_element(r));
    }
    return kExitOk;
  }

  int unary(const std::string& command, const std::string& operand) {
    const PrimeField f(prime_power(c_.q).p);
    ShuffleContext ctx(c_.q);
    const std::string text = read_operand(operand, in_);
    json j = header(command, c_);
    std::string shown;
    if (command == "phi") {
      const TensorElement t = parse_tensor(text, f);
      if (!t.in_RR()) throw UsageError("phi takes a tensor of y-free words");
      const Element r = phi(t, ctx);
      j["input"] = format_tensor(t);
      j["result"] = element_to_json(r);
      shown = format_element(r);
    } else if (command == "phi-inv") {
      const TensorElement r = phi_inv(parse_element(text, f), ctx);
      j["input"] = format_element(parse_element(text, f));
      j["result"] = tensor_to_json(r);
      shown = format_tensor(r);
    } else {
      const Element u = parse_element(text, f);
      Element r(f);
      if (command == "ehat") {
        if (!u.in_R()) throw UsageError("ehat takes a y-free element");
        r = ehat(u);
      } else {
        r = pi_hat(u);
      }
      j["input"] = format_element(u);
      j["result"] = element_to_json(r);
      shown = format_element(r);
    }
    j["text"] = shown;
    if (json_out()) {
      emit(j);
    } else {
      emit_text(shown);
    }
    return kExitOk;
  }

  int verify(const std::string& property) {
    if (!is_property(property)) {
      std::string known;
      for (const auto& n : property_names()) known += (known.empty() ? "" : ", ") + n;
      throw UsageError("unknown property '" + property + "' (known: " + known + ")");
    }
    SweepOptions o;
    o.q = c_.q;
    o.weight_cap = c_.weight_cap;
    o.threads = c_.threads;
    o.samples = c_.samples;
    o.seed = c_.seed;
    const VerificationReport r = verify_property(property, o);
    if (json_out()) {
      json j = r.to_json(c_.timing);
      j["command"] = "verify";
      emit(j);
    } else {
      out_ << r.to_text(c_.timing);
    }
    return r.pass() ? kExitOk : kExitFailure;
  }

  int zeta(const std::string& index_text) {
    const Index a = parse_index(index_text);
    const MzvValue z = mzv(a, make_field(c_.q), c_.precision);
    if (json_out()) {
      json j = header("zeta", c_);
      j["index"] = index_json(a);
      j["precision"] = c_.precision;
      j["degree_cut"] = z.degree_cut;
      j["value"] = z.value.to_json();
      j["text"] = z.value.to_string();
      emit(j);
    } else {
      emit_text(z.value.to_string());
    }
    return kExitOk;
  }

  int oracle(const std::string& a_text, const std::string& b_text, const std::string& product_text) {
    const Index a = parse_index(a_text), b = parse_index(b_text);
    const PrimeField f(prime_power(c_.q).p);
    MzvContext mctx(make_field(c_.q), c_.precision);
    ShuffleContext sctx(c_.q);
    const Element product = product_text.empty() ? sctx.mul_word(Word::xw(a), Word::xw(b))
                                                 : parse_element(product_text, f);
    if (!product.in_R()) throw UsageError("the product must be y-free");
    const OracleResult r = check_product_oracle(product, a, b, mctx);
    if (json_out()) {
      json j = header("oracle", c_);
      j["a"] = index_json(a);
      j["b"] = index_json(b);
      j["precision"] = c_.precision;
      j["product"] = format_element(product);
      j["pass"] = r.pass;
      j["residual_valuation"] = r.residual_valuation ? json(*r.residual_valuation) : json(nullptr);
      j["lhs"] = r.lhs.to_json();
      j["rhs"] = r.rhs.to_json();
      emit(j);
    } else {
      std::ostringstream os;
      os << "oracle zeta(" << index_list(a) << ") zeta(" << index_list(b) << ") q=" << c_.q
         << " precision=" << c_.precision << ": " << (r.pass ? "PASS" : "FAIL");
      if (r.residual_valuation) os << " (residual valuation " << *r.residual_valuation << ")";
      os << "\n  product: " << format_element(product) << "\n  realized: " << r.lhs.to_string()
         << "\n  zeta product: " << r.rhs.to_string();
      emit_text(os.str());
    }
    return r.pass ? kExitOk : kExitFailure;
  }

  int thakur() {
    const ThakurResult r = thakur_relation_check(make_field(c_.q), c_.precision);
    if (json_out()) {
      json j = header("thakur", c_);
      j["precision"] = c_.precision;
      j["pass"] = r.pass;
      j["residual_valuation"] = r.residual_valuation ? json(*r.residual_valuation) : json(nullptr);
      j["residual"] = r.residual.to_json();
      emit(j);
    } else {
      std::ostringstream os;
      os << "zeta(" << c_.q << ") - (theta - theta^" << c_.q << ") zeta(1," << c_.q - 1 << ") q=" << c_.q
         << " precision=" << c_.precision << ": " << (r.pass ? "PASS" : "FAIL");
      if (!r.pass) os << "\n  residual: " << r.residual.to_string();
      emit_text(os.str());
    }
    return r.pass ? kExitOk : kExitFailure;
  }

  int goss_cmd(int n, bool table) {
    if (n < 1) throw UsageError("goss: n must be >= 1");
    const std::vector<GossPolynomial> polys = table ? goss_table(n, c_.q) : std::vector{goss(n, c_.q)};
    if (json_out()) {
      json j = header("goss", c_);
      j["n"] = n;
      if (table) {
        json arr = json::array();
        for (const auto& g : polys) arr.push_back({{"n", g.n}, {"polynomial", g.to_json()}, {"text", g.to_string()}});
        j["table"] = arr;
      } else {
        j["polynomial"] = polys.front().to_json();
        j["text"] = polys.front().to_string();
      }
      emit(j);
    } else {
      std::string s;
      for (const auto& g : polys) {
        if (!s.empty()) s += "\n";
        s += table ? "G_" + std::to_string(g.n) + " = " + g.to_string() : g.to_string();
      }
      emit_text(s);
    }
    return kExitOk;
  }

  int hopf(const std::string& path, bool check, bool do_transport, bool search, int search_bound,
           std::optional<int> cap) {
    if (search) {
      if (!path.empty()) throw UsageError("hopf: --search does not take --structure");
      const HopfSearchResult r = search_hopf_structure(c_.q, search_bound);
      if (json_out()) {
        json j = header("hopf", c_);
        json gens = json::array();
        for (const auto& g : r.generators) gens.push_back(format_word(g));
        j["search"] = {{"generators", gens}, {"candidates", r.candidates}, {"passing", r.passing}};
        j["structure"] = hopf_to_json(r.structure);
        emit(j);
      } else {
        out_ << hopf_to_json(r.structure).dump(2) << "\n";
      }
      return kExitOk;
    }
    if (path.empty()) throw UsageError("hopf: --structure FILE is required");
    if (!check && !do_transport) throw UsageError("hopf: give --check and/or --transport");
    const HopfStructure src = load_hopf_file(path);
    ShuffleContext ctx(src.q);
    const HopfStructure h = do_transport ? transport(src, ctx) : src;
    if (!check) {
      if (json_out()) {
        json j = header("hopf", c_);
        j["q"] = h.q;
        j["structure"] = hopf_to_json(h);
        emit(j);
      } else {
        out_ << hopf_to_json(h).dump(2) << "\n";
      }
      return kExitOk;
    }
    const int k = cap.value_or(h.weight_bound);
    std::vector<AxiomReport> reports = check_axioms(h, ctx, k);
    if (do_transport) {
      auto compat = check_transport_compatibility(src, h, k);
      reports.insert(reports.end(), compat.begin(), compat.end());
    }
    const bool ok = all_pass(reports);
    if (json_out()) {
      json j = header("hopf", c_);
      j["q"] = h.q;
      j["algebra"] = h.algebra == Algebra::R ? "R" : "E";
      j["weight_cap"] = k;
      j["transported"] = do_transport;
      j["pass"] = ok;
      j["reports"] = axiom_reports_to_json(reports);
      emit(j);
    } else {
      std::ostringstream os;
      os << "hopf " << (h.algebra == Algebra::R ? "R" : "E") << " q=" << h.q << " weight-cap=" << k << ": "
         << (ok ? "PASS" : "FAIL");
      for (const auto& r : reports) {
        os << "\n  " << r.axiom << ": " << (r.pass ? "PASS" : "FAIL") << " (checked " << r.checked << ")";
        for (const auto& w : r.witnesses) {
          os << "\n    witness " << w.input << "\n      lhs: " << w.lhs << "\n      rhs: " << w.rhs;
        }
      }
      emit_text(os.str());
    }
    return ok ? kExitOk : kExitFailure;
  }

  void start_clock() { start_ = std::chrono::steady_clock::now(); }

 private:
  bool json_out() const { return c_.output == OutputFormat::Json; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void emit(json j) {
    if (c_.timing && !j.contains("wall_seconds")) j["wall_seconds"] = elapsed();
    out_ << j.dump(2) << "\n";
  }
  void emit_text(const std::string& s) {
    out_ << s << "\n";
    if (c_.timing) out_ << "wall time: " << elapsed() << " s\n";
  }

  const RunConfig& c_;
  std::istream& in_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// --config must be honored before the other flags are parsed so that they can override it.
std::optional<std::string> find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

}  // namespace

RunConfig load_run_config(const std::string& path, RunConfig base) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(file);
  } catch (const json::exception& e) {
    throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config file '" + path + "' must hold a JSON object");
  static const std::vector<std::string> keys{"q", "weight_cap", "precision", "output", "seed", "samples", "threads",
                                             "timing"};
  try {
    for (const auto& [k, v] : j.items()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        throw std::invalid_argument("config file '" + path + "': unknown key '" + k + "'");
      }
    }
    if (j.contains("q")) base.q = j["q"].get<std::uint32_t>();
    if (j.contains("weight_cap")) base.weight_cap = j["weight_cap"].get<int>();
    if (j.contains("precision")) base.precision = j["precision"].get<int>();
    if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) base.samples = j["samples"].get<std::uint64_t>();
    if (j.contains("threads")) base.threads = j["threads"].get<int>();
    if (j.contains("timing")) base.timing = j["timing"].get<bool>();
    if (j.contains("output")) {
      const auto o = j["output"].get<std::string>();
      if (o != "text" && o != "json") throw std::invalid_argument("config output must be text or json");
      base.output = o == "json" ? OutputFormat::Json : OutputFormat::Text;
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument("config file '" + path + "': " + e.what());
  }
  return base;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    if (const auto path = find_config(args)) config = load_run_config(*path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Exact q-shuffle algebra computations over finite fields", "qshuffle"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = output_name(config.output);
  std::string config_path;
  std::uint64_t samples = 0;
  app.add_option("--q", config.q, "Field size q = p^e")->capture_default_str();
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--config", config_path, "JSON file with default settings");
  app.add_flag("--timing", config.timing, "Report wall time");
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores, capped by QSHUFFLE_THREADS)");

  std::string left, right, algebra = "E";
  auto* shuffle = app.add_subcommand("shuffle", "Product of two elements");
  shuffle->add_option("left", left, "Left operand")->required();
  shuffle->add_option("right", right, "Right operand")->required();
  shuffle->add_option("--algebra", algebra, "R or E")->check(CLI::IsMember({"R", "E"}))->capture_default_str();

  std::string property;
  auto* verify = app.add_subcommand("verify", "Exhaustive or sampled property sweep");
  verify->add_option("--property", property, "Property name")->required();
  verify->add_option("--weight-cap", config.weight_cap, "Total weight cap")->capture_default_str();
  verify->add_option("--samples", samples, "Check a seeded random subset of this size");
  verify->add_option("--seed", config.seed, "Seed for sampled sweeps")->capture_default_str();

  std::string index_text;
  auto* zeta = app.add_subcommand("zeta", "Thakur multiple zeta value as a series in 1/theta");
  zeta->add_option("--index", index_text, "Comma-separated index, e.g. 1,2")->required();
  zeta->add_option("--prec", config.precision, "Absolute precision in 1/theta")->capture_default_str();

  std::string a_text, b_text, product_text;
  auto* oracle = app.add_subcommand("oracle", "Check a product against zeta(a) zeta(b)");
  oracle->add_option("--a", a_text, "First index")->required();
  oracle->add_option("--b", b_text, "Second index")->required();
  oracle->add_option("--product", product_text, "Claimed product (default: computed x_a * x_b)");
  oracle->add_option("--prec", config.precision, "Absolute precision in 1/theta")->capture_default_str();

  auto* thakur = app.add_subcommand("thakur", "Check zeta(q) = (theta - theta^q) zeta(1, q - 1)");
  thakur->add_option("--prec", config.precision, "Absolute precision in 1/theta")->capture_default_str();

  int goss_n = 0;
  bool goss_table_flag = false;
  auto* goss = app.add_subcommand("goss", "Goss polynomial with formal coefficients");
  goss->add_option("--n", goss_n, "Index n >= 1")->required();
  goss->add_flag("--table", goss_table_flag, "Print G_1 .. G_n");

  std::string operand;
  std::vector<std::pair<std::string, CLI::App*>> unary;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"ehat", "Apply e^ to a y-free element"},
           {"pi", "Drop every term with a y-letter"},
           {"phi", "phi(x_a (x) x_b) = x_a * e^(x_b)"},
           {"phi-inv", "Inverse of phi"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("operand", operand, "Operand (read from stdin when omitted or '-')");
    unary.emplace_back(name, sub);
  }

  std::string structure_path;
  bool check = false, do_transport = false, search = false;
  int search_bound = 3;
  int hopf_cap = -1;
  auto* hopf = app.add_subcommand("hopf", "Check or transport a Hopf structure table");
  hopf->add_option("--structure", structure_path, "Structure table (JSON)");
  hopf->add_flag("--check", check, "Run the axiom checks");
  hopf->add_flag("--transport", do_transport, "Transport an R-structure to E");
  hopf->add_option("--weight-cap", hopf_cap, "Cap for the checks (default: the table's weight bound)");
  hopf->add_flag("--search", search, "Search for a structure on the truncation of R");
  hopf->add_option("--weight-bound", search_bound, "Weight bound for --search")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  config.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (verify->count("--samples") > 0) config.samples = samples;

  try {
    validate(config);
    Command cmd(config, in, out);
    cmd.start_clock();
    if (*shuffle) return cmd.shuffle(left, right, algebra);
    if (*verify) return cmd.verify(property);
    if (*zeta) return cmd.zeta(index_text);
    if (*oracle) return cmd.oracle(a_text, b_text, product_text);
    if (*thakur) return cmd.thakur();
    if (*goss) return cmd.goss_cmd(goss_n, goss_table_flag);
    if (*hopf) {
      return cmd.hopf(structure_path, check, do_transport, search, search_bound,
                      hopf_cap >= 0 ? std::optional<int>(hopf_cap) : std::nullopt);
    }
    for (const auto& [name, sub] : unary) {
      if (*sub) return cmd.unary(name, operand);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qshuffle
