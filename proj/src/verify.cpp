#include "qshuffle/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qshuffle/serialize.hpp"
#include "qshuffle/structure_maps.hpp"

namespace qshuffle {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

using Check = std::function<std::optional<Witness>(ShuffleContext&)>;

std::optional<Witness> compare(const std::string& input, const Element& lhs, const Element& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Witness{input, format_element(lhs), format_element(rhs)};
}

std::optional<Witness> compare(const std::string& input, const TensorElement& lhs, const TensorElement& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Witness{input, format_tensor(lhs), format_tensor(rhs)};
}

std::string join(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " | ") + p;
  return s;
}

std::string fw(const Word& w) { return format_word(w); }

std::vector<Check> comm_checks(int cap) {
  std::vector<Check> out;
  const auto words = e_words_up_to(cap);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.weight() + v.weight() > cap) continue;
      out.push_back([u, v](ShuffleContext& ctx) {
        return compare(join({fw(u), fw(v)}), ctx.mul_word(u, v), ctx.mul_word(v, u));
      });
    }
  }
  return out;
}

std::vector<Check> assoc_checks(const PrimeField& f, const std::vector<Word>& words, int cap) {
  std::vector<Check> out;
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.weight() + v.weight() > cap) continue;
      for (const auto& w : words) {
        if (u.weight() + v.weight() + w.weight() > cap) continue;
        out.push_back([f, u, v, w](ShuffleContext& ctx) {
          const Element U(f, u), V(f, v), W(f, w);
          return compare(join({fw(u), fw(v), fw(w)}), shuffle_E(shuffle_E(U, V, ctx), W, ctx),
                         shuffle_E(U, shuffle_E(V, W, ctx), ctx));
        });
      }
    }
  }
  return out;
}

std::vector<Check> ehat_checks(const PrimeField& f, int cap) {
  std::vector<Check> out;
  const auto words = r_words_up_to(cap);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.weight() + v.weight() > cap) continue;
      out.push_back([f, u, v](ShuffleContext& ctx) {
        return compare(join({"ehat-hom", fw(u), fw(v)}), ehat(ctx.mul_word(u, v)),
                       shuffle_E(ehat_word(u.x, f), ehat_word(v.x, f), ctx));
      });
    }
  }
  for (const auto& u : words) {
    out.push_back([f, u](ShuffleContext&) {
      return compare(join({"pi-hat.ehat", fw(u)}), pi_hat(ehat_word(u.x, f)), Element(f, u));
    });
    out.push_back([f, u](ShuffleContext&) {
      return compare(join({"pi-hat.iota", fw(u)}), pi_hat(iota(Element(f, u))), Element(f, u));
    });
  }
  return out;
}

std::vector<Check> pi_checks(const PrimeField& f, int cap) {
  std::vector<Check> out;
  const auto words = e_words_up_to(cap);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.weight() + v.weight() > cap) continue;
      out.push_back([f, u, v](ShuffleContext& ctx) {
        return compare(join({fw(u), fw(v)}), pi_hat(ctx.mul_word(u, v)),
                       shuffle_R(pi_hat(Element(f, u)), pi_hat(Element(f, v)), ctx));
      });
    }
  }
  return out;
}

std::string tensor_label(const Word& a, const Word& b) { return fw(a) + " (x) " + fw(b); }

std::vector<Check> phi_roundtrip_checks(const PrimeField& f, int cap) {
  std::vector<Check> out;
  for (const auto& w : e_words_up_to(cap)) {
    out.push_back([f, w](ShuffleContext& ctx) {
      const Element u(f, w);
      return compare(join({"phi.phi-inv", fw(w)}), phi(phi_inv(u, ctx), ctx), u);
    });
  }
  const auto words = r_words_up_to(cap);
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a.weight() + b.weight() > cap) continue;
      out.push_back([f, a, b](ShuffleContext& ctx) {
        const TensorElement t(f, a, b);
        return compare(join({"phi-inv.phi", tensor_label(a, b)}), phi_inv(phi(t, ctx), ctx), t);
      });
    }
  }
  return out;
}

std::vector<Check> phi_hom_checks(const PrimeField& f, int cap) {
  std::vector<Check> out;
  const auto words = r_words_up_to(cap);
  std::vector<std::pair<Word, Word>> tensors;
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a.weight() + b.weight() <= cap) tensors.emplace_back(a, b);
    }
  }
  for (const auto& s : tensors) {
    for (const auto& t : tensors) {
      const int wt = s.first.weight() + s.second.weight() + t.first.weight() + t.second.weight();
      if (wt > cap) continue;
      out.push_back([f, s, t](ShuffleContext& ctx) {
        const TensorElement S(f, s.first, s.second), T(f, t.first, t.second);
        return compare(join({"phi-hom", tensor_label(s.first, s.second), tensor_label(t.first, t.second)}),
                       phi(tensor_mul(S, T, ctx), ctx), shuffle_E(phi(S, ctx), phi(T, ctx), ctx));
      });
    }
  }
  return out;
}

std::vector<Check> lemma_y_shift_checks(const PrimeField& f, int cap) {
  std::vector<Check> out;
  const auto r_words = r_words_up_to(cap);
  const auto e_words = e_words_up_to(cap);
  for (int w = 1; w <= cap; ++w) {
    for (const auto& b : e_words) {
      for (const auto& a : r_words) {
        if (w + a.weight() + b.weight() > cap) continue;
        out.push_back([f, w, a, b](ShuffleContext& ctx) {
          const Letter yw = Letter::y(w);
          const Element A(f, a), B(f, b);
          return compare(join({"w=" + std::to_string(w), fw(b), fw(a)}),
                         element_left_mul_letter(yw, shuffle_E(B, A, ctx)),
                         shuffle_E(element_left_mul_letter(yw, B), A, ctx));
        });
      }
    }
  }
  return out;
}

Element y_times(int k, const Element& e) { return element_left_mul_letter(Letter::y(k), e); }

std::vector<Check> lemma_yx_checks(const PrimeField& f, int cap) {
  std::vector<Check> out;
  const auto idx = indices_up_to(cap);
  for (const auto& a : idx) {
    if (a.empty()) continue;
    for (const auto& b : idx) {
      if (b.empty() || a.weight() + b.weight() > cap) continue;
      for (const auto& v : idx) {
        if (a.weight() + b.weight() + v.weight() > cap) continue;
        for (const auto& w : idx) {
          if (a.weight() + b.weight() + v.weight() + w.weight() > cap) continue;
          out.push_back([f, a, b, v, w](ShuffleContext& ctx) {
            const int a1 = a.front(), b1 = b.front();
            const Element A(f, Word(v, a)), B(f, Word(w, b));
            const Element A1(f, Word(v, a.tail(1))), B1(f, Word(w, b.tail(1)));
            const Element lhs = shuffle_E(A, B, ctx);
            const Element tails = shuffle_E(A1, B1, ctx);
            Element rhs = y_times(a1, shuffle_E(A1, B, ctx));
            rhs += y_times(b1, shuffle_E(A, B1, ctx));
            rhs += y_times(a1 + b1, tails);
            for (const auto& d : ctx.delta_terms(a1, b1)) {
              rhs.add_scaled(y_times(d.i, shuffle_E(tails, ehat_word(Index{d.j}, f), ctx)), d.c);
            }
            return compare(join({fw(Word(v, a)), fw(Word(w, b))}), lhs, rhs);
          });
        }
      }
    }
  }
  return out;
}

std::vector<Check> lemma_ye_checks(const PrimeField& f, int cap) {
  std::vector<Check> out;
  const auto idx = indices_up_to(cap);
  for (int a = 1; a <= cap; ++a) {
    for (int b = 1; a + b <= cap; ++b) {
      for (const auto& as : idx) {
        if (a + b + as.weight() > cap) continue;
        for (const auto& bs : idx) {
          if (a + b + as.weight() + bs.weight() > cap) continue;
          out.push_back([f, a, b, as, bs](ShuffleContext& ctx) {
            const Element ea = ehat_word(as, f), eb = ehat_word(bs, f);
            const Element P = y_times(a, ea), Q = y_times(b, eb);
            const Element core = shuffle_E(ea, eb, ctx);
            Element rhs = y_times(a, shuffle_E(ea, Q, ctx));
            rhs += y_times(b, shuffle_E(P, eb, ctx));
            rhs += y_times(a + b, core);
            for (const auto& d : ctx.delta_terms(a, b)) {
              rhs.add_scaled(y_times(d.i, shuffle_E(core, ehat_word(Index{d.j}, f), ctx)), d.c);
            }
            const std::string label = join({"y[" + std::to_string(a) + "] ehat(" + fw(Word::xw(as)) + ")",
                                            "y[" + std::to_string(b) + "] ehat(" + fw(Word::xw(bs)) + ")"});
            return compare(label, shuffle_E(P, Q, ctx), rhs);
          });
        }
      }
    }
  }
  return out;
}

std::vector<Check> basis_checks(const PrimeField& f, int cap) {
  std::vector<Check> out;
  for (const auto& w : e_words_up_to(cap)) {
    out.push_back([f, w](ShuffleContext& ctx) -> std::optional<Witness> {
      const Element u(f, w);
      const BasisDecomposition d = rbasis_decompose(u, ctx);
      for (const auto& [b, c] : d.coordinates) {
        if (c.is_zero() || !c.in_R()) {
          return Witness{join({"coordinates", fw(w)}), "coordinate at " + fw(Word::xw(b)), format_element(c)};
        }
      }
      return compare(join({"reconstruct", fw(w)}), reconstruct(d, ctx), u);
    });
  }
  for (const auto& w : r_words_up_to(cap)) {
    out.push_back([f, w](ShuffleContext& ctx) -> std::optional<Witness> {
      const BasisDecomposition d = rbasis_decompose(ehat_word(w.x, f), ctx);
      const bool ok = d.coordinates.size() == 1 && d.coordinates.begin()->first == w.x &&
                      d.coordinates.begin()->second == Element::one(f);
      if (ok) return std::nullopt;
      std::string got;
      for (const auto& [b, c] : d.coordinates) {
        got += (got.empty() ? "" : ", ") + fw(Word::xw(b)) + " -> " + format_element(c);
      }
      return Witness{join({"ehat basis vector", fw(w)}), "{" + got + "}", "{" + fw(w) + " -> 1}"};
    });
  }
  return out;
}

std::vector<Check> build_checks(const std::string& name, const PrimeField& f, int cap) {
  if (name == "comm") return comm_checks(cap);
  if (name == "assoc-R") return assoc_checks(f, r_words_up_to(cap), cap);
  if (name == "assoc-E") return assoc_checks(f, e_words_up_to(cap), cap);
  if (name == "ehat-hom") return ehat_checks(f, cap);
  if (name == "pi-hom") return pi_checks(f, cap);
  if (name == "phi-roundtrip") return phi_roundtrip_checks(f, cap);
  if (name == "phi-hom") return phi_hom_checks(f, cap);
  if (name == "phi-iso") {
    auto out = phi_roundtrip_checks(f, cap);
    auto hom = phi_hom_checks(f, cap);
    out.insert(out.end(), std::make_move_iterator(hom.begin()), std::make_move_iterator(hom.end()));
    return out;
  }
  if (name == "lemma-3-7") return lemma_y_shift_checks(f, cap);
  if (name == "lemma-3-8") return lemma_yx_checks(f, cap);
  if (name == "lemma-3-9") return lemma_ye_checks(f, cap);
  if (name == "basis") return basis_checks(f, cap);
  throw std::invalid_argument("unknown property '" + name + "'");
}

// Seeded Fisher-Yates on case positions; the chosen positions are checked in increasing order.
std::vector<std::size_t> sample_positions(std::size_t n, std::uint64_t k, std::uint64_t seed) {
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = i;
  if (k >= n) return pos;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(pos[i], pos[j]);
  }
  pos.resize(static_cast<std::size_t>(k));
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"comm",      "assoc-R",   "assoc-E",   "ehat-hom",
                                              "pi-hom",    "phi-iso",   "phi-roundtrip", "phi-hom",
                                              "lemma-3-7", "lemma-3-8", "lemma-3-9", "basis"};
  return names;
}

bool is_property(const std::string& name) {
  const auto& n = property_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

int resolve_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QSHUFFLE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<long>(n, cap);
  }
  return std::max(n, 1);
}

VerificationReport verify_property(const std::string& name, const SweepOptions& opts) {
  if (!is_property(name)) throw std::invalid_argument("unknown property '" + name + "'");
  if (opts.weight_cap < 0) throw std::invalid_argument("weight cap must be >= 0");
  const PrimeField field(prime_power(opts.q).p);
  const auto start = std::chrono::steady_clock::now();

  const std::vector<Check> checks = build_checks(name, field, opts.weight_cap);
  VerificationReport report;
  report.property = name;
  report.q = opts.q;
  report.weight_cap = opts.weight_cap;
  report.cases = checks.size();
  report.seed = opts.seed;
  report.sampled = opts.samples.has_value() && *opts.samples < checks.size();
  const std::vector<std::size_t> positions =
      sample_positions(checks.size(), opts.samples.value_or(checks.size()), opts.seed);

  std::vector<std::optional<Witness>> results(positions.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> errored{false};
  auto worker = [&] {
    ShuffleContext ctx(opts.q);
    try {
      for (std::size_t i = next++; i < positions.size() && !errored; i = next++) {
        results[i] = checks[positions[i]](ctx);
      }
    } catch (...) {
      if (!errored.exchange(true)) error = std::current_exception();
    }
  };
  const int n_threads = std::min<int>(resolve_threads(opts.threads), static_cast<int>(std::max<std::size_t>(positions.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  for (auto& r : results) {
    ++report.checked;
    if (!r) {
      ++report.passed;
      continue;
    }
    ++report.failed;
    if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(*r));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json VerificationReport::to_json(bool timing) const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : witnesses) w.push_back({{"input", x.input}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  nlohmann::json j{{"schema", 1},           {"property", property}, {"q", q},
                   {"weight_cap", weight_cap}, {"cases", cases},   {"checked", checked},
                   {"passed", passed},       {"failed", failed},     {"pass", pass()},
                   {"mode", sampled ? "sampled" : "exhaustive"},     {"witnesses", w}};
  if (sampled) j["seed"] = seed;
  if (timing) j["wall_seconds"] = wall_seconds;
  return j;
}

std::string VerificationReport::to_text(bool timing) const {
  std::ostringstream os;
  os << property << " q=" << q << " weight-cap=" << weight_cap << ": " << (pass() ? "PASS" : "FAIL") << " (checked "
     << checked << ", passed " << passed << ", failed " << failed;
  if (sampled) os << ", sampled " << checked << " of " << cases << " with seed " << seed;
  os << ")";
  if (timing) os << " in " << wall_seconds << " s";
  os << "\n";
  for (const auto& x : witnesses) {
    os << "  witness " << x.input << "\n    lhs: " << x.lhs << "\n    rhs: " << x.rhs << "\n";
  }
  return os.str();
}

}  // namespace qshuffle
