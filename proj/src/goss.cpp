#include "qshuffle/goss.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace qshuffle {

bool FormalCoeff::MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return b < a;
}

FormalCoeff FormalCoeff::constant(PrimeField field, Coeff c) {
  FormalCoeff r(field);
  r.add_term({}, c);
  return r;
}

FormalCoeff FormalCoeff::alpha(PrimeField field, int i) {
  if (i < 0) throw std::invalid_argument("alpha index must be >= 0");
  return constant(field, 1).times_alpha(i);
}

bool FormalCoeff::is_one() const { return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1; }

Coeff FormalCoeff::constant_term() const { return coeff({}); }

Coeff FormalCoeff::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void FormalCoeff::add_term(Exponents e, Coeff c) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  c = field_.reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted && (it->second = field_.add(it->second, c)) == 0) terms_.erase(it);
}

FormalCoeff& FormalCoeff::operator+=(const FormalCoeff& o) {
  if (!(o.field_ == field_)) throw std::invalid_argument("formal coefficients over different fields");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FormalCoeff FormalCoeff::times_alpha(int i) const {
  if (i == 0) return *this;
  FormalCoeff r(field_);
  for (const auto& [exps, c] : terms_) {
    Exponents e = exps;
    if (static_cast<int>(e.size()) < i) e.resize(i, 0);
    ++e[i - 1];
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

FormalCoeff FormalCoeff::specialize_zero() const { return constant(field_, constant_term()); }

std::string FormalCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "a" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += std::to_string(c);
    } else {
      s += (c == 1 ? "" : std::to_string(c) + "*") + mono;
    }
  }
  return s;
}

bool GossPolynomial::is_monic() const { return degree() == n && coeffs.at(n).is_one(); }

bool GossPolynomial::divisible_by_x() const { return !coeffs.contains(0); }

bool GossPolynomial::is_pure_power() const { return coeffs.size() == 1 && is_monic(); }

bool GossPolynomial::mentions_alpha1() const {
  for (const auto& [d, c] : coeffs) {
    for (const auto& [e, v] : c.terms()) {
      if (!e.empty() && e[0] > 0) return true;
    }
  }
  return false;
}

GossPolynomial GossPolynomial::specialize_zero() const {
  GossPolynomial r{n, q, {}};
  for (const auto& [d, c] : coeffs) {
    FormalCoeff s = c.specialize_zero();
    if (!s.is_zero()) r.coeffs.emplace(d, std::move(s));
  }
  return r;
}

std::string GossPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const auto& [d, c] = *it;
    if (!s.empty()) s += " + ";
    const std::string x = d == 0 ? "" : d == 1 ? "X" : "X^" + std::to_string(d);
    if (c.is_one()) {
      s += x.empty() ? "1" : x;
      continue;
    }
    std::string cs = c.to_string();
    if (c.terms().size() > 1) cs = "(" + cs + ")";
    s += x.empty() ? cs : cs + "*" + x;
  }
  return s;
}

nlohmann::json GossPolynomial::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [d, c] : coeffs) j[std::to_string(d)] = c.to_string();
  return j;
}

int goss_upper_index(int n, std::uint32_t q) {
  int i = -1;
  for (std::int64_t qi = 1; qi <= n - 1; qi *= q) ++i;
  return i;
}

std::vector<GossPolynomial> goss_table(int n_max, std::uint32_t q) {
  if (n_max < 1) throw std::invalid_argument("goss: n must be >= 1");
  const PrimeField f(prime_power(q).p);
  std::vector<GossPolynomial> g;
  g.reserve(n_max);
  g.push_back({1, q, {}});
  g[0].coeffs.emplace(1, FormalCoeff::constant(f, 1));
  for (int n = 2; n <= n_max; ++n) {
    GossPolynomial r{n, q, {}};
    std::int64_t qi = 1;
    for (int i = 0; qi <= n - 1; ++i, qi *= q) {
      const int m = n - static_cast<int>(qi);
      assert(m >= 1);
      for (const auto& [d, c] : g[m - 1].coeffs) {
        auto [it, inserted] = r.coeffs.try_emplace(d + 1, f);
        it->second += c.times_alpha(i);
      }
    }
    std::erase_if(r.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    g.push_back(std::move(r));
  }
  return g;
}

GossPolynomial goss(int n, std::uint32_t q) {
  if (n < 1) throw std::invalid_argument("goss: n must be >= 1");
  return goss_table(n, q).back();
}

}  // namespace qshuffle
