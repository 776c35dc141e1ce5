#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qshuffle/field.hpp"

namespace qshuffle {

/// Element of F_p[a1, a2, ...]: monomials keyed by exponent vectors
/// (entry i - 1 is the exponent of a_i, trailing zeros trimmed).
class FormalCoeff {
 public:
  using Exponents = std::vector<int>;
  /// Total degree first, then a_1-heavy monomials first.
  struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };

  explicit FormalCoeff(PrimeField field) : field_(field) {}
  static FormalCoeff constant(PrimeField field, Coeff c);
  /// The generator a_i; a_0 is the constant 1.
  static FormalCoeff alpha(PrimeField field, int i);

  const PrimeField& field() const { return field_; }
  const std::map<Exponents, Coeff, MonomialOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  Coeff constant_term() const;
  /// Coefficient of the monomial with the given exponents.
  Coeff coeff(const Exponents& e) const;

  void add_term(Exponents e, Coeff c);
  FormalCoeff& operator+=(const FormalCoeff& o);
  /// Multiplication by a_i (i = 0 is the identity).
  FormalCoeff times_alpha(int i) const;
  /// Sets every a_i to zero, leaving the constant term.
  FormalCoeff specialize_zero() const;

  std::string to_string() const;
  friend bool operator==(const FormalCoeff& a, const FormalCoeff& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  PrimeField field_;
  std::map<Exponents, Coeff, MonomialOrder> terms_;
};

/// G_n(X) with formal coefficients, stored by degree with zero coefficients dropped.
struct GossPolynomial {
  int n = 0;
  std::uint32_t q = 0;
  std::map<int, FormalCoeff> coeffs;

  int degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
  bool is_monic() const;
  bool divisible_by_x() const;
  /// True iff the polynomial is exactly X^n.
  bool is_pure_power() const;
  /// Some coefficient involves a_1.
  bool mentions_alpha1() const;
  GossPolynomial specialize_zero() const;

  /// "X^4 + a1*X^2"
  std::string to_string() const;
  /// {"4": "1", "2": "a1"}
  nlohmann::json to_json() const;
};

/// Largest i with q^i <= n - 1 (-1 for n = 1): the upper limit of the recursion sum.
int goss_upper_index(int n, std::uint32_t q);

/// G_1 = X; G_n = X * sum_{i : q^i <= n - 1} a_i G_{n - q^i}, over F_p with p | q.
GossPolynomial goss(int n, std::uint32_t q);
/// goss(1), ..., goss(n_max), sharing the recursion.
std::vector<GossPolynomial> goss_table(int n_max, std::uint32_t q);

}  // namespace qshuffle
