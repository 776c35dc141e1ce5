#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "qshuffle/field.hpp"

namespace qshuffle {

using FieldPtr = std::shared_ptr<const FiniteField>;
FieldPtr make_field(std::uint32_t q);

/// Truncated Laurent series in t = 1/theta over F_q, known modulo t^(precision + 1).
/// Stored coefficients cover exponents valuation ... precision with a nonzero
/// leading coefficient; a series that vanishes to its precision has no
/// coefficients and valuation precision + 1.
class LaurentSeries {
 public:
  using Elem = FiniteField::Elem;
  /// Precision of exact (finite) expansions.
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  LaurentSeries(FieldPtr field, int precision);
  /// sum_k coeffs[k] t^(valuation + k) modulo t^(precision + 1).
  LaurentSeries(FieldPtr field, int valuation, std::vector<Elem> coeffs, int precision);

  static LaurentSeries zero(FieldPtr field, int precision) { return LaurentSeries(std::move(field), precision); }
  static LaurentSeries one(FieldPtr field, int precision = kExact);
  static LaurentSeries monomial(FieldPtr field, Elem c, int exponent, int precision = kExact);
  /// Exact expansion of the polynomial sum_i coeffs[i] theta^i.
  static LaurentSeries from_theta_poly(FieldPtr field, const std::vector<Elem>& coeffs);

  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int valuation() const { return valuation_; }
  int precision() const { return precision_; }
  bool is_exact() const { return precision_ >= kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^k (zero below the valuation; k must not exceed the precision).
  Elem coeff(int k) const;
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  LaurentSeries truncated(int precision) const;
  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scaled(Elem c) const;
  /// Multiplicative inverse by Newton iteration; for exact operands the
  /// result is computed to `precision`.
  LaurentSeries inverse(int precision = kExact) const;

  /// Same field, precision, valuation and coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  /// theta-power rendering: "t^-2 + t^-3 + O(t^-31)".
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void normalize();

  FieldPtr field_;
  int valuation_;
  std::vector<Elem> coeffs_;
  int precision_;
};

/// 1 / u modulo t^n for a power series u with u[0] != 0, by Newton iteration.
std::vector<FiniteField::Elem> inverse_power_series(const FiniteField& f, const std::vector<FiniteField::Elem>& u,
                                                    std::size_t n);
/// a * b truncated to n coefficients.
std::vector<FiniteField::Elem> mul_truncated(const FiniteField& f, const std::vector<FiniteField::Elem>& a,
                                             const std::vector<FiniteField::Elem>& b, std::size_t n);

}  // namespace qshuffle
