#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qshuffle/element.hpp"
#include "qshuffle/laurent.hpp"

namespace qshuffle {

/// Lower bound for the valuation of sum_{f monic, deg f = d} f^-a: every
/// surviving term has valuation at least d a + (q - 1) d (d + 1) / 2.
long long power_sum_valuation_bound(int d, int a, std::uint32_t q);

/// Memoized power sums and Thakur multiple zeta values over one field at one
/// absolute precision N (results are exact modulo t^(N + 1)). Not thread-safe.
class MzvContext {
 public:
  MzvContext(FieldPtr field, int precision);

  const FieldPtr& field() const { return field_; }
  int precision() const { return precision_; }
  /// Largest degree d whose power sum S_d(a) can be nonzero modulo t^(N + 1).
  int degree_cut(int a) const;

  const LaurentSeries& power_sum(int d, int a);
  const LaurentSeries& mzv(const Index& a);
  /// Linear extension x_a -> zeta(a), coefficients lifted from F_p.
  LaurentSeries realize(const Element& u);

 private:
  FieldPtr field_;
  int precision_;
  std::map<std::pair<int, int>, LaurentSeries> sums_;
  std::map<Index, LaurentSeries> zetas_;
};

/// Brute-force sum over the q^d monic polynomials of degree d, modulo t^(precision + 1).
LaurentSeries power_sum(int d, int a, FieldPtr field, int precision);

struct MzvValue {
  Index index;
  LaurentSeries value;
  int degree_cut;
};
MzvValue mzv(const Index& a, FieldPtr field, int precision);
LaurentSeries realize(const Element& u, FieldPtr field, int precision);

struct OracleResult {
  bool pass;
  /// Valuation of the nonzero residual; empty on pass.
  std::optional<int> residual_valuation;
  LaurentSeries lhs;
  LaurentSeries rhs;
};
/// realize(x_a * x_b) against zeta(a) zeta(b).
OracleResult check_shuffle_oracle(const Index& a, const Index& b, FieldPtr field, int precision);
/// realize(product) against zeta(a) zeta(b) for a caller-supplied product.
OracleResult check_product_oracle(const Element& product, const Index& a, const Index& b, MzvContext& ctx);

struct ThakurResult {
  bool pass;
  std::optional<int> residual_valuation;
  LaurentSeries residual;
};
/// zeta(q) + sign (theta - theta^q) zeta(1, q - 1) modulo t^(precision + 1);
/// the relation holds with sign = -1.
ThakurResult thakur_relation_check(FieldPtr field, int precision, int sign = -1);

}  // namespace qshuffle
