#include "qshuffle/mzv.hpp"

#include <stdexcept>

#include "qshuffle/shuffle.hpp"

namespace qshuffle {

namespace {

using Elem = FiniteField::Elem;

// sum over monic f of degree d of f^-a, with f = t^-d u and u = 1 + c_{d-1} t + ... + c_0 t^d.
LaurentSeries brute_power_sum(int d, int a, const FieldPtr& field, int precision) {
  if (d < 0 || a < 1) throw std::invalid_argument("power_sum: need d >= 0 and a >= 1");
  const FiniteField& f = *field;
  const long long n_ll = static_cast<long long>(precision) - static_cast<long long>(a) * d + 1;
  if (n_ll <= 0) return LaurentSeries::zero(field, precision);
  const auto n = static_cast<std::size_t>(n_ll);
  std::vector<Elem> sum(n, 0);
  std::vector<Elem> u(static_cast<std::size_t>(d) + 1, 0);
  u[0] = 1;
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(d), 0);
  while (true) {
    for (int k = 0; k < d; ++k) u[static_cast<std::size_t>(k) + 1] = static_cast<Elem>(digits[k]);
    const std::vector<Elem> inv = inverse_power_series(f, u, n);
    std::vector<Elem> pw = inv;
    for (int k = 1; k < a; ++k) pw = mul_truncated(f, pw, inv, n);
    for (std::size_t k = 0; k < pw.size(); ++k) sum[k] = f.add(sum[k], pw[k]);
    int pos = 0;
    while (pos < d && ++digits[pos] == f.q()) digits[pos++] = 0;
    if (pos == d) break;
  }
  return LaurentSeries(field, a * d, std::move(sum), precision);
}

}  // namespace

long long power_sum_valuation_bound(int d, int a, std::uint32_t q) {
  return static_cast<long long>(d) * a + static_cast<long long>(q - 1) * d * (d + 1) / 2;
}

MzvContext::MzvContext(FieldPtr field, int precision) : field_(std::move(field)), precision_(precision) {
  if (precision < 0) throw std::invalid_argument("mzv: precision must be >= 0");
}

int MzvContext::degree_cut(int a) const {
  int d = 0;
  while (power_sum_valuation_bound(d + 1, a, field_->q()) <= precision_) ++d;
  return d;
}

const LaurentSeries& MzvContext::power_sum(int d, int a) {
  const auto key = std::make_pair(d, a);
  if (auto it = sums_.find(key); it != sums_.end()) return it->second;
  LaurentSeries s = d > degree_cut(a) ? LaurentSeries::zero(field_, precision_)
                                      : brute_power_sum(d, a, field_, precision_);
  return sums_.emplace(key, std::move(s)).first->second;
}

const LaurentSeries& MzvContext::mzv(const Index& a) {
  if (auto it = zetas_.find(a); it != zetas_.end()) return it->second;
  // z[D] = sum over D > d_j > ... > d_m >= 0 of the tail product, built from the last entry.
  int top = 0;
  for (int k : a.entries()) top = std::max(top, degree_cut(k));
  std::vector<LaurentSeries> z(static_cast<std::size_t>(top) + 2, LaurentSeries::one(field_, precision_));
  for (int j = a.depth() - 1; j >= 0; --j) {
    const int cut = degree_cut(a[j]);
    std::vector<LaurentSeries> next(z.size(), LaurentSeries::zero(field_, precision_));
    for (std::size_t D = 1; D < z.size(); ++D) {
      next[D] = next[D - 1];
      const int d = static_cast<int>(D) - 1;
      if (d <= cut) next[D] += power_sum(d, a[j]) * z[static_cast<std::size_t>(d)];
    }
    z = std::move(next);
  }
  return zetas_.emplace(a, z.back().truncated(precision_)).first->second;
}

LaurentSeries MzvContext::realize(const Element& u) {
  if (u.field().p() != field_->p()) throw FieldMismatch("realize: element characteristic differs from the field");
  LaurentSeries r = LaurentSeries::zero(field_, precision_);
  for (const auto& [w, c] : u.terms()) {
    if (!w.y_free()) throw std::invalid_argument("realize: word " + w.y.to_string() + " has a y-part");
    r += mzv(w.x).scaled(field_->from_prime(c));
  }
  return r;
}

LaurentSeries power_sum(int d, int a, FieldPtr field, int precision) {
  return brute_power_sum(d, a, field, precision);
}

MzvValue mzv(const Index& a, FieldPtr field, int precision) {
  MzvContext ctx(std::move(field), precision);
  const int cut = a.empty() ? 0 : ctx.degree_cut(a.front());
  return {a, ctx.mzv(a), cut};
}

LaurentSeries realize(const Element& u, FieldPtr field, int precision) {
  return MzvContext(std::move(field), precision).realize(u);
}

OracleResult check_product_oracle(const Element& product, const Index& a, const Index& b, MzvContext& ctx) {
  const LaurentSeries lhs = ctx.realize(product);
  const LaurentSeries rhs = (ctx.mzv(a) * ctx.mzv(b)).truncated(ctx.precision());
  const LaurentSeries residual = (lhs - rhs).truncated(ctx.precision());
  OracleResult r{residual.is_zero(), std::nullopt, lhs, rhs};
  if (!r.pass) r.residual_valuation = residual.valuation();
  return r;
}

OracleResult check_shuffle_oracle(const Index& a, const Index& b, FieldPtr field, int precision) {
  ShuffleContext sctx(field->q());
  const Element product = sctx.mul_word(Word::xw(a), Word::xw(b));
  MzvContext ctx(std::move(field), precision);
  return check_product_oracle(product, a, b, ctx);
}

ThakurResult thakur_relation_check(FieldPtr field, int precision, int sign) {
  const int q = static_cast<int>(field->q());
  MzvContext lo(field, precision), hi(field, precision + q);
  std::vector<Elem> poly(static_cast<std::size_t>(q) + 1, 0);
  poly[1] = 1;
  poly[static_cast<std::size_t>(q)] = field->neg(1);
  LaurentSeries factor = LaurentSeries::from_theta_poly(field, poly);
  if (sign < 0) factor = -factor;
  const LaurentSeries residual =
      (lo.mzv(Index{q}) + factor * hi.mzv(Index{1, q - 1})).truncated(precision);
  ThakurResult r{residual.is_zero(), std::nullopt, residual};
  if (!r.pass) r.residual_valuation = residual.valuation();
  return r;
}

}  // namespace qshuffle
