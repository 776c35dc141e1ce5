#include "qshuffle/shuffle.hpp"

namespace qshuffle {

ShuffleContext::ShuffleContext(std::uint32_t q, bool memoize)
    : q_(q), field_(prime_power(q).p), memoize_(memoize) {}

const std::vector<ShuffleContext::DeltaTerm>& ShuffleContext::delta_terms(int a, int b) {
  auto [it, inserted] = delta_cache_.try_emplace({a, b});
  if (inserted) {
    const int step = static_cast<int>(q_) - 1;
    for (int j = step; j <= a + b - 1; j += step) {
      const Coeff c = delta_coeff(a, b, j, field_.p());
      if (c != 0) it->second.push_back({a + b - j, j, c});
    }
  }
  return it->second;
}

Element ShuffleContext::mul_x(const Index& a, const Index& b) {
  if (a.empty()) return Element::x(field_, b);
  if (b.empty()) return Element::x(field_, a);
  if (!memoize_) return compute_mul_x(a, b);
  const auto key = std::make_pair(a, b);
  if (auto it = xx_cache_.find(key); it != xx_cache_.end()) return it->second;
  Element r = compute_mul_x(a, b);
  xx_cache_.emplace(key, r);
  return r;
}

Element ShuffleContext::mul_y(const Index& a, const Index& b) {
  if (a.empty()) return Element::y(field_, b);
  if (b.empty()) return Element::y(field_, a);
  if (!memoize_) return compute_mul_y(a, b);
  const auto key = std::make_pair(a, b);
  if (auto it = yy_cache_.find(key); it != yy_cache_.end()) return it->second;
  Element r = compute_mul_y(a, b);
  yy_cache_.emplace(key, r);
  return r;
}

Element ShuffleContext::compute_mul_x(const Index& a, const Index& b) {
  const int a1 = a.front(), b1 = b.front();
  const Index ar = a.tail(1), br = b.tail(1);
  Element r = element_left_mul_letter(Letter::x(a1), mul_x(ar, b));
  r += element_left_mul_letter(Letter::x(b1), mul_x(a, br));
  const Element rest = mul_x(ar, br);
  r += element_left_mul_letter(Letter::x(a1 + b1), rest);
  for (const auto& [i, j, c] : delta_terms(a1, b1)) {
    const Element inner = mul_elem_word(rest, Word::xw(Index{j}));
    r.add_scaled(element_left_mul_letter(Letter::x(i), inner), c);
  }
  return r;
}

// The correction sum carries both an x_j and a y_j branch; each inner product
// involves strictly fewer y-letters than y_a * y_b, which bounds the recursion.
Element ShuffleContext::compute_mul_y(const Index& a, const Index& b) {
  const int a1 = a.front(), b1 = b.front();
  const Index ar = a.tail(1), br = b.tail(1);
  Element r = element_left_mul_letter(Letter::y(a1), mul_y(ar, b));
  r += element_left_mul_letter(Letter::y(b1), mul_y(a, br));
  const Element rest = mul_y(ar, br);
  r += element_left_mul_letter(Letter::y(a1 + b1), rest);
  for (const auto& [i, j, c] : delta_terms(a1, b1)) {
    Element inner = mul_elem_word(rest, Word::xw(Index{j}));
    inner += mul_elem_word(rest, Word::yw(Index{j}));
    r.add_scaled(element_left_mul_letter(Letter::y(i), inner), c);
  }
  return r;
}

Element ShuffleContext::mul_elem_word(const Element& e, const Word& w) {
  Element r(field_);
  for (const auto& [u, c] : e.terms()) r.add_scaled(mul_word(u, w), c);
  return r;
}

// (x_a y_b) * (x_a' y_b') = (x_a * x_a') * (y_b * y_b'), and an x-word times a
// mixed word x_g y_h is (x_f * x_g) y_h.
Element ShuffleContext::mul_word(const Word& u, const Word& v) {
  Element xs = mul_x(u.x, v.x);
  if (u.y.empty() && v.y.empty()) return xs;
  Element ys = mul_y(u.y, v.y);
  if (u.x.empty() && v.x.empty()) return ys;
  Element r(field_);
  for (const auto& [f, cf] : xs.terms()) {
    for (const auto& [g, cg] : ys.terms()) {
      const Coeff c = field_.mul(cf, cg);
      const Element fx = mul_x(f.x, g.x);
      for (const auto& [m, cm] : fx.terms()) {
        r.add_term(Word(m.x, g.y), field_.mul(c, cm));
      }
    }
  }
  return r;
}

void ShuffleContext::clear_cache() {
  xx_cache_.clear();
  yy_cache_.clear();
}

std::size_t ShuffleContext::cache_entries() const { return xx_cache_.size() + yy_cache_.size(); }

Element shuffle_E(const Element& u, const Element& v, ShuffleContext& ctx) {
  if (!(u.field() == ctx.field()) || !(v.field() == ctx.field())) {
    throw FieldMismatch("shuffle: operand field does not match the context characteristic");
  }
  Element r(ctx.field());
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      r.add_scaled(ctx.mul_word(wu, wv), ctx.field().mul(cu, cv));
    }
  }
  return r;
}

Element shuffle_R(const Element& u, const Element& v, ShuffleContext& ctx) {
  if (!u.in_R() || !v.in_R()) {
    throw std::invalid_argument("shuffle_R: operand has a y-letter");
  }
  return shuffle_E(u, v, ctx);
}

Element power(const Element& u, int n, ShuffleContext& ctx) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  Element r = Element::one(ctx.field());
  for (int k = 0; k < n; ++k) r = shuffle_E(r, u, ctx);
  return r;
}

TensorElement tensor_mul(const TensorElement& s, const TensorElement& t, ShuffleContext& ctx) {
  const PrimeField& f = ctx.field();
  TensorElement r(f);
  for (const auto& [ks, cs] : s.terms()) {
    for (const auto& [kt, ct] : t.terms()) {
      const Element left = ctx.mul_word(ks.first, kt.first);
      const Element right = ctx.mul_word(ks.second, kt.second);
      r.add_scaled(TensorElement::outer(left, right), f.mul(cs, ct));
    }
  }
  return r;
}

}  // namespace qshuffle
