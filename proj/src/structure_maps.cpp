#include "qshuffle/structure_maps.hpp"

#include <stdexcept>

namespace qshuffle {

Element ehat_word(const Index& a, const PrimeField& field) {
  Element r(field);
  for (int i = 0; i <= a.depth(); ++i) r.add_term(Word(a.tail(i), a.head(i)), 1);
  return r;
}

Element ehat(const Element& u) {
  if (!u.in_R()) throw std::invalid_argument("ehat: operand has a y-letter");
  Element r(u.field());
  for (const auto& [w, c] : u.terms()) r.add_scaled(ehat_word(w.x, u.field()), c);
  return r;
}

Element iota(const Element& u) {
  if (!u.in_R()) throw std::invalid_argument("iota: operand has a y-letter");
  return u;
}

Element pi_hat(const Element& u) {
  Element r(u.field());
  for (const auto& [w, c] : u.terms()) {
    if (w.y_free()) r.add_term(w, c);
  }
  return r;
}

Element phi(const TensorElement& t, ShuffleContext& ctx) {
  if (!t.in_RR()) throw std::invalid_argument("phi: tensor leg has a y-letter");
  Element r(ctx.field());
  for (const auto& [k, c] : t.terms()) {
    const Element basis = shuffle_E(Element(ctx.field(), k.first), ehat_word(k.second.x, ctx.field()), ctx);
    r.add_scaled(basis, c);
  }
  return r;
}

TensorElement phi_inv(const Element& u, ShuffleContext& ctx) {
  TensorElement result(ctx.field());
  Element rest = u;
  while (!rest.is_zero()) {
    const int top = rest.max_y_degree();
    TensorElement layer(ctx.field());
    for (const auto& [w, c] : rest.terms()) {
      if (w.y_degree() == top) layer.add_term(Word::xw(w.x), Word::xw(w.y), c);
    }
    rest -= phi(layer, ctx);
    result += layer;
    if (rest.max_y_degree() >= top) {
      throw std::logic_error("phi_inv: elimination did not lower the y-degree");
    }
  }
  return result;
}

BasisDecomposition rbasis_decompose(const Element& u, ShuffleContext& ctx) {
  BasisDecomposition d;
  const TensorElement t = phi_inv(u, ctx);
  for (const auto& [k, c] : t.terms()) {
    auto [it, inserted] = d.coordinates.try_emplace(k.second.x, ctx.field());
    it->second.add_term(k.first, c);
  }
  std::erase_if(d.coordinates, [](const auto& kv) { return kv.second.is_zero(); });
  return d;
}

Element reconstruct(const BasisDecomposition& d, ShuffleContext& ctx) {
  Element r(ctx.field());
  for (const auto& [b, coord] : d.coordinates) r += shuffle_E(coord, ehat_word(b, ctx.field()), ctx);
  return r;
}

}  // namespace qshuffle
