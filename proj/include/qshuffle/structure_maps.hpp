#pragma once

#include <map>

#include "qshuffle/shuffle.hpp"

namespace qshuffle {

/// e^(x_a) = sum_{i=0}^{dep a} x_{a^{(i)}} y_{a_{(i)}}, extended linearly; e^(1) = 1.
Element ehat(const Element& u);
Element ehat_word(const Index& a, const PrimeField& field);

/// Inclusion R -> E (identity on terms; checks the operand is y-free).
Element iota(const Element& u);

/// Keeps exactly the y-free terms.
Element pi_hat(const Element& u);

/// phi(x_a (x) x_b) = x_a * e^(x_b), extended linearly. Both legs must be y-free.
Element phi(const TensorElement& t, ShuffleContext& ctx);

/// Inverse of phi, by elimination on the top y-degree: the basis vector
/// x_a * e^(x_b) equals x_a y_b plus terms of y-degree < dep(b).
TensorElement phi_inv(const Element& u, ShuffleContext& ctx);

/// R-coordinates of u with respect to the basis {e^(x_b)}, keyed by b.
struct BasisDecomposition {
  std::map<Index, Element, CanonicalLess> coordinates;
};

BasisDecomposition rbasis_decompose(const Element& u, ShuffleContext& ctx);
/// sum_b coordinates(b) * e^(x_b)
Element reconstruct(const BasisDecomposition& d, ShuffleContext& ctx);

/// (f (x) g) applied termwise to a tensor.
template <typename F, typename G>
TensorElement tensor_map(const TensorElement& t, F&& f, G&& g) {
  TensorElement r(t.field());
  for (const auto& [k, c] : t.terms()) {
    r.add_scaled(TensorElement::outer(f(Element(t.field(), k.first)), g(Element(t.field(), k.second))),
                 c);
  }
  return r;
}

}  // namespace qshuffle
