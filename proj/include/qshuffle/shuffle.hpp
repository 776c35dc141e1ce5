#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qshuffle/element.hpp"

namespace qshuffle {

/// Parameters and memo tables for the q-shuffle product.
///
/// The product depends on q only through the divisibility condition
/// (q - 1) | j in the correction sum; coefficients live in F_p with p | q.
/// Caches are keyed by ordered word pairs. A context is not thread-safe:
/// give each thread its own.
class ShuffleContext {
 public:
  explicit ShuffleContext(std::uint32_t q, bool memoize = true);

  std::uint32_t q() const { return q_; }
  const PrimeField& field() const { return field_; }
  bool memoized() const { return memoize_; }

  /// x_a * x_b for x-words.
  Element mul_x(const Index& a, const Index& b);
  /// y_a * y_b for y-words.
  Element mul_y(const Index& a, const Index& b);
  /// u * v for arbitrary normal-form words.
  Element mul_word(const Word& u, const Word& v);

  /// The (i, j, coefficient) triples of the correction sum for leading
  /// entries (a, b): i + j = a + b, i, j >= 1, (q - 1) | j, coefficient != 0.
  struct DeltaTerm {
    int i;
    int j;
    Coeff c;
  };
  const std::vector<DeltaTerm>& delta_terms(int a, int b);

  void clear_cache();
  std::size_t cache_entries() const;

 private:
  Element compute_mul_x(const Index& a, const Index& b);
  Element compute_mul_y(const Index& a, const Index& b);
  // e * w where w is a single word
  Element mul_elem_word(const Element& e, const Word& w);

  std::uint32_t q_;
  PrimeField field_;
  bool memoize_;
  std::map<std::pair<Index, Index>, Element> xx_cache_;
  std::map<std::pair<Index, Index>, Element> yy_cache_;
  std::map<std::pair<int, int>, std::vector<DeltaTerm>> delta_cache_;
};

/// Product on R; both operands must be y-free.
Element shuffle_R(const Element& u, const Element& v, ShuffleContext& ctx);
/// Product on E.
Element shuffle_E(const Element& u, const Element& v, ShuffleContext& ctx);
/// u * u * ... * u (n factors, left-associated); n = 0 gives 1.
Element power(const Element& u, int n, ShuffleContext& ctx);

/// Componentwise product (u (x) v)(u' (x) v') = (u * u') (x) (v * v').
TensorElement tensor_mul(const TensorElement& s, const TensorElement& t, ShuffleContext& ctx);

}  // namespace qshuffle
