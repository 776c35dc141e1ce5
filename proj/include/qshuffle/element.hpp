#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "qshuffle/field.hpp"
#include "qshuffle/words.hpp"

namespace qshuffle {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generator x_k or y_k.
struct Letter {
  enum class Kind { X, Y };
  Kind kind;
  int k;

  static Letter x(int k) { return {Kind::X, k}; }
  static Letter y(int k) { return {Kind::Y, k}; }
};

/// Finite F_p-linear combination of words, stored sparsely with no zero
/// coefficients. The empty Element is 0; {empty word -> 1} is 1.
class Element {
 public:
  using Terms = std::map<Word, Coeff, CanonicalLess>;

  explicit Element(PrimeField field) : field_(field) {}
  Element(PrimeField field, const Word& w, Coeff c = 1);

  static Element zero(PrimeField field) { return Element(field); }
  static Element one(PrimeField field) { return Element(field, Word{}); }
  static Element x(PrimeField field, Index a) { return Element(field, Word::xw(std::move(a))); }
  static Element y(PrimeField field, Index b) { return Element(field, Word::yw(std::move(b))); }

  const PrimeField& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coeff(const Word& w) const;

  /// True iff no term carries a y-letter.
  bool in_R() const;
  /// Largest y-degree among the terms; -1 for zero.
  int max_y_degree() const;

  void add_term(const Word& w, Coeff c);
  /// this += c * other
  void add_scaled(const Element& other, Coeff c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  Element scaled(Coeff c) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void check_field(const Element& other) const;

  PrimeField field_;
  Terms terms_;
};

Element element_scale(const Element& e, Coeff c);
/// Prepends the letter to every term (x-letters go in front of the x-part,
/// y-letters in front of the y-part).
Element element_left_mul_letter(Letter letter, const Element& e);

/// Finite F_p-linear combination of ordered word pairs u (x) v.
class TensorElement {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Coeff, CanonicalLess>;

  explicit TensorElement(PrimeField field) : field_(field) {}
  TensorElement(PrimeField field, const Word& left, const Word& right, Coeff c = 1);

  static TensorElement one(PrimeField field) { return TensorElement(field, Word{}, Word{}); }
  /// Sum over term pairs of a (x) b.
  static TensorElement outer(const Element& a, const Element& b);

  const PrimeField& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// True iff both legs of every term are y-free.
  bool in_RR() const;

  void add_term(const Word& l, const Word& r, Coeff c);
  void add_scaled(const TensorElement& other, Coeff c);

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  TensorElement scaled(Coeff c) const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void check_field(const TensorElement& other) const;

  PrimeField field_;
  Terms terms_;
};

}  // namespace qshuffle
