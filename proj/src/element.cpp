#include <algorithm>

#include "qshuffle/element.hpp"

namespace qshuffle {

Element::Element(PrimeField field, const Word& w, Coeff c) : field_(field) { add_term(w, c); }

Coeff Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

bool Element::in_R() const {
  for (const auto& [w, c] : terms_) {
    if (!w.y_free()) return false;
  }
  return true;
}

int Element::max_y_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, w.y_degree());
  return d;
}

void Element::add_term(const Word& w, Coeff c) {
  c %= field_.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& other, Coeff c) {
  check_field(other);
  c %= field_.p();
  if (c == 0) return;
  for (const auto& [w, v] : other.terms_) add_term(w, field_.mul(v, c));
}

Element& Element::operator+=(const Element& other) {
  add_scaled(other, 1);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  add_scaled(other, field_.neg(1));
  return *this;
}

Element Element::operator-() const { return scaled(field_.neg(1)); }

Element Element::scaled(Coeff c) const {
  Element r(field_);
  r.add_scaled(*this, c);
  return r;
}

void Element::check_field(const Element& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("Element: operands over different prime fields");
  }
}

Element element_scale(const Element& e, Coeff c) { return e.scaled(c); }

Element element_left_mul_letter(Letter letter, const Element& e) {
  Element r(e.field());
  for (const auto& [w, c] : e.terms()) {
    if (letter.kind == Letter::Kind::X) {
      r.add_term(Word(w.x.prepend(letter.k), w.y), c);
    } else {
      r.add_term(Word(w.x, w.y.prepend(letter.k)), c);
    }
  }
  return r;
}

TensorElement::TensorElement(PrimeField field, const Word& left, const Word& right, Coeff c)
    : field_(field) {
  add_term(left, right, c);
}

TensorElement TensorElement::outer(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("TensorElement::outer: field mismatch");
  TensorElement r(a.field());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) r.add_term(wa, wb, a.field().mul(ca, cb));
  }
  return r;
}

bool TensorElement::in_RR() const {
  for (const auto& [k, c] : terms_) {
    if (!k.first.y_free() || !k.second.y_free()) return false;
  }
  return true;
}

void TensorElement::add_term(const Word& l, const Word& r, Coeff c) {
  c %= field_.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key(l, r), c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void TensorElement::add_scaled(const TensorElement& other, Coeff c) {
  check_field(other);
  c %= field_.p();
  if (c == 0) return;
  for (const auto& [k, v] : other.terms_) add_term(k.first, k.second, field_.mul(v, c));
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  add_scaled(other, 1);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  add_scaled(other, field_.neg(1));
  return *this;
}

TensorElement TensorElement::scaled(Coeff c) const {
  TensorElement r(field_);
  r.add_scaled(*this, c);
  return r;
}

void TensorElement::check_field(const TensorElement& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("TensorElement: operands over different prime fields");
  }
}

}  // namespace qshuffle
