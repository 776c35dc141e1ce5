#include "qshuffle/hopf.hpp"

#include <tuple>

#include "qshuffle/serialize.hpp"

namespace qshuffle {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

void require_in_domain(const HopfStructure& h, const Word& w) {
  if (w.weight() > h.weight_bound) {
    throw HopfTableError("word " + format_word(w) + " exceeds the weight bound " +
                         std::to_string(h.weight_bound));
  }
  if (h.algebra == Algebra::R && !w.y_free()) {
    throw HopfTableError("word " + format_word(w) + " is not in R");
  }
}

struct Less3 {
  bool operator()(const std::tuple<Word, Word, Word>& a, const std::tuple<Word, Word, Word>& b) const {
    for (int k = 0; k < 3; ++k) {
      const Word& x = k == 0 ? std::get<0>(a) : k == 1 ? std::get<1>(a) : std::get<2>(a);
      const Word& y = k == 0 ? std::get<0>(b) : k == 1 ? std::get<1>(b) : std::get<2>(b);
      const auto c = canonical_compare(x, y);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

class Tensor3 {
 public:
  explicit Tensor3(PrimeField f) : field_(f) {}
  void add(const Word& a, const Word& b, const Word& c, Coeff v) {
    if (v == 0) return;
    auto key = std::make_tuple(a, b, c);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), v);
    } else if ((it->second = field_.add(it->second, v)) == 0) {
      terms_.erase(it);
    }
  }
  bool operator==(const Tensor3& o) const { return terms_ == o.terms_; }
  std::string format() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms_) {
      if (!s.empty()) s += " + ";
      if (v != 1) s += std::to_string(v) + "*";
      s += format_word(std::get<0>(k)) + " (x) " + format_word(std::get<1>(k)) + " (x) " +
           format_word(std::get<2>(k));
    }
    return s;
  }

 private:
  PrimeField field_;
  std::map<std::tuple<Word, Word, Word>, Coeff, Less3> terms_;
};

class Transporter {
 public:
  Transporter(const HopfStructure& src, ShuffleContext& ctx) : src_(src), ctx_(ctx), f_(src.field()) {
    if (src.algebra != Algebra::R) throw HopfTableError("transport: source must be an R-structure");
    if (ctx.q() != src.q) throw FieldMismatch("transport: context q differs from the structure's q");
  }

  TensorElement coproduct(const Word& w) {
    check(w);
    if (w.y.empty()) return src_.coproduct_at(w);
    const TensorElement dy = coproduct_y(w.y);
    if (w.x.empty()) return dy;
    return tensor_mul(src_.coproduct_at(Word::xw(w.x)), dy, ctx_);
  }

  Coeff counit(const Word& w) {
    check(w);
    if (w.y.empty()) return src_.counit_at(w);
    return f_.mul(src_.counit_at(Word::xw(w.x)), counit_y(w.y));
  }

  Element antipode(const Word& w) {
    check(w);
    if (w.y.empty()) return src_.antipode_at(w);
    const Element sy = antipode_y(w.y);
    if (w.x.empty()) return sy;
    return shuffle_E(src_.antipode_at(Word::xw(w.x)), sy, ctx_);
  }

 private:
  void check(const Word& w) const {
    if (w.weight() > src_.weight_bound) {
      throw HopfTableError("transport: word " + format_word(w) + " exceeds the weight bound " +
                           std::to_string(src_.weight_bound));
    }
  }

  TensorElement coproduct_y(const Index& b) {
    if (b.empty()) return TensorElement::one(f_);
    if (auto it = dy_.find(b); it != dy_.end()) return it->second;
    const auto ehat_fn = [](const Element& e) { return ehat(e); };
    TensorElement r = tensor_map(src_.coproduct_at(Word::xw(b)), ehat_fn, ehat_fn);
    for (int i = 0; i < b.depth(); ++i) {
      const auto [head, tail] = index_head_tail(b, i);
      r -= tensor_mul(src_.coproduct_at(Word::xw(tail)), coproduct_y(head), ctx_);
    }
    dy_.emplace(b, r);
    return r;
  }

  Coeff counit_y(const Index& b) {
    if (b.empty()) return 1;
    if (auto it = ey_.find(b); it != ey_.end()) return it->second;
    Coeff r = src_.counit_at(Word::xw(b));
    for (int i = 0; i < b.depth(); ++i) {
      const auto [head, tail] = index_head_tail(b, i);
      r = f_.sub(r, f_.mul(src_.counit_at(Word::xw(tail)), counit_y(head)));
    }
    ey_.emplace(b, r);
    return r;
  }

  Element antipode_y(const Index& b) {
    if (b.empty()) return Element::one(f_);
    if (auto it = sy_.find(b); it != sy_.end()) return it->second;
    Element r = ehat(src_.antipode_at(Word::xw(b)));
    for (int i = 0; i < b.depth(); ++i) {
      const auto [head, tail] = index_head_tail(b, i);
      r -= shuffle_E(src_.antipode_at(Word::xw(tail)), antipode_y(head), ctx_);
    }
    sy_.emplace(b, r);
    return r;
  }

  const HopfStructure& src_;
  ShuffleContext& ctx_;
  PrimeField f_;
  std::map<Index, TensorElement> dy_;
  std::map<Index, Coeff> ey_;
  std::map<Index, Element> sy_;
};

template <typename T>
void note_failure(AxiomReport& r, std::string input, const T& lhs, const T& rhs) {
  r.pass = false;
  if (r.witnesses.size() < kMaxWitnesses) {
    r.witnesses.push_back({std::move(input), lhs, rhs});
  }
}

AxiomReport named_report(std::string axiom) {
  AxiomReport r;
  r.axiom = std::move(axiom);
  return r;
}

std::string fmt(const Element& e) { return format_element(e); }
std::string fmt(const TensorElement& t) { return format_tensor(t); }

}  // namespace

std::vector<Word> HopfStructure::domain() const {
  return algebra == Algebra::R ? r_words_up_to(weight_bound) : e_words_up_to(weight_bound);
}

void HopfStructure::validate() const {
  const PrimeField f = field();
  for (const auto& w : domain()) {
    const auto d = coproduct.find(w);
    if (d == coproduct.end()) throw HopfTableError("coproduct table misses " + format_word(w));
    if (!counit.contains(w)) throw HopfTableError("counit table misses " + format_word(w));
    const auto s = antipode.find(w);
    if (s == antipode.end()) throw HopfTableError("antipode table misses " + format_word(w));
    if (!(d->second.field() == f) || !(s->second.field() == f)) {
      throw HopfTableError("table entry for " + format_word(w) + " has the wrong characteristic");
    }
    for (const auto& [k, c] : d->second.terms()) {
      if (k.first.weight() + k.second.weight() != w.weight()) {
        throw HopfTableError("coproduct of " + format_word(w) + " is not weight-graded");
      }
      if (algebra == Algebra::R && (!k.first.y_free() || !k.second.y_free())) {
        throw HopfTableError("coproduct of " + format_word(w) + " leaves R (x) R");
      }
    }
    for (const auto& [u, c] : s->second.terms()) {
      if (u.weight() != w.weight()) {
        throw HopfTableError("antipode of " + format_word(w) + " is not weight-graded");
      }
      if (algebra == Algebra::R && !u.y_free()) {
        throw HopfTableError("antipode of " + format_word(w) + " leaves R");
      }
    }
  }
}

const TensorElement& HopfStructure::coproduct_at(const Word& w) const {
  require_in_domain(*this, w);
  const auto it = coproduct.find(w);
  if (it == coproduct.end()) throw HopfTableError("coproduct table misses " + format_word(w));
  return it->second;
}

Coeff HopfStructure::counit_at(const Word& w) const {
  require_in_domain(*this, w);
  const auto it = counit.find(w);
  if (it == counit.end()) throw HopfTableError("counit table misses " + format_word(w));
  return it->second;
}

const Element& HopfStructure::antipode_at(const Word& w) const {
  require_in_domain(*this, w);
  const auto it = antipode.find(w);
  if (it == antipode.end()) throw HopfTableError("antipode table misses " + format_word(w));
  return it->second;
}

TensorElement HopfStructure::apply_coproduct(const Element& u) const {
  TensorElement r(field());
  for (const auto& [w, c] : u.terms()) r.add_scaled(coproduct_at(w), c);
  return r;
}

Coeff HopfStructure::apply_counit(const Element& u) const {
  const PrimeField f = field();
  Coeff r = 0;
  for (const auto& [w, c] : u.terms()) r = f.add(r, f.mul(c, counit_at(w)));
  return r;
}

Element HopfStructure::apply_antipode(const Element& u) const {
  Element r(field());
  for (const auto& [w, c] : u.terms()) r.add_scaled(antipode_at(w), c);
  return r;
}

HopfStructure trivial_structure(std::uint32_t q, Algebra algebra) {
  HopfStructure h;
  h.q = q;
  h.weight_bound = 0;
  h.algebra = algebra;
  const PrimeField f = h.field();
  h.coproduct.emplace(Word{}, TensorElement::one(f));
  h.counit.emplace(Word{}, 1);
  h.antipode.emplace(Word{}, Element::one(f));
  return h;
}

TensorElement transport_coproduct(const HopfStructure& src, const Word& w, ShuffleContext& ctx) {
  return Transporter(src, ctx).coproduct(w);
}

Coeff transport_counit(const HopfStructure& src, const Word& w, ShuffleContext& ctx) {
  return Transporter(src, ctx).counit(w);
}

Element transport_antipode(const HopfStructure& src, const Word& w, ShuffleContext& ctx) {
  return Transporter(src, ctx).antipode(w);
}

HopfStructure transport(const HopfStructure& src, ShuffleContext& ctx) {
  Transporter t(src, ctx);
  HopfStructure e;
  e.q = src.q;
  e.weight_bound = src.weight_bound;
  e.algebra = Algebra::E;
  for (const auto& w : e_words_up_to(src.weight_bound)) {
    e.coproduct.emplace(w, t.coproduct(w));
    e.counit.emplace(w, t.counit(w));
    e.antipode.emplace(w, t.antipode(w));
  }
  return e;
}

TensorElement conjugated_coproduct(const HopfStructure& src, const Element& u, ShuffleContext& ctx) {
  const PrimeField f = src.field();
  TensorElement r(f);
  const TensorElement pre = phi_inv(u, ctx);
  for (const auto& [k, c] : pre.terms()) {
    const TensorElement& da = src.coproduct_at(k.first);
    const TensorElement& db = src.coproduct_at(k.second);
    for (const auto& [ka, ca] : da.terms()) {
      for (const auto& [kb, cb] : db.terms()) {
        const Element left = phi(TensorElement(f, ka.first, kb.first), ctx);
        const Element right = phi(TensorElement(f, ka.second, kb.second), ctx);
        r.add_scaled(TensorElement::outer(left, right), f.mul(c, f.mul(ca, cb)));
      }
    }
  }
  return r;
}

Coeff conjugated_counit(const HopfStructure& src, const Element& u, ShuffleContext& ctx) {
  const PrimeField f = src.field();
  Coeff r = 0;
  const TensorElement pre = phi_inv(u, ctx);
  for (const auto& [k, c] : pre.terms()) {
    r = f.add(r, f.mul(c, f.mul(src.counit_at(k.first), src.counit_at(k.second))));
  }
  return r;
}

Element conjugated_antipode(const HopfStructure& src, const Element& u, ShuffleContext& ctx) {
  const PrimeField f = src.field();
  Element r(f);
  const TensorElement pre = phi_inv(u, ctx);
  for (const auto& [k, c] : pre.terms()) {
    const Element sa = src.antipode_at(k.first);
    const Element sb = src.antipode_at(k.second);
    r.add_scaled(phi(TensorElement::outer(sa, sb), ctx), c);
  }
  return r;
}

std::vector<AxiomReport> check_axioms(const HopfStructure& h, ShuffleContext& ctx, int cap) {
  if (cap > h.weight_bound) {
    throw std::invalid_argument("check_axioms: cap " + std::to_string(cap) + " exceeds the weight bound " +
                                std::to_string(h.weight_bound));
  }
  if (ctx.q() != h.q) throw FieldMismatch("check_axioms: context q differs from the structure's q");
  const PrimeField f = h.field();
  AxiomReport coassoc = named_report("coassociativity"), counit = named_report("counit"),
              antipode = named_report("antipode"), hom = named_report("coproduct-is-algebra-hom");

  const auto words = h.algebra == Algebra::R ? r_words_up_to(cap) : e_words_up_to(cap);
  for (const auto& w : words) {
    const std::string in = format_word(w);
    const TensorElement& d = h.coproduct_at(w);

    Tensor3 left(f), right(f);
    for (const auto& [k, c] : d.terms()) {
      for (const auto& [kk, cc] : h.coproduct_at(k.first).terms()) {
        left.add(kk.first, kk.second, k.second, f.mul(c, cc));
      }
      for (const auto& [kk, cc] : h.coproduct_at(k.second).terms()) {
        right.add(k.first, kk.first, kk.second, f.mul(c, cc));
      }
    }
    ++coassoc.checked;
    if (!(left == right)) note_failure(coassoc, in, left.format(), right.format());

    Element el(f), er(f), sl(f), sr(f);
    for (const auto& [k, c] : d.terms()) {
      el.add_term(k.second, f.mul(c, h.counit_at(k.first)));
      er.add_term(k.first, f.mul(c, h.counit_at(k.second)));
      sl.add_scaled(shuffle_E(h.antipode_at(k.first), Element(f, k.second), ctx), c);
      sr.add_scaled(shuffle_E(Element(f, k.first), h.antipode_at(k.second), ctx), c);
    }
    const Element id(f, w);
    counit.checked += 2;
    if (!(el == id)) note_failure(counit, in + " (left)", fmt(el), fmt(id));
    if (!(er == id)) note_failure(counit, in + " (right)", fmt(er), fmt(id));

    const Element unit_eps(f, Word{}, h.counit_at(w));
    antipode.checked += 2;
    if (!(sl == unit_eps)) note_failure(antipode, in + " (left)", fmt(sl), fmt(unit_eps));
    if (!(sr == unit_eps)) note_failure(antipode, in + " (right)", fmt(sr), fmt(unit_eps));
  }

  ++hom.checked;
  if (!(h.coproduct_at(Word{}) == TensorElement::one(f)) || h.counit_at(Word{}) != 1) {
    note_failure(hom, std::string("1"), fmt(h.coproduct_at(Word{})), fmt(TensorElement::one(f)));
  }
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.weight() + v.weight() > cap) continue;
      const std::string in = format_word(u) + " * " + format_word(v);
      const Element uv = ctx.mul_word(u, v);
      const TensorElement lhs = h.apply_coproduct(uv);
      const TensorElement rhs = tensor_mul(h.coproduct_at(u), h.coproduct_at(v), ctx);
      hom.checked += 2;
      if (!(lhs == rhs)) note_failure(hom, in, fmt(lhs), fmt(rhs));
      const Coeff el = h.apply_counit(uv), er = f.mul(h.counit_at(u), h.counit_at(v));
      if (el != er) note_failure(hom, in + " (counit)", std::to_string(el), std::to_string(er));
    }
  }
  return {coassoc, counit, antipode, hom};
}

std::vector<AxiomReport> check_transport_compatibility(const HopfStructure& src, const HopfStructure& dst,
                                                       int cap) {
  if (src.algebra != Algebra::R || dst.algebra != Algebra::E) {
    throw std::invalid_argument("compatibility check needs an R-structure and an E-structure");
  }
  if (src.q != dst.q) throw FieldMismatch("compatibility check: structures over different q");
  if (cap > src.weight_bound || cap > dst.weight_bound) {
    throw std::invalid_argument("compatibility check: cap " + std::to_string(cap) + " exceeds a weight bound");
  }
  const PrimeField f = src.field();
  const auto ehat_fn = [](const Element& u) { return ehat(u); };
  AxiomReport via_ehat = named_report("ehat-is-hopf-hom"), via_iota = named_report("iota-is-hopf-hom");
  for (const auto& w : r_words_up_to(cap)) {
    const std::string in = format_word(w);
    const Element x(f, w), e = ehat(x);

    const TensorElement d_lhs = dst.apply_coproduct(e);
    const TensorElement d_rhs = tensor_map(src.coproduct_at(w), ehat_fn, ehat_fn);
    const Element s_lhs = dst.apply_antipode(e), s_rhs = ehat(src.antipode_at(w));
    via_ehat.checked += 3;
    if (!(d_lhs == d_rhs)) note_failure(via_ehat, in + " (coproduct)", fmt(d_lhs), fmt(d_rhs));
    if (dst.apply_counit(e) != src.counit_at(w)) {
      note_failure(via_ehat, in + " (counit)", std::to_string(dst.apply_counit(e)),
                   std::to_string(src.counit_at(w)));
    }
    if (!(s_lhs == s_rhs)) note_failure(via_ehat, in + " (antipode)", fmt(s_lhs), fmt(s_rhs));

    via_iota.checked += 3;
    if (!(dst.coproduct_at(w) == src.coproduct_at(w))) {
      note_failure(via_iota, in + " (coproduct)", fmt(dst.coproduct_at(w)), fmt(src.coproduct_at(w)));
    }
    if (dst.counit_at(w) != src.counit_at(w)) {
      note_failure(via_iota, in + " (counit)", std::to_string(dst.counit_at(w)), std::to_string(src.counit_at(w)));
    }
    if (!(dst.antipode_at(w) == src.antipode_at(w))) {
      note_failure(via_iota, in + " (antipode)", fmt(dst.antipode_at(w)), fmt(src.antipode_at(w)));
    }
  }
  return {via_ehat, via_iota};
}

bool all_pass(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

std::string Corruption::describe() const {
  switch (kind) {
    case Kind::Coproduct:
      return "coproduct(" + format_word(word) + ") += " + format_word(word) + " (x) 1";
    case Kind::Counit:
      return "counit(" + format_word(word) + ") += 1";
    case Kind::Antipode:
      return "antipode(" + format_word(word) + ") += " + format_word(word);
  }
  return {};
}

std::vector<Corruption> standard_corruptions(const HopfStructure& h, std::size_t count) {
  std::vector<Word> words;
  for (const auto& w : h.domain()) {
    if (!w.empty()) words.push_back(w);
  }
  if (words.empty()) throw std::invalid_argument("standard_corruptions: no word of positive weight");
  if (count > 3 * words.size()) throw std::invalid_argument("standard_corruptions: too many corruptions requested");
  static constexpr Corruption::Kind kinds[] = {Corruption::Kind::Counit, Corruption::Kind::Coproduct,
                                               Corruption::Kind::Antipode};
  std::vector<Corruption> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back({kinds[i % 3], words[i % words.size()]});
  return out;
}

HopfStructure apply_corruption(const HopfStructure& h, const Corruption& c) {
  HopfStructure r = h;
  const PrimeField f = h.field();
  switch (c.kind) {
    case Corruption::Kind::Coproduct:
      r.coproduct.at(c.word).add_term(c.word, Word{}, 1);
      break;
    case Corruption::Kind::Counit:
      r.counit.at(c.word) = f.add(r.counit.at(c.word), 1);
      break;
    case Corruption::Kind::Antipode:
      r.antipode.at(c.word).add_term(c.word, 1);
      break;
  }
  return r;
}

}  // namespace qshuffle
