#include "qshuffle/serialize.hpp"

#include <cctype>
#include <limits>

namespace qshuffle {

ParseError::ParseError(std::size_t position, const std::string& expected, const std::string& found)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " +
                         expected + ", found " + found),
      position_(position),
      expected_(expected) {}

namespace {

void append_ints(std::string& s, const Index& a) {
  for (int i = 0; i < a.depth(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("'" + std::string(tok) + "'");
  }
  std::uint64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("integer");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) fail("integer of reasonable size");
      ++pos_;
    }
    return v;
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    std::string found = pos_ >= text_.size() ? "end of input"
                                             : "'" + std::string(text_.substr(pos_, 8)) + "'";
    throw ParseError(pos_, expected, found);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Index parse_ints(Cursor& cur) {
  std::vector<int> v;
  do {
    const std::size_t at = cur.pos();
    const auto n = cur.number();
    if (n < 1) throw ParseError(at, "index entry >= 1", std::to_string(n));
    v.push_back(static_cast<int>(n));
  } while (cur.accept(","));
  return Index(std::move(v));
}

Word parse_word_at(Cursor& cur) {
  if (cur.accept("1")) return Word{};
  Word w;
  bool any = false;
  if (cur.accept("x[")) {
    w.x = parse_ints(cur);
    cur.expect("]");
    any = true;
  }
  if (cur.accept("y[")) {
    w.y = parse_ints(cur);
    cur.expect("]");
    any = true;
  }
  if (!any) cur.fail("word ('1', 'x[' or 'y[')");
  return w;
}

// Optional "coeff *" prefix. A bare integer that is not followed by '*' is
// only legal as the word "1".
Coeff parse_coeff_prefix(Cursor& cur, const PrimeField& field) {
  cur.skip_ws();
  const std::size_t start = cur.pos();
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) return 1;
  Cursor probe = cur;
  const auto n = probe.number();
  if (probe.accept("*")) {
    cur = probe;
    return static_cast<Coeff>(n % field.p());
  }
  (void)start;
  return 1;
}

template <typename TermFn>
void parse_sum(Cursor& cur, const PrimeField& field, TermFn&& on_term) {
  Coeff sign = 1;
  if (cur.accept("-")) sign = field.neg(1);
  else cur.accept("+");
  while (true) {
    const Coeff c = parse_coeff_prefix(cur, field);
    on_term(field.mul(sign, c));
    if (cur.accept("+")) sign = 1;
    else if (cur.accept("-")) sign = field.neg(1);
    else break;
  }
  if (!cur.at_end()) cur.fail("'+', '-' or end of input");
}

}  // namespace

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  if (!w.x.empty()) {
    s += "x[";
    append_ints(s, w.x);
    s += ']';
  }
  if (!w.y.empty()) {
    s += "y[";
    append_ints(s, w.y);
    s += ']';
  }
  return s;
}

std::string format_element(const Element& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += format_word(w);
  }
  return s;
}

std::string format_tensor(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : t.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += format_word(k.first) + " (x) " + format_word(k.second);
  }
  return s;
}

Word parse_word(std::string_view text) {
  Cursor cur(text);
  Word w = parse_word_at(cur);
  if (!cur.at_end()) cur.fail("end of input");
  return w;
}

Element parse_element(std::string_view text, PrimeField field) {
  Cursor cur(text);
  Element e(field);
  {
    Cursor probe = cur;
    if (probe.accept("0") && probe.at_end()) return e;
  }
  parse_sum(cur, field, [&](Coeff c) { e.add_term(parse_word_at(cur), c); });
  return e;
}

TensorElement parse_tensor(std::string_view text, PrimeField field) {
  Cursor cur(text);
  TensorElement t(field);
  {
    Cursor probe = cur;
    if (probe.accept("0") && probe.at_end()) return t;
  }
  parse_sum(cur, field, [&](Coeff c) {
    Word l = parse_word_at(cur);
    cur.expect("(x)");
    Word r = parse_word_at(cur);
    t.add_term(l, r, c);
  });
  return t;
}

nlohmann::json word_to_json(const Word& w) {
  return {{"x", w.x.entries()}, {"y", w.y.entries()}};
}

Word word_from_json(const nlohmann::json& j) {
  auto get = [&](const char* key) {
    return j.contains(key) ? Index(j.at(key).get<std::vector<int>>()) : Index{};
  };
  return Word(get("x"), get("y"));
}

nlohmann::json element_to_json(const Element& e) {
  auto arr = nlohmann::json::array();
  for (const auto& [w, c] : e.terms()) {
    auto term = word_to_json(w);
    term["coeff"] = c;
    arr.push_back(std::move(term));
  }
  return arr;
}

Element element_from_json(const nlohmann::json& j, PrimeField field) {
  Element e(field);
  for (const auto& term : j) {
    e.add_term(word_from_json(term), field.reduce(term.value("coeff", std::int64_t{1})));
  }
  return e;
}

nlohmann::json tensor_to_json(const TensorElement& t) {
  auto arr = nlohmann::json::array();
  for (const auto& [k, c] : t.terms()) {
    arr.push_back({{"coeff", c}, {"left", word_to_json(k.first)}, {"right", word_to_json(k.second)}});
  }
  return arr;
}

TensorElement tensor_from_json(const nlohmann::json& j, PrimeField field) {
  TensorElement t(field);
  for (const auto& term : j) {
    t.add_term(word_from_json(term.at("left")), word_from_json(term.at("right")),
               field.reduce(term.value("coeff", std::int64_t{1})));
  }
  return t;
}

}  // namespace qshuffle
