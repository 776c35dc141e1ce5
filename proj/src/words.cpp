#include "qshuffle/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qshuffle {

namespace {

void check_entries(const std::vector<int>& entries) {
  for (int e : entries) {
    if (e < 1) throw std::invalid_argument("index entries must be positive, got " + std::to_string(e));
  }
}

}  // namespace

Index::Index(std::initializer_list<int> entries) : entries_(entries) { check_entries(entries_); }

Index::Index(std::vector<int> entries) : entries_(std::move(entries)) { check_entries(entries_); }

int Index::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

Index Index::head(int i) const {
  if (empty()) return {};
  if (i < 0 || i > depth()) throw std::out_of_range("Index::head: position out of range");
  return Index(std::vector<int>(entries_.begin(), entries_.begin() + i));
}

Index Index::tail(int i) const {
  if (empty()) return {};
  if (i < 0 || i > depth()) throw std::out_of_range("Index::tail: position out of range");
  return Index(std::vector<int>(entries_.begin() + i, entries_.end()));
}

Index Index::prepend(int k) const {
  std::vector<int> v;
  v.reserve(entries_.size() + 1);
  v.push_back(k);
  v.insert(v.end(), entries_.begin(), entries_.end());
  return Index(std::move(v));
}

Index Index::concat(const Index& other) const {
  std::vector<int> v = entries_;
  v.insert(v.end(), other.entries_.begin(), other.entries_.end());
  Index r;
  r.entries_ = std::move(v);
  return r;
}

std::string Index::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::pair<Index, Index> index_head_tail(const Index& a, int i) {
  if (i < 0) throw std::out_of_range("index_head_tail: negative position");
  return {a.head(i), a.tail(i)};
}

Word word_concat(const Word& w1, const Word& w2) {
  return Word(w1.x.concat(w2.x), w1.y.concat(w2.y));
}

std::strong_ordering canonical_compare(const Word& a, const Word& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.y_degree() <=> b.y_degree(); c != 0) return c;
  if (auto c = a.x.depth() <=> b.x.depth(); c != 0) return c;
  if (auto c = a.x <=> b.x; c != 0) return c;
  return a.y <=> b.y;
}

bool CanonicalLess::operator()(const std::pair<Word, Word>& a,
                               const std::pair<Word, Word>& b) const {
  const int wa = a.first.weight() + a.second.weight();
  const int wb = b.first.weight() + b.second.weight();
  if (wa != wb) return wa < wb;
  if (auto c = canonical_compare(a.first, b.first); c != 0) return c < 0;
  return canonical_compare(a.second, b.second) < 0;
}

std::vector<Index> compositions(int n) {
  if (n < 0) return {};
  if (n == 0) return {Index{}};
  std::vector<Index> out;
  for (int first = 1; first <= n; ++first) {
    for (const auto& rest : compositions(n - first)) out.push_back(rest.prepend(first));
  }
  return out;
}

std::vector<Index> indices_up_to(int w) {
  std::vector<Index> out;
  for (int n = 0; n <= w; ++n) {
    auto c = compositions(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<Word> r_words_up_to(int w) {
  std::vector<Word> out;
  for (auto& a : indices_up_to(w)) out.push_back(Word::xw(std::move(a)));
  return out;
}

std::vector<Word> e_words_of_weight(int w) {
  std::vector<Word> out;
  for (int wx = 0; wx <= w; ++wx) {
    const auto xs = compositions(wx);
    const auto ys = compositions(w - wx);
    for (const auto& a : xs) {
      for (const auto& b : ys) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<Word> e_words_up_to(int w) {
  std::vector<Word> out;
  for (int n = 0; n <= w; ++n) {
    auto ws = e_words_of_weight(n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace qshuffle
