#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qshuffle {

/// A finite sequence of positive integers (a composition). Depth is the
/// length, weight the entry sum.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> entries);
  explicit Index(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int depth() const { return static_cast<int>(entries_.size()); }
  int weight() const;
  int operator[](std::size_t i) const { return entries_[i]; }
  int front() const { return entries_.front(); }

  /// (a_1, ..., a_i); empty for the empty index.
  Index head(int i) const;
  /// (a_{i+1}, ..., a_m); empty for the empty index.
  Index tail(int i) const;

  /// `k` followed by this index.
  Index prepend(int k) const;
  Index concat(const Index& other) const;

  std::string to_string() const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> entries_;
};

/// (a_{(i)}, a^{(i)}): the length-i prefix and the remaining suffix.
std::pair<Index, Index> index_head_tail(const Index& a, int i);

/// Normal form of a monoid element in which x-letters commute with y-letters
/// but not among themselves: all x-letters first, then all y-letters.
struct Word {
  Index x;
  Index y;

  Word() = default;
  Word(Index xs, Index ys) : x(std::move(xs)), y(std::move(ys)) {}

  static Word xw(Index a) { return Word(std::move(a), Index{}); }
  static Word yw(Index b) { return Word(Index{}, std::move(b)); }

  bool empty() const { return x.empty() && y.empty(); }
  bool y_free() const { return y.empty(); }
  int weight() const { return x.weight() + y.weight(); }
  int y_degree() const { return y.depth(); }

  friend bool operator==(const Word&, const Word&) = default;
};

Word word_concat(const Word& w1, const Word& w2);

/// Total order: weight, y-degree, x-depth, then lexicographic on x and on y.
std::strong_ordering canonical_compare(const Word& a, const Word& b);

struct CanonicalLess {
  bool operator()(const Word& a, const Word& b) const { return canonical_compare(a, b) < 0; }
  bool operator()(const Index& a, const Index& b) const {
    return canonical_compare(Word::xw(a), Word::xw(b)) < 0;
  }
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const;
};

/// All compositions of n (n = 0 gives the single empty index), lexicographic.
std::vector<Index> compositions(int n);
/// Indices of weight at most w, in canonical order.
std::vector<Index> indices_up_to(int w);
/// Words with empty y-part and weight at most w, canonical order.
std::vector<Word> r_words_up_to(int w);
/// All normal-form words of weight at most w, canonical order.
std::vector<Word> e_words_up_to(int w);
/// All normal-form words of weight exactly w, canonical order.
std::vector<Word> e_words_of_weight(int w);

}  // namespace qshuffle
