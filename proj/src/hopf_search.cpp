#include <algorithm>
#include <bit>
#include <functional>

#include "qshuffle/hopf.hpp"

namespace qshuffle {

namespace {

using Monomial = std::vector<int>;  // nondecreasing generator ids
using Row = std::vector<Coeff>;

// Incremental row echelon form over F_p.
class Echelon {
 public:
  Echelon(PrimeField f, std::size_t n) : f_(f), n_(n) {}

  bool insert(Row r) {
    for (const auto& [pivot, row] : rows_) {
      if (r[pivot] == 0) continue;
      const Coeff c = r[pivot];
      for (std::size_t k = 0; k < n_; ++k) r[k] = f_.sub(r[k], f_.mul(c, row[k]));
    }
    const auto it = std::find_if(r.begin(), r.end(), [](Coeff c) { return c != 0; });
    if (it == r.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - r.begin());
    const Coeff inv = f_.inv(r[pivot]);
    for (auto& c : r) c = f_.mul(c, inv);
    rows_.emplace_back(pivot, std::move(r));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  PrimeField f_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, Row>> rows_;
};

// Inverse of a square matrix over F_p by Gauss-Jordan elimination.
std::vector<Row> invert(std::vector<Row> m, PrimeField f) {
  const std::size_t n = m.size();
  std::vector<Row> inv(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("hopf search: monomial basis is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Coeff s = f.inv(m[col][col]);
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] = f.mul(m[col][k], s);
      inv[col][k] = f.mul(inv[col][k], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Coeff c = m[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] = f.sub(m[r][k], f.mul(c, m[col][k]));
        inv[r][k] = f.sub(inv[r][k], f.mul(c, inv[col][k]));
      }
    }
  }
  return inv;
}

struct Slot {
  int generator;
  Monomial left;
  Monomial right;
};

class Search {
 public:
  Search(std::uint32_t q, int bound) : q_(q), bound_(bound), ctx_(q), f_(ctx_.field()) {
    monomials_.resize(bound + 1);
    to_monomials_.resize(bound + 1);
    words_.resize(bound + 1);
    monomials_[0] = {Monomial{}};
    words_[0] = {Word{}};
    for (int n = 1; n <= bound; ++n) build_weight(n);
    for (int g = 0; g < static_cast<int>(generators_.size()); ++g) {
      const int n = generators_[g].weight();
      for (int k = 1; k < n; ++k) {
        for (const auto& l : monomials_[k]) {
          for (const auto& r : monomials_[n - k]) slots_.push_back({g, l, r});
        }
      }
    }
  }

  HopfSearchResult run() {
    if (slots_.size() > 24) throw std::invalid_argument("hopf search: too many cross-term slots");
    HopfSearchResult out;
    out.generators = generators_;
    int best_terms = -1;
    const std::uint64_t total = std::uint64_t{1} << slots_.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      HopfStructure h = candidate(mask);
      ++out.candidates;
      if (!all_pass(check_axioms(h, ctx_, bound_))) continue;
      ++out.passing;
      const int terms = std::popcount(mask);
      if (terms > best_terms) {
        best_terms = terms;
        out.structure = std::move(h);
      }
    }
    if (best_terms < 0) throw std::logic_error("hopf search: no candidate passed the checker");
    return out;
  }

 private:
  Row coords(const Element& e, int n) const {
    Row r(words_[n].size(), 0);
    for (const auto& [w, c] : e.terms()) {
      const auto it = std::find(words_[n].begin(), words_[n].end(), w);
      r[static_cast<std::size_t>(it - words_[n].begin())] = c;
    }
    return r;
  }

  Element product(const Monomial& m) {
    Element r = Element::one(f_);
    for (int g : m) r = shuffle_E(r, Element(f_, generators_[g]), ctx_);
    return r;
  }

  // Nondecreasing generator multisets of total weight n with at least two factors.
  void products_of_weight(int n, int min_gen, int factors, Monomial& cur, std::vector<Monomial>& out) const {
    if (n == 0) {
      if (factors >= 2) out.push_back(cur);
      return;
    }
    for (int g = min_gen; g < static_cast<int>(generators_.size()); ++g) {
      const int w = generators_[g].weight();
      if (w > n) continue;
      cur.push_back(g);
      products_of_weight(n - w, g, factors + 1, cur, out);
      cur.pop_back();
    }
  }

  void build_weight(int n) {
    for (const auto& a : compositions(n)) words_[n].push_back(Word::xw(a));
    std::sort(words_[n].begin(), words_[n].end(), CanonicalLess{});
    Echelon ech(f_, words_[n].size());
    std::vector<Monomial> monos;
    Monomial cur;
    products_of_weight(n, 0, 0, cur, monos);
    std::vector<Row> rows;
    for (const auto& m : monos) {
      Row r = coords(product(m), n);
      if (!ech.insert(r)) {
        throw std::logic_error("hopf search: products of generators are dependent at weight " + std::to_string(n));
      }
      rows.push_back(std::move(r));
    }
    for (const auto& w : words_[n]) {
      if (ech.rank() == words_[n].size()) break;
      Row r = coords(Element(f_, w), n);
      if (!ech.insert(r)) continue;
      monos.push_back(Monomial{static_cast<int>(generators_.size())});
      generators_.push_back(w);
      rows.push_back(std::move(r));
    }
    monomials_[n] = monos;
    to_monomials_[n] = invert(rows, f_);
  }

  HopfStructure candidate(std::uint64_t mask) {
    std::vector<TensorElement> dg;
    std::vector<Element> sg;
    for (const auto& g : generators_) {
      TensorElement d(f_, g, Word{});
      d.add_term(Word{}, g, 1);
      dg.push_back(std::move(d));
      sg.push_back(-Element(f_, g));
    }
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      if (!((mask >> s) & 1)) continue;
      dg[slots_[s].generator] += TensorElement::outer(product(slots_[s].left), product(slots_[s].right));
    }
    // S(g) = -g - sum S(m1) * m2 needs S on lower-weight monomials only.
    const auto s_mono = [&](const Monomial& m) {
      Element r = Element::one(f_);
      for (int g : m) r = shuffle_E(r, sg[g], ctx_);
      return r;
    };
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      if (!((mask >> s) & 1)) continue;
      sg[slots_[s].generator] -= shuffle_E(s_mono(slots_[s].left), product(slots_[s].right), ctx_);
    }

    HopfStructure h;
    h.q = q_;
    h.weight_bound = bound_;
    h.algebra = Algebra::R;
    for (int n = 0; n <= bound_; ++n) {
      std::vector<TensorElement> dm;
      std::vector<Element> sm;
      for (const auto& m : monomials_[n]) {
        TensorElement d = TensorElement::one(f_);
        for (int g : m) d = tensor_mul(d, dg[g], ctx_);
        dm.push_back(std::move(d));
        sm.push_back(s_mono(m));
      }
      for (std::size_t k = 0; k < words_[n].size(); ++k) {
        const Word& w = words_[n][k];
        TensorElement d(f_);
        Element s(f_);
        for (std::size_t i = 0; i < dm.size(); ++i) {
          const Coeff c = n == 0 ? 1 : to_monomials_[n][k][i];
          d.add_scaled(dm[i], c);
          s.add_scaled(sm[i], c);
        }
        h.coproduct.emplace(w, std::move(d));
        h.counit.emplace(w, n == 0 ? 1 : 0);
        h.antipode.emplace(w, std::move(s));
      }
    }
    return h;
  }

  std::uint32_t q_;
  int bound_;
  ShuffleContext ctx_;
  PrimeField f_;
  std::vector<Word> generators_;
  std::vector<std::vector<Monomial>> monomials_;
  std::vector<std::vector<Row>> to_monomials_;
  std::vector<std::vector<Word>> words_;
  std::vector<Slot> slots_;
};

}  // namespace

HopfSearchResult search_hopf_structure(std::uint32_t q, int weight_bound) {
  if (weight_bound < 0) throw std::invalid_argument("hopf search: negative weight bound");
  return Search(q, weight_bound).run();
}

}  // namespace qshuffle
