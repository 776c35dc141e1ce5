#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qshuffle/structure_maps.hpp"

namespace qshuffle {

class HopfTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Algebra { R, E };

/// Coproduct, counit and antipode tables on all words of weight <= weight_bound,
/// extended linearly. An R-structure is keyed by y-free words; an E-structure
/// by all normal-form words.
struct HopfStructure {
  std::uint32_t q = 2;
  int weight_bound = 0;
  Algebra algebra = Algebra::R;
  std::map<Word, TensorElement, CanonicalLess> coproduct;
  std::map<Word, Coeff, CanonicalLess> counit;
  std::map<Word, Element, CanonicalLess> antipode;

  PrimeField field() const { return PrimeField(prime_power(q).p); }
  /// The words the tables must cover.
  std::vector<Word> domain() const;
  /// Totality and weight grading; throws HopfTableError.
  void validate() const;

  TensorElement apply_coproduct(const Element& u) const;
  Coeff apply_counit(const Element& u) const;
  Element apply_antipode(const Element& u) const;

  const TensorElement& coproduct_at(const Word& w) const;
  Coeff counit_at(const Word& w) const;
  const Element& antipode_at(const Word& w) const;
};

/// Structure on the weight-0 truncation: Delta(1) = 1 (x) 1, eps(1) = 1, S(1) = 1.
HopfStructure trivial_structure(std::uint32_t q, Algebra algebra = Algebra::R);

/// Transport of an R-structure to E by the depth recursions on y-words and
/// multiplicativity on mixed words x_a y_b.
HopfStructure transport(const HopfStructure& src, ShuffleContext& ctx);
TensorElement transport_coproduct(const HopfStructure& src, const Word& w, ShuffleContext& ctx);
Coeff transport_counit(const HopfStructure& src, const Word& w, ShuffleContext& ctx);
Element transport_antipode(const HopfStructure& src, const Word& w, ShuffleContext& ctx);

/// (phi (x) phi) . Delta~ . phi^{-1}, eps~ . phi^{-1} and phi . S~ . phi^{-1},
/// with Delta~, eps~, S~ the componentwise structure on R (x) R.
TensorElement conjugated_coproduct(const HopfStructure& src, const Element& u, ShuffleContext& ctx);
Coeff conjugated_counit(const HopfStructure& src, const Element& u, ShuffleContext& ctx);
Element conjugated_antipode(const HopfStructure& src, const Element& u, ShuffleContext& ctx);

struct AxiomWitness {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  std::string axiom;  // coassociativity, counit, antipode, coproduct-is-algebra-hom
  bool pass = true;
  std::uint64_t checked = 0;
  std::vector<AxiomWitness> witnesses;
};

/// Pointwise Hopf axioms on every domain word of weight <= cap, plus
/// multiplicativity of Delta and eps on word pairs of total weight <= cap.
std::vector<AxiomReport> check_axioms(const HopfStructure& h, ShuffleContext& ctx, int cap);
/// Checks that e^ and the inclusion R -> E carry src (on R) to dst (on E):
/// Delta^E e^ = (e^ (x) e^) Delta, eps^E e^ = eps, S^E e^ = e^ S, and dst
/// agrees with src on y-free words, for all R-words of weight <= cap.
std::vector<AxiomReport> check_transport_compatibility(const HopfStructure& src, const HopfStructure& dst,
                                                       int cap);
bool all_pass(const std::vector<AxiomReport>& reports);

nlohmann::json hopf_to_json(const HopfStructure& h);
HopfStructure hopf_from_json(const nlohmann::json& j);
HopfStructure load_hopf_file(const std::string& path);
nlohmann::json axiom_reports_to_json(const std::vector<AxiomReport>& reports);

/// Deterministic brute-force search for a weight-graded Hopf structure on the
/// truncation of R at weight <= weight_bound: choose algebra generators
/// greedily in canonical order, try every cross-term pattern with 0/1
/// coefficients for their coproducts, extend multiplicatively and keep the
/// checker-passing candidate with the most cross terms (first in enumeration
/// order on ties).
struct HopfSearchResult {
  HopfStructure structure;
  std::vector<Word> generators;
  std::uint64_t candidates = 0;
  std::uint64_t passing = 0;
};
HopfSearchResult search_hopf_structure(std::uint32_t q, int weight_bound);

/// A single-entry corruption of a structure, used as a negative control.
struct Corruption {
  enum class Kind { Coproduct, Counit, Antipode };
  Kind kind;
  Word word;
  std::string describe() const;
};
std::vector<Corruption> standard_corruptions(const HopfStructure& h, std::size_t count);
HopfStructure apply_corruption(const HopfStructure& h, const Corruption& c);

}  // namespace qshuffle
