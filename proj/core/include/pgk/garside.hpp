#ifndef PGK_GARSIDE_HPP
#define PGK_GARSIDE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "pgk/oracle.hpp"
#include "pgk/presentation.hpp"
#include "pgk/word.hpp"

namespace pgk {

using SimpleId = int;

// Left/right divisor and factor sets of one element, as canonical words.
struct DivisorSets {
  std::set<Word> left;
  std::set<Word> right;
  std::set<Word> factors;
};

// Computed by exhaustive rewriting closure: x left-divides g iff some word
// equal to g has a word of x as a prefix.  Exact in an atomic monoid.
DivisorSets divisors(const Word& g, const PresentationSpec& spec,
                     const ClosureLimits& limits = {});

// The simple-element lattice of one Garside leaf: the minimal Garside
// element delta, its divisors, and the tables every normal-form and lattice
// operation reduces to.  Immutable after construction.
class GarsideStructure {
 public:
  const PresentationSpec& spec() const { return spec_; }
  const std::vector<AtomId>& atoms() const { return atoms_; }

  const Word& delta_word() const { return simples_[delta_]; }
  SimpleId delta() const { return delta_; }
  SimpleId identity() const { return 0; }

  std::size_t simple_count() const { return simples_.size(); }
  const Word& simple_word(SimpleId s) const { return simples_[s]; }
  SimpleId simple_id(const Word& canonical_word) const;
  SimpleId atom_simple(AtomId a) const;
  std::size_t atom_length(SimpleId s) const { return atom_length_[s]; }

  bool left_divides(SimpleId s, SimpleId t) const { return left_div_[s][t]; }
  bool right_divides(SimpleId s, SimpleId t) const { return right_div_[s][t]; }
  // s*t when simple, -1 otherwise.
  SimpleId product(SimpleId s, SimpleId t) const { return product_[s][t]; }

  SimpleId meet_L(SimpleId s, SimpleId t) const;
  SimpleId join_L(SimpleId s, SimpleId t) const;
  SimpleId meet_R(SimpleId s, SimpleId t) const;
  SimpleId join_R(SimpleId s, SimpleId t) const;

  SimpleId lquot(SimpleId s, SimpleId t) const;  // u with s u = t
  SimpleId rquot(SimpleId s, SimpleId t) const;  // u with u s = t
  SimpleId rcomp(SimpleId s) const { return lquot(s, delta_); }
  SimpleId lcomp(SimpleId s) const { return rquot(s, delta_); }

  // Simples whose canonical word stays inside the given atom subset.
  std::vector<SimpleId> simples_in(const std::vector<AtomId>& subset) const;

 private:
  friend GarsideStructure find_minimal_garside(const PresentationSpec&,
                                               const std::vector<AtomId>&,
                                               std::size_t,
                                               const ClosureLimits&);
  friend GarsideStructure parse_garside(const std::string&,
                                        const PresentationSpec&,
                                        const ClosureLimits&);
  void build_tables(const ClosureLimits& limits);

  PresentationSpec spec_;        // ambient names, relations restricted to leaf
  std::vector<AtomId> atoms_;    // sorted leaf alphabet
  std::vector<Word> simples_;    // canonical words, length-lex sorted, [0] = 1
  std::map<Word, SimpleId> index_;
  SimpleId delta_ = 0;
  std::vector<std::vector<bool>> left_div_;
  std::vector<std::vector<bool>> right_div_;
  std::vector<std::vector<SimpleId>> product_;
  std::vector<std::size_t> atom_length_;
};

// Enumerates candidate words over X in length-lexicographic order and
// returns the structure of the first balanced generating element found.
// Throws SearchExhaustedError past max_word_length (0 picks the default
// bound 2*|X|^2).
GarsideStructure find_minimal_garside(const PresentationSpec& spec,
                                      const std::vector<AtomId>& leaf_atoms,
                                      std::size_t max_word_length = 0,
                                      const ClosureLimits& limits = {});

// Cache text block: delta, the simples in order, both divisibility tables.
std::string serialize_garside(const GarsideStructure& gs);
GarsideStructure parse_garside(const std::string& text,
                               const PresentationSpec& ambient_spec,
                               const ClosureLimits& limits = {});

// ---- element operations within one leaf ----

std::vector<SimpleId> to_simples(const GarsideStructure& gs, const Word& w);
Word from_simples(const GarsideStructure& gs,
                  const std::vector<SimpleId>& factors);

// Left greedy normal form: each factor is the greatest simple left divisor
// of what remains.  Empty sequence for the identity.
std::vector<SimpleId> left_greedy_nf(const GarsideStructure& gs,
                                     const Word& w);
std::vector<SimpleId> right_greedy_nf(const GarsideStructure& gs,
                                      const Word& w);

// Canonical representative: concatenation of the left greedy factors.
Word canonical_word(const GarsideStructure& gs, const Word& w);

bool left_divides(const GarsideStructure& gs, const Word& a, const Word& b);
bool right_divides(const GarsideStructure& gs, const Word& a, const Word& b);
// a^{-1} b (resp. b a^{-1}); the divisibility precondition is mandatory.
Word left_quotient(const GarsideStructure& gs, const Word& a, const Word& b);
Word right_quotient(const GarsideStructure& gs, const Word& a, const Word& b);

Word gcd_L(const GarsideStructure& gs, const Word& a, const Word& b);
Word gcd_R(const GarsideStructure& gs, const Word& a, const Word& b);
Word lcm_L(const GarsideStructure& gs, const Word& a, const Word& b);
Word lcm_R(const GarsideStructure& gs, const Word& a, const Word& b);

// Right normal form a b^{-1} with gcd_R(a, b) = 1.
struct LeafGroupElement {
  Word num;
  Word den;

  bool is_identity() const { return num.empty() && den.empty(); }
  friend bool operator==(const LeafGroupElement&,
                         const LeafGroupElement&) = default;
};

// Computed by left-reversing over the simple alphabet, then dividing out
// the right gcd.  Terminates on any signed input since simples are closed
// under complement.
LeafGroupElement group_nf(const GarsideStructure& gs, const SignedWord& w);

std::size_t simple_length(const GarsideStructure& gs,
                          const LeafGroupElement& g);

// The canonical signed simple word a_p ... a_1 b_1^- ... b_q^- built from
// the right greedy forms of numerator and denominator.
SimpleWord leaf_canonical_sword(const GarsideStructure& gs,
                                const LeafGroupElement& g);

SignedWord to_signed(const LeafGroupElement& g);

}  // namespace pgk

#endif  // PGK_GARSIDE_HPP
