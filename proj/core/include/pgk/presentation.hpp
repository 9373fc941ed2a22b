#ifndef PGK_PRESENTATION_HPP
#define PGK_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgk/word.hpp"

namespace pgk {

// One defining relation lhs = rhs.  Heads and tails of the two sides are
// distinct atoms; this is what makes the presentation complemented.
struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// A finite partial complemented presentation.  Atom order is file order.
class PresentationSpec {
 public:
  PresentationSpec() = default;
  PresentationSpec(std::vector<std::string> atoms, std::vector<Relation> rels,
                   std::string name = "");

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::string& name() const { return name_; }

  std::size_t atom_count() const { return atoms_.size(); }
  const std::string& atom_name(AtomId a) const { return atoms_[a]; }

  // Throws UnknownAtomError if the name is not declared.
  AtomId atom_id(const std::string& name) const;
  std::optional<AtomId> try_atom_id(const std::string& name) const;

  std::string spell(const Word& w) const;        // "a b a"
  std::string spell(const SignedWord& w) const;  // "a b-"

  // Parses a whitespace-separated token word ("a b-" syntax).
  Word parse_word(const std::string& text) const;
  SignedWord parse_signed_word(const std::string& text) const;

  // Keeps only the relations all of whose letters lie in `subset`.
  // Atom ids are preserved, so words remain meaningful across restrictions.
  PresentationSpec restrict_to(const std::vector<AtomId>& subset) const;

  friend bool operator==(const PresentationSpec&,
                         const PresentationSpec&) = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<Relation> relations_;
  std::string name_;
  std::map<std::string, AtomId> index_;
};

// Parses the presentation file format:
//   atoms: a b c          (exactly once, first content line)
//   rel: a b a = b a b    (zero or more)
//   # comment to end of line
// Rejects duplicate atoms, unknown atoms, empty relation sides, and
// relations whose two sides share a head or a tail atom.
PresentationSpec parse_presentation(const std::string& text,
                                    const std::string& name = "");

// Inverse of parse_presentation up to comments and spacing.
std::string serialize_presentation(const PresentationSpec& spec);

// The graphs Gamma_L, Gamma_R and the partial complements f_L, f_R read off
// the relation list: for lhs = x u, rhs = y v the edge {x,y} enters the left
// graph with f_L(x,y) = u, f_L(y,x) = v, and symmetrically on tails.
class ComplementPair {
 public:
  bool edge_L(AtomId x, AtomId y) const { return f_L_.count(key(x, y)) != 0; }
  bool edge_R(AtomId x, AtomId y) const { return f_R_.count(key(x, y)) != 0; }

  // Defined exactly on ordered pairs whose unordered pair is an edge.
  const Word* fL(AtomId x, AtomId y) const;
  const Word* fR(AtomId x, AtomId y) const;

  std::vector<std::pair<AtomId, AtomId>> edges_L() const;
  std::vector<std::pair<AtomId, AtomId>> edges_R() const;

 private:
  friend ComplementPair derive_complements(const PresentationSpec&);
  static std::pair<AtomId, AtomId> key(AtomId x, AtomId y) { return {x, y}; }
  std::map<std::pair<AtomId, AtomId>, Word> f_L_;
  std::map<std::pair<AtomId, AtomId>, Word> f_R_;
};

// Throws ConflictingComplementError if two relations define the same ordered
// complement entry.
ComplementPair derive_complements(const PresentationSpec& spec);

// Per-generator atomhood report: x is an atom iff every
// left-graph neighbour y has f_L(x,y) nonempty).
struct AtomReport {
  std::vector<bool> is_atom;
  std::vector<AtomId> non_atoms;
  bool all_atoms() const { return non_atoms.empty(); }
};

AtomReport validate_atoms(const PresentationSpec& spec,
                          const ComplementPair& cp);

// True iff the left and right graphs coincide as edge sets.  A mismatch
// means the input cannot be of FC type and construction is refused.
bool check_graph_coincidence(const ComplementPair& cp);

}  // namespace pgk

#endif  // PGK_PRESENTATION_HPP
