#ifndef PGK_AMALGAM_HPP
#define PGK_AMALGAM_HPP

#include <string>
#include <utility>
#include <vector>

#include "pgk/fc_tree.hpp"
#include "pgk/word.hpp"

namespace pgk {

// ---- monoid elements relative to an FC-tree node ----

struct AmalgamFactor {
  int side = 1;  // 1 = left child, 2 = right child
  Word word;     // canonical in that child

  friend bool operator==(const AmalgamFactor&, const AmalgamFactor&) = default;
};

// The unique decomposition g = g_1 ... g_m h: stripped alternating factors
// plus a tail in N.  The factor count m is the amalgam length.
struct AmalgamParts {
  std::vector<AmalgamFactor> factors;
  Word tail;  // canonical in the N node

  friend bool operator==(const AmalgamParts&, const AmalgamParts&) = default;
};

// Canonical representative word of a monoid element relative to `node`.
Word monoid_canonical(const FcTree& tree, const FcNode& node, const Word& w);

// Amalgam normal form at an inner node (left-to-right stripping sweep).
AmalgamParts amalgam_nf(const FcTree& tree, const FcNode& node, const Word& w);

// Multiplication of normal forms; the result is reduced.
AmalgamParts amalgam_mul(const FcTree& tree, const FcNode& node,
                         const AmalgamParts& u, const AmalgamParts& v);

std::size_t ell_N(const FcTree& tree, const FcNode& node, const Word& w);

// (g', h): g = g' h with h the greatest right divisor of g inside the
// parabolic P; g' represents the minimal class of g modulo P.
std::pair<Word, Word> monoid_strip_right(const FcTree& tree,
                                         const FcNode& node, const Word& g,
                                         const std::vector<AtomId>& p_atoms);

// "(1:w1 | 2:w2 ; h)" with the tail serialized recursively.
std::string serialize_amalgam(const FcTree& tree, const FcNode& node,
                              const AmalgamParts& parts);
std::string serialize_monoid_element(const FcTree& tree, const FcNode& node,
                                     const Word& w);

// ---- group elements relative to an FC-tree node ----

struct GroupFactor {
  int side = 1;
  SimpleWord sword;  // canonical in that child

  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

// Group amalgam normal form (c_1, ..., c_n, h): factors from the coset
// transversals, tail in G(N).
struct GroupParts {
  std::vector<GroupFactor> factors;
  SimpleWord tail;  // canonical in the N node

  friend bool operator==(const GroupParts&, const GroupParts&) = default;
};

// The canonical signed simple word of the element of G(node) spelled by w.
// Equality of elements is equality of these words.
SimpleWord group_canonical(const FcTree& tree, const FcNode& node,
                           const SignedWord& w);

GroupParts group_decompose(const FcTree& tree, const FcNode& node,
                           const SignedWord& w);

std::size_t group_amalgam_length(const FcTree& tree, const FcNode& node,
                                 const SignedWord& w);

// The canonical representative of the coset (w) G(P): recursion over the
// tree with leaf case m_N.  Returns its canonical word.
SimpleWord m_T_P(const FcTree& tree, const FcNode& node, const SignedWord& w,
                 const std::vector<AtomId>& p_atoms);

// Word-level coset map over the simple alphabet: builds the pre-expression
// of w and exhaustively applies the elementary reductions, returning the
// concatenated reduced word.
SimpleWord m_star_T_P(const FcTree& tree, const FcNode& node,
                      const SimpleWord& w, const std::vector<AtomId>& p_atoms);

// Convenience wrappers acting at the root.
SimpleWord group_canonical(const FcTree& tree, const SignedWord& w);
SimpleWord m_star_T_P(const FcTree& tree, const SimpleWord& w,
                      const std::vector<AtomId>& p_atoms);
SimpleWord atoms_to_sword(const SignedWord& w);

// Rendering of simple words: whitespace-separated simples, atoms joined by
// '.', a trailing '-' marking inverses; "1" for the empty word.
std::string spell_sword(const PresentationSpec& spec, const SimpleWord& w);

}  // namespace pgk

#endif  // PGK_AMALGAM_HPP
