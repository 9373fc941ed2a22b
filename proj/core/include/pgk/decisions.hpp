#ifndef PGK_DECISIONS_HPP
#define PGK_DECISIONS_HPP

#include "pgk/amalgam.hpp"
#include "pgk/fc_tree.hpp"

namespace pgk {

// w1 and w2 represent the same element of G(M).
bool word_problem(const FcTree& tree, const SignedWord& w1,
                  const SignedWord& w2);

// The element of G(M) represented by w lies in the monoid M.
bool monoid_membership(const FcTree& tree, const SignedWord& w);

// The element lies in the parabolic subgroup generated by the subset.
bool coset_membership(const FcTree& tree, const SignedWord& w,
                      const std::vector<AtomId>& p_atoms);

// Evidence probe: the nontrivial element w has no power w^k = 1 for
// 2 <= k <= k_max.  Never a proof of torsion-freeness.
// Throws Error if w represents the identity.
bool torsion_probe(const FcTree& tree, const SignedWord& w, int k_max);

}  // namespace pgk

#endif  // PGK_DECISIONS_HPP
