#include "pgk/decisions.hpp"

#include "pgk/errors.hpp"

namespace pgk {

bool word_problem(const FcTree& tree, const SignedWord& w1,
                  const SignedWord& w2) {
  SignedWord diff = concat(SignedWord(w1), inverse_of(w2));
  return m_star_T_P(tree, atoms_to_sword(diff), {}).empty();
}

bool monoid_membership(const FcTree& tree, const SignedWord& w) {
  return is_positive(m_star_T_P(tree, atoms_to_sword(w), {}));
}

bool coset_membership(const FcTree& tree, const SignedWord& w,
                      const std::vector<AtomId>& p_atoms) {
  return m_star_T_P(tree, atoms_to_sword(w), p_atoms).empty();
}

bool torsion_probe(const FcTree& tree, const SignedWord& w, int k_max) {
  if (m_star_T_P(tree, atoms_to_sword(w), {}).empty())
    throw Error("torsion probe requires a nontrivial element");
  SignedWord power = w;
  for (int k = 2; k <= k_max; ++k) {
    power = concat(std::move(power), w);
    if (m_star_T_P(tree, atoms_to_sword(power), {}).empty()) return false;
  }
  return true;
}

}  // namespace pgk
