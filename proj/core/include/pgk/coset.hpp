#ifndef PGK_COSET_HPP
#define PGK_COSET_HPP

#include "pgk/garside.hpp"
#include "pgk/parabolic.hpp"

namespace pgk {

// Fixes the ambient Garside leaf and a spherical parabolic N for the coset
// operations below.  Immutable; safe to share.
//
// Everything here treats left cosets g G(N).  Right cosets are the mirror
// image: reverse every word (which swaps the two complement tables) and
// apply these maps to the reversed presentation.
struct CosetContext {
  const GarsideStructure* gs = nullptr;
  std::vector<AtomId> n_atoms;  // sorted
  Word delta_N;                 // canonical; empty for the trivial parabolic
};

CosetContext make_coset_context(const GarsideStructure& gs,
                                std::vector<AtomId> n_atoms);

// Removes the greatest left divisor of g lying in N; the result has trivial
// left gcd with Delta_N.
Word M_N_strip(const Word& g, const CosetContext& ctx);

// phi_g(h) = a (a ^R hb)^{-1} (M_N(hb (a ^R hb)^{-1}))^{-1}, returned in
// right normal form.
LeafGroupElement phi(const LeafGroupElement& g, const Word& h,
                     const CosetContext& ctx);

// The coset partial order <=_N, decided by solving the numerator equation
// and searching witnesses among divisors of Delta_N^(|g1|+|g2|).
bool leq_N(const LeafGroupElement& g1, const LeafGroupElement& g2,
           const CosetContext& ctx);

// The <=_N-minimal representative of g G(N): phi_g(Delta_N^|g|).
LeafGroupElement m_N(const LeafGroupElement& g, const CosetContext& ctx);

// Word-level form of m_N over the simple alphabet; constant on cosets.
SimpleWord m_N_star(const SimpleWord& w, const CosetContext& ctx);

}  // namespace pgk

#endif  // PGK_COSET_HPP
