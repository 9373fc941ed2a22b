#ifndef PGK_PARABOLIC_HPP
#define PGK_PARABOLIC_HPP

#include <optional>
#include <set>
#include <vector>

#include "pgk/garside.hpp"
#include "pgk/presentation.hpp"

namespace pgk {

// A submonoid generated by a subset of atoms that passes the complement
// test.  delta is present exactly when the submonoid is spherical.
struct ParabolicHandle {
  std::vector<AtomId> atoms;  // sorted
  bool spherical = false;
  std::optional<Word> delta;
};

// The complement-table characterization of standard parabolic submonoids:
// (a) complements of edges inside X stay in X*, and (b) complements across
// the boundary never fall into X*.
bool is_parabolic(const std::vector<AtomId>& subset,
                  const PresentationSpec& spec, const ComplementPair& cp);

// Builds a handle for the subset, discovering the Garside element when the
// induced graph is complete.  Throws if the subset is not parabolic.
ParabolicHandle make_parabolic_handle(const std::vector<AtomId>& subset,
                                      const PresentationSpec& spec,
                                      const ComplementPair& cp,
                                      std::size_t max_garside_len = 0,
                                      const ClosureLimits& limits = {});

struct SphericalEnumeration {
  std::vector<ParabolicHandle> handles;  // by size, then lexicographic
  std::set<Word> global_simples;         // the union of the leaf simple sets
};

// Every subset that is parabolic, has a complete induced graph, and admits
// a Garside element within the bound.
SphericalEnumeration enumerate_spherical_parabolics(
    const PresentationSpec& spec, const ComplementPair& cp,
    std::size_t max_garside_len = 0, const ClosureLimits& limits = {});

// Delta_N inside an ambient Garside leaf: the join of the simples lying in
// N.  Verifies Div(Delta_N) = Div(delta) n N before returning.
Word parabolic_delta(const std::vector<AtomId>& subset,
                     const GarsideStructure& gs);

// Subset intersection re-checked against the complement tables.  A failed
// re-check can only fail on inconsistent inputs and throws
// IntersectionNotParabolicError.
ParabolicHandle intersect_parabolics(const ParabolicHandle& a,
                                     const ParabolicHandle& b,
                                     const PresentationSpec& spec,
                                     const ComplementPair& cp,
                                     std::size_t max_garside_len = 0,
                                     const ClosureLimits& limits = {});

// (g', h) with g = g' h and h the greatest right divisor of g inside N.
// g' is the representative of the minimal class of g modulo N.
std::pair<Word, Word> strip_right_parabolic(const Word& g,
                                            const std::vector<AtomId>& subset,
                                            const GarsideStructure& gs);
// Mirror: (h, g') with g = h g'.
std::pair<Word, Word> strip_left_parabolic(const Word& g,
                                           const std::vector<AtomId>& subset,
                                           const GarsideStructure& gs);

// True iff every letter of the canonical word lies in the subset; for a
// parabolic subset this decides membership, since parabolic submonoids are
// closed by factors.
bool word_in_subset(const Word& w, const std::vector<AtomId>& subset);

}  // namespace pgk

#endif  // PGK_PARABOLIC_HPP
