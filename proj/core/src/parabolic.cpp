#include "pgk/parabolic.hpp"

#include <algorithm>

#include "pgk/errors.hpp"

namespace pgk {

bool word_in_subset(const Word& w, const std::vector<AtomId>& subset) {
  return std::all_of(w.begin(), w.end(), [&](AtomId a) {
    return std::binary_search(subset.begin(), subset.end(), a);
  });
}

bool is_parabolic(const std::vector<AtomId>& subset,
                  const PresentationSpec& spec, const ComplementPair& cp) {
  std::vector<AtomId> X = subset;
  std::sort(X.begin(), X.end());
  for (AtomId x : X)
    if (x < 0 || x >= static_cast<AtomId>(spec.atom_count()))
      throw UnknownAtomError(std::to_string(x));

  auto in_X = [&](AtomId a) {
    return std::binary_search(X.begin(), X.end(), a);
  };
  const AtomId n = static_cast<AtomId>(spec.atom_count());
  for (AtomId x : X) {
    for (AtomId y = 0; y < n; ++y) {
      if (y == x) continue;
      if (in_X(y)) {
        // (a): inner complements must stay inside X*
        if (const Word* f = cp.fL(x, y); f && !word_in_subset(*f, X))
          return false;
        if (const Word* f = cp.fR(x, y); f && !word_in_subset(*f, X))
          return false;
      } else {
        // (b): boundary complements must escape X*
        if (const Word* f = cp.fL(x, y); f && word_in_subset(*f, X))
          return false;
        if (const Word* f = cp.fR(y, x); f && word_in_subset(*f, X))
          return false;
      }
    }
  }
  return true;
}

namespace {

bool induced_graph_complete(const std::vector<AtomId>& X,
                            const ComplementPair& cp) {
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      if (!cp.edge_L(X[i], X[j])) return false;
  return true;
}

}  // namespace

ParabolicHandle make_parabolic_handle(const std::vector<AtomId>& subset,
                                      const PresentationSpec& spec,
                                      const ComplementPair& cp,
                                      std::size_t max_garside_len,
                                      const ClosureLimits& limits) {
  std::vector<AtomId> X = subset;
  std::sort(X.begin(), X.end());
  if (!is_parabolic(X, spec, cp))
    throw Error("subset {" + [&] {
      std::string s;
      for (AtomId a : X) s += (s.empty() ? "" : ",") + spec.atom_name(a);
      return s;
    }() + "} is not parabolic");
  ParabolicHandle h;
  h.atoms = X;
  if (induced_graph_complete(X, cp)) {
    GarsideStructure gs = find_minimal_garside(spec, X, max_garside_len,
                                               limits);
    h.spherical = true;
    h.delta = gs.delta_word();
  }
  return h;
}

SphericalEnumeration enumerate_spherical_parabolics(
    const PresentationSpec& spec, const ComplementPair& cp,
    std::size_t max_garside_len, const ClosureLimits& limits) {
  const std::size_t n = spec.atom_count();
  std::vector<std::vector<AtomId>> subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<AtomId> X;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) X.push_back(static_cast<AtomId>(i));
    subsets.push_back(std::move(X));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  SphericalEnumeration out;
  for (const auto& X : subsets) {
    if (!is_parabolic(X, spec, cp)) continue;
    if (!induced_graph_complete(X, cp)) continue;
    GarsideStructure gs = find_minimal_garside(spec, X, max_garside_len,
                                               limits);
    ParabolicHandle h;
    h.atoms = X;
    h.spherical = true;
    h.delta = gs.delta_word();
    out.handles.push_back(std::move(h));
    for (std::size_t s = 0; s < gs.simple_count(); ++s)
      out.global_simples.insert(gs.simple_word(static_cast<SimpleId>(s)));
  }
  return out;
}

Word parabolic_delta(const std::vector<AtomId>& subset,
                     const GarsideStructure& gs) {
  std::vector<AtomId> X = subset;
  std::sort(X.begin(), X.end());
  std::vector<SimpleId> inside = gs.simples_in(X);
  SimpleId d = gs.identity();
  for (SimpleId s : inside) d = gs.join_L(s, d);
  // Div(Delta_N) must be exactly the simples inside N, and Delta_N must be
  // balanced there; anything else contradicts the parabolic assumption.
  std::set<SimpleId> expected(inside.begin(), inside.end());
  for (SimpleId s = 0; s < static_cast<SimpleId>(gs.simple_count()); ++s) {
    bool ld = gs.left_divides(s, d);
    bool rd = gs.right_divides(s, d);
    bool want = expected.count(s) != 0;
    if (ld != want || rd != want)
      throw InternalError("Div(Delta_N) differs from Div(delta) within N");
  }
  return gs.simple_word(d);
}

ParabolicHandle intersect_parabolics(const ParabolicHandle& a,
                                     const ParabolicHandle& b,
                                     const PresentationSpec& spec,
                                     const ComplementPair& cp,
                                     std::size_t max_garside_len,
                                     const ClosureLimits& limits) {
  std::vector<AtomId> X;
  std::set_intersection(a.atoms.begin(), a.atoms.end(), b.atoms.begin(),
                        b.atoms.end(), std::back_inserter(X));
  if (!is_parabolic(X, spec, cp))
    throw IntersectionNotParabolicError("intersection fails the complement test");
  return make_parabolic_handle(X, spec, cp, max_garside_len, limits);
}

namespace {

Word delta_power(const GarsideStructure& gs, const Word& delta_N,
                 std::size_t k) {
  Word out;
  out.reserve(delta_N.size() * k);
  for (std::size_t i = 0; i < k; ++i)
    out.insert(out.end(), delta_N.begin(), delta_N.end());
  return canonical_word(gs, out);
}

}  // namespace

std::pair<Word, Word> strip_right_parabolic(const Word& g,
                                            const std::vector<AtomId>& subset,
                                            const GarsideStructure& gs) {
  Word gc = canonical_word(gs, g);
  Word delta_N = parabolic_delta(subset, gs);
  if (delta_N.empty()) return {gc, {}};
  // The gcd against Delta_N^k stabilizes once k reaches the simple length
  // of g; the representative's atom length is a safe overestimate.
  std::size_t k = std::max<std::size_t>(1, gc.size());
  Word h = gcd_R(gs, gc, delta_power(gs, delta_N, k));
  return {right_quotient(gs, h, gc), h};
}

std::pair<Word, Word> strip_left_parabolic(const Word& g,
                                           const std::vector<AtomId>& subset,
                                           const GarsideStructure& gs) {
  Word gc = canonical_word(gs, g);
  Word delta_N = parabolic_delta(subset, gs);
  if (delta_N.empty()) return {{}, gc};
  std::size_t k = std::max<std::size_t>(1, gc.size());
  Word h = gcd_L(gs, gc, delta_power(gs, delta_N, k));
  return {h, left_quotient(gs, h, gc)};
}

}  // namespace pgk
