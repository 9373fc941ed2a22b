#include "pgk/coset.hpp"

#include <algorithm>
#include <deque>

#include "pgk/errors.hpp"

namespace pgk {

CosetContext make_coset_context(const GarsideStructure& gs,
                                std::vector<AtomId> n_atoms) {
  CosetContext ctx;
  ctx.gs = &gs;
  std::sort(n_atoms.begin(), n_atoms.end());
  ctx.delta_N = parabolic_delta(n_atoms, gs);
  ctx.n_atoms = std::move(n_atoms);
  return ctx;
}

namespace {

Word delta_power(const CosetContext& ctx, std::size_t k) {
  Word out;
  out.reserve(ctx.delta_N.size() * k);
  for (std::size_t i = 0; i < k; ++i)
    out.insert(out.end(), ctx.delta_N.begin(), ctx.delta_N.end());
  return canonical_word(*ctx.gs, out);
}

}  // namespace

Word M_N_strip(const Word& g, const CosetContext& ctx) {
  const GarsideStructure& gs = *ctx.gs;
  Word gc = canonical_word(gs, g);
  if (ctx.delta_N.empty()) return gc;
  std::size_t k = std::max<std::size_t>(1, left_greedy_nf(gs, gc).size());
  Word d = gcd_L(gs, gc, delta_power(ctx, k));
  return left_quotient(gs, d, gc);
}

LeafGroupElement phi(const LeafGroupElement& g, const Word& h,
                     const CosetContext& ctx) {
  const GarsideStructure& gs = *ctx.gs;
  Word hb = canonical_word(gs, concat(Word(h), g.den));
  Word t = gcd_R(gs, g.num, hb);
  Word c = right_quotient(gs, t, g.num);
  Word e = right_quotient(gs, t, hb);
  Word d = M_N_strip(e, ctx);
  return {std::move(c), std::move(d)};
}

LeafGroupElement m_N(const LeafGroupElement& g, const CosetContext& ctx) {
  std::size_t k = std::max<std::size_t>(1, simple_length(*ctx.gs, g));
  return phi(g, delta_power(ctx, k), ctx);
}

SimpleWord m_N_star(const SimpleWord& w, const CosetContext& ctx) {
  LeafGroupElement g = group_nf(*ctx.gs, expand(w));
  return leaf_canonical_sword(*ctx.gs, m_N(g, ctx));
}

namespace {

// All left divisors of Delta_N^k, enumerated by right-multiplying atoms of
// N.  Small at the scales the decision procedure is meant for.
std::vector<Word> divisors_of_delta_power(const CosetContext& ctx,
                                          std::size_t k) {
  const GarsideStructure& gs = *ctx.gs;
  Word bound = delta_power(ctx, k);
  std::set<Word> seen{{}};
  std::deque<Word> queue{{}};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (AtomId a : ctx.n_atoms) {
      Word next = cur;
      next.push_back(a);
      next = canonical_word(gs, next);
      if (seen.count(next)) continue;
      if (!left_divides(gs, next, bound)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

bool leq_N(const LeafGroupElement& g1, const LeafGroupElement& g2,
           const CosetContext& ctx) {
  const GarsideStructure& gs = *ctx.gs;
  if (!left_divides(gs, g1.num, g2.num)) return false;
  Word a = left_quotient(gs, g1.num, g2.num);
  if (ctx.delta_N.empty()) {
    // N = {1}: the three conditions collapse to b2 = b1 a.
    return canonical_word(gs, concat(Word(g1.den), a)) == g2.den;
  }
  std::size_t bound = simple_length(gs, g1) + simple_length(gs, g2);
  Word b1a = canonical_word(gs, concat(Word(g1.den), a));
  for (const Word& h1 : divisors_of_delta_power(ctx, std::max<std::size_t>(
                                                         1, bound))) {
    Word t = canonical_word(gs, concat(Word(h1), b1a));
    if (!right_divides(gs, g2.den, t)) continue;
    Word h2 = right_quotient(gs, g2.den, t);
    if (!word_in_subset(h2, ctx.n_atoms)) continue;
    Word h1b1 = canonical_word(gs, concat(Word(h1), g1.den));
    if (gcd_L(gs, h2, h1) == gcd_L(gs, h2, h1b1)) return true;
  }
  return false;
}

}  // namespace pgk
