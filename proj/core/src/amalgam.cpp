#include "pgk/amalgam.hpp"

#include <algorithm>

#include "pgk/coset.hpp"
#include "pgk/errors.hpp"
#include "pgk/parabolic.hpp"

namespace pgk {

namespace {

// Inputs outside the supported class could in principle make the mutual
// recursions spin; fail with a typed error instead of exhausting the stack.
struct DepthGuard {
  static thread_local int depth;
  DepthGuard() {
    if (++depth > 400)
      throw InternalError("coset recursion exceeded its depth bound");
  }
  ~DepthGuard() { --depth; }
};
thread_local int DepthGuard::depth = 0;

bool contains_atom(const std::vector<AtomId>& sorted, AtomId a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

std::vector<AtomId> intersect_atoms(const std::vector<AtomId>& a,
                                    const std::vector<AtomId>& b) {
  std::vector<AtomId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Letters of N are assigned to the left child.
int side_of(const FcNode& node, AtomId a) {
  return contains_atom(node.left->atoms, a) ? 1 : 2;
}

const FcNode& child_of(const FcNode& node, int side) {
  return side == 1 ? *node.left : *node.right;
}

void check_letters(const FcNode& node, const Word& w) {
  for (AtomId a : w)
    if (!contains_atom(node.atoms, a))
      throw UnknownAtomError(std::to_string(a));
}

// Sweep state: (factors, h) is the amalgam normal form of the prefix
// consumed so far, with h kept as a plain positive word over N.
struct Sweep {
  const FcTree& tree;
  const FcNode& node;
  std::vector<AmalgamFactor> factors;
  Word h;

  void block(int side, const Word& bw) {
    const FcNode& child = child_of(node, side);
    Word x;
    if (!factors.empty() && factors.back().side == side) {
      x = concat(std::move(factors.back().word), concat(h, bw));
      factors.pop_back();
    } else {
      x = concat(h, bw);
    }
    auto [rep, hh] = monoid_strip_right(tree, child, x, node.shared);
    h = hh;
    if (!rep.empty()) factors.push_back({side, std::move(rep)});
  }

  AmalgamParts finish() && {
    return {std::move(factors), monoid_canonical(tree, *node.mid, h)};
  }
};

}  // namespace

AmalgamParts amalgam_nf(const FcTree& tree, const FcNode& node,
                        const Word& w) {
  check_letters(node, w);
  Sweep sweep{tree, node, {}, {}};
  std::size_t i = 0;
  while (i < w.size()) {
    int side = side_of(node, w[i]);
    std::size_t j = i;
    while (j < w.size() && side_of(node, w[j]) == side) ++j;
    sweep.block(side, Word(w.begin() + i, w.begin() + j));
    i = j;
  }
  return std::move(sweep).finish();
}

Word monoid_canonical(const FcTree& tree, const FcNode& node, const Word& w) {
  if (node.is_leaf()) {
    check_letters(node, w);
    return canonical_word(*node.gs, w);
  }
  AmalgamParts parts = amalgam_nf(tree, node, w);
  Word out;
  for (const auto& f : parts.factors) out = concat(std::move(out), f.word);
  return concat(std::move(out), parts.tail);
}

AmalgamParts amalgam_mul(const FcTree& tree, const FcNode& node,
                         const AmalgamParts& u, const AmalgamParts& v) {
  Sweep sweep{tree, node, u.factors, u.tail};
  for (const auto& f : v.factors) sweep.block(f.side, f.word);
  sweep.h = concat(std::move(sweep.h), v.tail);
  return std::move(sweep).finish();
}

std::size_t ell_N(const FcTree& tree, const FcNode& node, const Word& w) {
  return amalgam_nf(tree, node, w).factors.size();
}

std::pair<Word, Word> monoid_strip_right(const FcTree& tree,
                                         const FcNode& node, const Word& g,
                                         const std::vector<AtomId>& p_atoms) {
  DepthGuard guard;
  std::vector<AtomId> p = intersect_atoms(p_atoms, node.atoms);
  if (node.is_leaf()) return strip_right_parabolic(g, p, *node.gs);

  AmalgamParts parts = amalgam_nf(tree, node, g);
  if (parts.factors.empty())
    return monoid_strip_right(tree, *node.mid, parts.tail, p);

  const AmalgamFactor& last = parts.factors.back();
  const FcNode& child = child_of(node, last.side);
  auto [y, h] =
      monoid_strip_right(tree, child, concat(last.word, parts.tail), p);

  Word prefix;
  for (std::size_t i = 0; i + 1 < parts.factors.size(); ++i)
    prefix = concat(std::move(prefix), parts.factors[i].word);

  if (!word_in_subset(y, node.shared))
    return {monoid_canonical(tree, node, concat(std::move(prefix), y)), h};

  auto [rep, h2] =
      monoid_strip_right(tree, node, concat(std::move(prefix), y), p);
  return {rep, concat(std::move(h2), h)};
}

namespace {

std::string serialize_element_impl(const FcTree& tree, const FcNode& node,
                                   const Word& w);

std::string serialize_parts_impl(const FcTree& tree, const FcNode& node,
                                 const AmalgamParts& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.factors.size(); ++i) {
    if (i) out += " | ";
    const auto& f = parts.factors[i];
    out += std::to_string(f.side) + ":" +
           serialize_element_impl(tree, child_of(node, f.side), f.word);
  }
  out += " ; ";
  out += serialize_element_impl(tree, *node.mid, parts.tail);
  out += ")";
  return out;
}

std::string serialize_element_impl(const FcTree& tree, const FcNode& node,
                                   const Word& w) {
  if (node.is_leaf()) {
    Word c = canonical_word(*node.gs, w);
    return c.empty() ? "1" : tree.spec.spell(c);
  }
  return serialize_parts_impl(tree, node, amalgam_nf(tree, node, w));
}

}  // namespace

std::string serialize_amalgam(const FcTree& tree, const FcNode& node,
                              const AmalgamParts& parts) {
  return serialize_parts_impl(tree, node, parts);
}

std::string serialize_monoid_element(const FcTree& tree, const FcNode& node,
                                     const Word& w) {
  return serialize_element_impl(tree, node, w);
}

// ---- group level ----

SimpleWord atoms_to_sword(const SignedWord& w) {
  SimpleWord out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back({Word{l.atom}, l.inverse});
  return out;
}

std::string spell_sword(const PresentationSpec& spec, const SimpleWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    const auto& l = w[i];
    for (std::size_t j = 0; j < l.simple.size(); ++j) {
      if (j) out += '.';
      out += spec.atom_name(l.simple[j]);
    }
    if (l.inverse) out += '-';
  }
  return out;
}

namespace {

void check_in_shared(const FcNode& node, const SignedWord& w) {
  for (const auto& l : w)
    if (!contains_atom(node.shared, l.atom))
      throw InternalError("element of G(N) spelled outside N");
}

}  // namespace

GroupParts group_decompose(const FcTree& tree, const FcNode& node,
                           const SignedWord& w) {
  GroupParts st;
  for (const auto& letter : w) {
    if (contains_atom(node.shared, letter.atom)) {
      SignedWord t = expand(st.tail);
      t.push_back(letter);
      st.tail = group_canonical(tree, *node.mid, t);
      continue;
    }
    int side = side_of(node, letter.atom);
    const FcNode& child = child_of(node, side);
    SignedWord y = expand(st.tail);
    y.push_back(letter);
    if (!st.factors.empty() && st.factors.back().side == side) {
      y = concat(expand(st.factors.back().sword), y);
      st.factors.pop_back();
    }
    SimpleWord rep = m_T_P(tree, child, y, node.shared);
    if (rep.empty()) {
      // the merged piece fell into G(N)
      SignedWord ycan = expand(group_canonical(tree, child, y));
      check_in_shared(node, ycan);
      st.tail = group_canonical(tree, *node.mid, ycan);
    } else {
      SignedWord rest = concat(inverse_of(expand(rep)), y);
      SignedWord hcan = expand(group_canonical(tree, child, rest));
      check_in_shared(node, hcan);
      st.tail = group_canonical(tree, *node.mid, hcan);
      st.factors.push_back({side, std::move(rep)});
    }
  }
  return st;
}

SimpleWord group_canonical(const FcTree& tree, const FcNode& node,
                           const SignedWord& w) {
  if (node.is_leaf())
    return leaf_canonical_sword(*node.gs, group_nf(*node.gs, w));
  GroupParts parts = group_decompose(tree, node, w);
  SimpleWord out;
  for (const auto& f : parts.factors) out = concat(std::move(out), f.sword);
  return concat(std::move(out), parts.tail);
}

std::size_t group_amalgam_length(const FcTree& tree, const FcNode& node,
                                 const SignedWord& w) {
  return group_decompose(tree, node, w).factors.size();
}

SimpleWord m_T_P(const FcTree& tree, const FcNode& node, const SignedWord& w,
                 const std::vector<AtomId>& p_atoms) {
  DepthGuard guard;
  std::vector<AtomId> p = intersect_atoms(p_atoms, node.atoms);
  if (node.is_leaf()) {
    CosetContext ctx = make_coset_context(*node.gs, p);
    return leaf_canonical_sword(*node.gs, m_N(group_nf(*node.gs, w), ctx));
  }

  GroupParts parts = group_decompose(tree, node, w);
  const std::size_t l = parts.factors.size();
  if (l == 0) {
    SimpleWord rep = m_T_P(tree, *node.mid, expand(parts.tail), p);
    return group_canonical(tree, node, expand(rep));
  }
  if (l == 1) {
    const auto& f = parts.factors[0];
    SignedWord g = concat(expand(f.sword), expand(parts.tail));
    SimpleWord rep = m_T_P(tree, child_of(node, f.side), g, p);
    return group_canonical(tree, node, expand(rep));
  }

  const auto& last = parts.factors.back();
  const FcNode& child = child_of(node, last.side);
  SignedWord gl = concat(expand(last.sword), expand(parts.tail));
  SimpleWord y = m_T_P(tree, child, gl, p);

  SignedWord rest;
  for (std::size_t i = 0; i + 1 < l; ++i)
    rest = concat(std::move(rest), expand(parts.factors[i].sword));
  rest = concat(std::move(rest), expand(y));

  bool y_in_gn = m_T_P(tree, child, expand(y), node.shared).empty();
  if (!y_in_gn) return group_canonical(tree, node, rest);
  return m_T_P(tree, node, rest, p);
}

// ---- word-level coset map: pre-expressions and elementary reductions ----

namespace {

struct Slot {
  int side;
  SimpleWord sword;
};

int sword_side(const FcNode& node, const SimpleLetter& l) {
  bool in_left = std::all_of(l.simple.begin(), l.simple.end(), [&](AtomId a) {
    return contains_atom(node.left->atoms, a);
  });
  if (in_left) return 1;
  bool in_right = std::all_of(l.simple.begin(), l.simple.end(), [&](AtomId a) {
    return contains_atom(node.right->atoms, a);
  });
  if (!in_right)
    throw Error("letter is not a simple of either amalgam side");
  return 2;
}

SimpleWord atoms_as_sword(const SignedWord& w) { return atoms_to_sword(w); }

}  // namespace

SimpleWord m_star_T_P(const FcTree& tree, const FcNode& node,
                      const SimpleWord& w, const std::vector<AtomId>& p_atoms) {
  std::vector<AtomId> p = intersect_atoms(p_atoms, node.atoms);
  if (node.is_leaf()) {
    CosetContext ctx = make_coset_context(*node.gs, p);
    return m_N_star(w, ctx);
  }

  std::vector<Slot> slots;
  for (const auto& letter : w)
    slots.push_back({sword_side(node, letter), SimpleWord{letter}});
  SimpleWord tail;

  // Reduction loop.  Types are tried in the order I, V, II, III, IV,
  // leftmost position first; every firing strictly advances the state, and
  // the sweep re-starts from type I.
  const std::size_t budget = 1000 + 200 * (w.size() + 1);
  for (std::size_t step = 0;; ++step) {
    if (step > budget)
      throw InternalError("pre-expression reduction did not terminate");

    // I: merge adjacent same-side slots
    bool fired = false;
    for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
      if (slots[i].side == slots[i + 1].side) {
        slots[i].sword = concat(std::move(slots[i].sword),
                                slots[i + 1].sword);
        slots.erase(slots.begin() + i + 1);
        fired = true;
        break;
      }
    }
    if (fired) continue;

    // V: reduce the last slot together with the tail modulo P
    if (!slots.empty()) {
      Slot& lastslot = slots.back();
      const FcNode& child = child_of(node, lastslot.side);
      SimpleWord uv = concat(lastslot.sword, tail);
      SimpleWord reduced = m_star_T_P(tree, child, uv, p);
      if (reduced != group_canonical(tree, child, expand(uv))) {
        lastslot.sword = std::move(reduced);
        tail.clear();
        continue;
      }
    }

    // II: a slot whose element lies in G(N) dissolves into its neighbour
    // III: otherwise the slot is replaced by its N-coset representative
    for (std::size_t i = 0; i < slots.size() && !fired; ++i) {
      const FcNode& child = child_of(node, slots[i].side);
      SimpleWord rep = m_star_T_P(tree, child, slots[i].sword, node.shared);
      if (rep.empty()) {
        SignedWord u = expand(group_canonical(tree, child,
                                              expand(slots[i].sword)));
        check_in_shared(node, u);
        if (i + 1 < slots.size()) {
          slots[i + 1].sword = concat(atoms_as_sword(u),
                                      std::move(slots[i + 1].sword));
        } else {
          tail = concat(atoms_as_sword(u), std::move(tail));
        }
        slots.erase(slots.begin() + i);
        fired = true;
      } else if (rep != slots[i].sword) {
        SignedWord v = concat(inverse_of(expand(rep)),
                              expand(slots[i].sword));
        SignedWord vcan = expand(group_canonical(tree, child, v));
        check_in_shared(node, vcan);
        slots[i].sword = std::move(rep);
        if (i + 1 < slots.size()) {
          slots[i + 1].sword = concat(atoms_as_sword(vcan),
                                      std::move(slots[i + 1].sword));
        } else {
          tail = concat(atoms_as_sword(vcan), std::move(tail));
        }
        fired = true;
      }
    }
    if (fired) continue;

    // IV: canonicalize the tail over the N tree
    SimpleWord tcan = group_canonical(tree, *node.mid, expand(tail));
    if (tcan != tail) {
      tail = std::move(tcan);
      continue;
    }
    break;
  }

  SimpleWord out;
  for (auto& s : slots) out = concat(std::move(out), s.sword);
  return concat(std::move(out), tail);
}

SimpleWord group_canonical(const FcTree& tree, const SignedWord& w) {
  return group_canonical(tree, *tree.root, w);
}

SimpleWord m_star_T_P(const FcTree& tree, const SimpleWord& w,
                      const std::vector<AtomId>& p_atoms) {
  return m_star_T_P(tree, *tree.root, w, p_atoms);
}

}  // namespace pgk
