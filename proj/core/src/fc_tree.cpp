#include "pgk/fc_tree.hpp"

#include <algorithm>
#include <sstream>

#include "pgk/errors.hpp"
#include "pgk/parabolic.hpp"

namespace pgk {

namespace {

using Mask = std::uint32_t;

std::vector<AtomId> mask_atoms(Mask m) {
  std::vector<AtomId> out;
  for (AtomId i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

bool complete_on(const std::vector<AtomId>& atoms, const ComplementPair& cp) {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (!cp.edge_L(atoms[i], atoms[j])) return false;
  return true;
}

struct Builder {
  const PresentationSpec& spec;
  const ComplementPair& cp;
  std::size_t max_garside_len;
  const ClosureLimits& limits;

  std::unique_ptr<FcNode> leaf(const std::vector<AtomId>& atoms) {
    auto node = std::make_unique<FcNode>();
    node->atoms = atoms;
    node->gs = std::make_unique<GarsideStructure>(
        find_minimal_garside(spec, atoms, max_garside_len, limits));
    return node;
  }

  std::unique_ptr<FcNode> build(const std::vector<AtomId>& atoms) {
    if (complete_on(atoms, cp)) return leaf(atoms);

    // Exhaustive split search over subset pairs covering the node.
    Mask full = 0;
    std::vector<AtomId> local = atoms;
    for (std::size_t i = 0; i < local.size(); ++i) full |= Mask{1} << i;

    auto to_global = [&](Mask m) {
      std::vector<AtomId> out;
      for (AtomId i : mask_atoms(m)) out.push_back(local[i]);
      return out;
    };

    std::optional<std::pair<std::vector<AtomId>, std::vector<AtomId>>> best;
    std::size_t best_overlap = 0;
    for (Mask m1 = 1; m1 < full; ++m1) {
      for (Mask m2 = m1 + 1; m2 <= full; ++m2) {
        if ((m1 | m2) != full || m2 == full) continue;
        std::vector<AtomId> x1 = to_global(m1);
        std::vector<AtomId> x2 = to_global(m2);
        if (x2 < x1) std::swap(x1, x2);
        bool cross_edge = false;
        for (AtomId a : mask_atoms(m1 & ~m2))
          for (AtomId b : mask_atoms(m2 & ~m1))
            if (cp.edge_L(local[a], local[b]) || cp.edge_R(local[a], local[b]))
              cross_edge = true;
        if (cross_edge) continue;
        if (!is_parabolic(x1, spec, cp) || !is_parabolic(x2, spec, cp))
          continue;
        std::size_t overlap = std::popcount(m1 & m2);
        if (!best || overlap < best_overlap ||
            (overlap == best_overlap &&
             std::make_pair(x1, x2) < std::make_pair(best->first,
                                                     best->second))) {
          best = {x1, x2};
          best_overlap = overlap;
        }
      }
    }
    if (!best)
      throw NoValidSplitError("node {" + [&] {
        std::string s;
        for (AtomId a : atoms) s += (s.empty() ? "" : ",") + spec.atom_name(a);
        return s;
      }() + "} has an incomplete graph and no admissible split");

    auto node = std::make_unique<FcNode>();
    node->atoms = atoms;
    std::set_intersection(best->first.begin(), best->first.end(),
                          best->second.begin(), best->second.end(),
                          std::back_inserter(node->shared));
    node->left = build(best->first);
    node->right = build(best->second);
    node->mid = intersect(*node->left, node->shared);
    return node;
  }

  // The FC tree for N obtained from a subtree by intersecting every label
  // with N; nodes whose intersection lives entirely in one child collapse
  // into that child.
  std::unique_ptr<FcNode> intersect(const FcNode& t,
                                    const std::vector<AtomId>& n) {
    std::vector<AtomId> cut;
    std::set_intersection(t.atoms.begin(), t.atoms.end(), n.begin(), n.end(),
                          std::back_inserter(cut));
    if (t.is_leaf()) return leaf(cut);

    auto inside = [&](const FcNode& child) {
      return std::includes(child.atoms.begin(), child.atoms.end(),
                           cut.begin(), cut.end());
    };
    if (inside(*t.left)) return intersect(*t.left, n);
    if (inside(*t.right)) return intersect(*t.right, n);

    auto node = std::make_unique<FcNode>();
    node->atoms = cut;
    std::set_intersection(t.shared.begin(), t.shared.end(), n.begin(),
                          n.end(), std::back_inserter(node->shared));
    if (!is_parabolic(node->atoms, spec, cp))
      throw IntersectionNotParabolicError("derived N-tree node");
    node->left = intersect(*t.left, n);
    node->right = intersect(*t.right, n);
    node->mid = intersect(*t.mid, n);
    return node;
  }
};

void render_node(const FcTree& tree, const FcNode& node, int depth,
                 std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  auto atom_list = [&](const std::vector<AtomId>& v) {
    std::string s;
    for (AtomId a : v) s += (s.empty() ? "" : ",") + tree.spec.atom_name(a);
    return "{" + s + "}";
  };
  if (node.is_leaf()) {
    out << "leaf " << atom_list(node.atoms) << " delta=";
    out << (node.gs->delta_word().empty()
                ? "1"
                : tree.spec.spell(node.gs->delta_word()));
    out << " simples=" << node.gs->simple_count() << '\n';
  } else {
    out << "amalgam " << atom_list(node.atoms) << " N=" << atom_list(node.shared)
        << '\n';
    render_node(tree, *node.left, depth + 1, out);
    render_node(tree, *node.right, depth + 1, out);
  }
}

}  // namespace

FcTree build_fc_tree(const PresentationSpec& spec, const ComplementPair& cp,
                     std::size_t max_garside_len, const ClosureLimits& limits) {
  AtomReport atoms_ok = validate_atoms(spec, cp);
  if (!atoms_ok.all_atoms())
    throw Error("presentation has non-atom generators; construction refused");
  if (!check_graph_coincidence(cp))
    throw Error("left and right graphs differ; input cannot be of FC type");
  if (spec.atom_count() > 31)
    throw Error("atom set too large for the split search");

  FcTree tree;
  tree.spec = spec;
  tree.cp = cp;
  tree.limits = limits;
  tree.max_garside_len = max_garside_len;
  std::vector<AtomId> all;
  for (AtomId a = 0; a < static_cast<AtomId>(spec.atom_count()); ++a)
    all.push_back(a);
  Builder b{spec, cp, max_garside_len, limits};
  tree.root = b.build(all);
  return tree;
}

std::string render_fc_tree(const FcTree& tree) {
  std::ostringstream out;
  render_node(tree, *tree.root, 0, out);
  return out.str();
}

}  // namespace pgk
