#ifndef PGK_FC_TREE_HPP
#define PGK_FC_TREE_HPP

#include <memory>
#include <string>
#include <vector>

#include "pgk/garside.hpp"
#include "pgk/presentation.hpp"

namespace pgk {

// A node of the FC tree.  Leaves carry a Garside structure; inner nodes
// carry the amalgam split (left, right, shared alphabet N) plus the FC tree
// for N derived from the left child.
struct FcNode {
  std::vector<AtomId> atoms;  // sorted
  std::unique_ptr<GarsideStructure> gs;
  std::unique_ptr<FcNode> left;
  std::unique_ptr<FcNode> right;
  std::unique_ptr<FcNode> mid;    // FC tree of N = left n right
  std::vector<AtomId> shared;     // N's alphabet, sorted

  bool is_leaf() const { return gs != nullptr; }
};

struct FcTree {
  PresentationSpec spec;
  ComplementPair cp;
  std::unique_ptr<FcNode> root;
  ClosureLimits limits;
  std::size_t max_garside_len = 0;
};

// Recursive construction: complete induced graph -> Garside leaf; otherwise
// the admissible split with the smallest overlap (ties broken
// lexicographically), children and the N tree built recursively.
// Throws NoValidSplitError when the graph is incomplete but no split
// satisfies the parabolicity and no-crossing-edge conditions.
FcTree build_fc_tree(const PresentationSpec& spec, const ComplementPair& cp,
                     std::size_t max_garside_len = 0,
                     const ClosureLimits& limits = {});

// Indented text rendering, one node per line.
std::string render_fc_tree(const FcTree& tree);

}  // namespace pgk

#endif  // PGK_FC_TREE_HPP
