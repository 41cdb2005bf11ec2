#pragma once

// Rooted trees and the tree form of the Bell polynomials.
//
// Trees are written as balanced strings: a tree with subtrees t_1..t_n is
// "a" + s(t_1) + ... + s(t_n) + "b", so the single node is "ab" and the
// ladder with one edge is "aabb".

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bellhopf/algebra.hpp"

namespace bellhopf {

class PlanarTree {
 public:
  PlanarTree() = default;
  explicit PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {}
  /// Parses the balanced "a...b" form. Throws std::invalid_argument.
  static PlanarTree parse(std::string_view text);
  static PlanarTree ladder(int edges);

  const std::vector<PlanarTree>& children() const { return children_; }
  int edges() const;
  int leaves() const;
  std::string str() const;

  /// Nonplanar normal form: children sorted recursively.
  PlanarTree normalized() const;

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
  // By edge count, then by the balanced string.
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);

 private:
  void append_to(std::string& out) const;
  std::vector<PlanarTree> children_;
};

using TreePoly = Poly<PlanarTree>;

/// Common root over the forest; bplus({}) is the single node.
PlanarTree bplus(std::vector<PlanarTree> forest);

/// s ⋉ t: s becomes the first subtree of t's root.
PlanarTree left_butcher(const PlanarTree& s, const PlanarTree& t);

/// s ↷ t: sum over the leaves of t of the tree with s attached below that
/// leaf. The single node is its own leaf.
TreePoly leaf_graft(const PlanarTree& s, const PlanarTree& t);

/// B_0 = •, B_1 = • ⋉ •, and B_n = • ⋉ B_{n-1} + • ↷ B_{n-1} for n >= 2.
/// In nonplanar mode every tree is normalized and like terms merge.
TreePoly tree_bell(int n, bool planar = true);

/// d_i -> ladder with i edges; d_i w -> ladder_{i-1} ⋉ word_to_tree(w).
PlanarTree word_to_tree(const Word& w);

/// Termwise image of a noncommutative polynomial without constant term.
TreePoly words_to_trees(const NCPoly& p);

TreePoly normalize(const TreePoly& p);

/// "aababb + 2*aaabbb"; largest tree first.
std::string to_string(const TreePoly& p);

/// Indented picture of the tree, one node per line.
std::string ascii_art(const PlanarTree& t);

}  // namespace bellhopf
