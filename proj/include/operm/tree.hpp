#pragma once

#include <memory>
#include <string>
#include <vector>

#include "operm/permutation.hpp"
#include "operm/subset.hpp"

namespace operm {

namespace detail {
struct TreeNode;
}

/// Rooted planar binary tree with structural sharing; degree = internal nodes.
/// The single leaf (degree 0) is the recursion base 1_0.
class Tree {
 public:
  Tree() = default;  // leaf
  static Tree leaf();
  static Tree node(const Tree& left, const Tree& right);

  bool is_leaf() const { return node_ == nullptr; }
  int degree() const;
  const Tree& left() const;
  const Tree& right() const;

  bool operator==(const Tree& o) const;
  bool operator!=(const Tree& o) const { return !(*this == o); }
  /// Total order: leaf < node, then (left, right) lexicographically.
  bool operator<(const Tree& o) const;

  std::string to_string() const;  // "o" or "(L R)"

 private:
  std::shared_ptr<const detail::TreeNode> node_;
};

namespace detail {
struct TreeNode {
  Tree left, right;
  int degree;
};
}  // namespace detail

Tree parse_tree(const std::string& text);

/// New root with s on the left and t on the right (s v t).
Tree graft(const Tree& s, const Tree& t);
/// s/t: glue the root of s to the leftmost branch of t.
Tree over_tree(const Tree& s, const Tree& t);
/// s\t: glue the root of t to the rightmost branch of s.
Tree under_tree(const Tree& s, const Tree& t);

/// Recursive split of a permutation at its maximum value.
Tree lambda_tree(const Permutation& sigma);

/// Labels of the interior leaves (numbered 1..n-1, left to right) that are
/// left children. Satisfies leaf_label_set(lambda_tree(sigma)) = descents(sigma).
SubsetLabel leaf_label_set(const Tree& t);

/// Slot insertion on trees, recursing on s = s_l v s_r with j = |s_l|+1.
Tree insert_tree(const Tree& s, const Tree& t, int i);

/// All of Y_n in the canonical tree order (ascending).
std::vector<Tree> all_trees(int n);

}  // namespace operm
