#include "operm/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace operm {

Tree Tree::leaf() { return Tree(); }

Tree Tree::node(const Tree& left, const Tree& right) {
  Tree t;
  t.node_ = std::make_shared<const detail::TreeNode>(
      detail::TreeNode{left, right, left.degree() + right.degree() + 1});
  return t;
}

int Tree::degree() const { return node_ ? node_->degree : 0; }

const Tree& Tree::left() const {
  if (!node_) throw std::invalid_argument("tree: leaf has no subtrees");
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) throw std::invalid_argument("tree: leaf has no subtrees");
  return node_->right;
}

bool Tree::operator==(const Tree& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  return node_->left == o.node_->left && node_->right == o.node_->right;
}

bool Tree::operator<(const Tree& o) const {
  if (node_ == o.node_) return false;
  if (!node_) return o.node_ != nullptr;  // leaf < node
  if (!o.node_) return false;
  if (node_->left != o.node_->left) return node_->left < o.node_->left;
  return node_->right < o.node_->right;
}

std::string Tree::to_string() const {
  if (is_leaf()) return "o";
  return "(" + left().to_string() + " " + right().to_string() + ")";
}

namespace {

Tree parse_tree_at(const std::string& s, size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size()) throw std::invalid_argument("tree parse: unexpected end");
  if (s[pos] == 'o') {
    ++pos;
    return Tree::leaf();
  }
  if (s[pos] != '(') throw std::invalid_argument("tree parse: expected 'o' or '('");
  ++pos;
  Tree l = parse_tree_at(s, pos);
  Tree r = parse_tree_at(s, pos);
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || s[pos] != ')')
    throw std::invalid_argument("tree parse: expected ')'");
  ++pos;
  return Tree::node(l, r);
}

}  // namespace

Tree parse_tree(const std::string& text) {
  size_t pos = 0;
  Tree t = parse_tree_at(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size())
    throw std::invalid_argument("tree parse: trailing characters");
  return t;
}

Tree graft(const Tree& s, const Tree& t) { return Tree::node(s, t); }

Tree over_tree(const Tree& s, const Tree& t) {
  if (t.is_leaf()) return s;
  return Tree::node(over_tree(s, t.left()), t.right());
}

Tree under_tree(const Tree& s, const Tree& t) {
  if (s.is_leaf()) return t;
  return Tree::node(s.left(), under_tree(s.right(), t));
}

namespace {

Tree lambda_of_seq(const std::vector<int>& seq, int lo, int hi) {
  // split at the maximum; [lo, hi) half-open on positions
  if (lo >= hi) return Tree::leaf();
  int jmax = lo;
  for (int j = lo + 1; j < hi; ++j)
    if (seq[j] > seq[jmax]) jmax = j;
  return Tree::node(lambda_of_seq(seq, lo, jmax), lambda_of_seq(seq, jmax + 1, hi));
}

}  // namespace

Tree lambda_tree(const Permutation& sigma) {
  return lambda_of_seq(sigma.values(), 0, sigma.degree());
}

namespace {

void collect_leaf_sides(const Tree& t, bool from_left, std::vector<bool>& sides) {
  if (t.is_leaf()) {
    sides.push_back(from_left);
    return;
  }
  collect_leaf_sides(t.left(), true, sides);
  collect_leaf_sides(t.right(), false, sides);
}

}  // namespace

SubsetLabel leaf_label_set(const Tree& t) {
  const int n = t.degree();
  if (n < 1) throw std::invalid_argument("leaf_label_set: degree must be >= 1");
  std::vector<bool> sides;
  collect_leaf_sides(t, true, sides);
  std::vector<int> members;
  for (int k = 1; k <= n - 1; ++k)
    if (sides[k]) members.push_back(k);  // interior leaf k points left
  return SubsetLabel(n, std::move(members));
}

Tree insert_tree(const Tree& s, const Tree& t, int i) {
  const int n = s.degree(), m = t.degree();
  if (m < 1) throw std::invalid_argument("insert_tree: degree-0 argument");
  if (i < 1 || i > n) throw std::invalid_argument("insert_tree: slot out of range");
  const Tree& sl = s.left();
  const Tree& sr = s.right();
  const int j = sl.degree() + 1;
  if (j < i) return Tree::node(sl, insert_tree(sr, t, i - j));
  if (j > i) return Tree::node(insert_tree(sl, t, i), sr);
  return Tree::node(over_tree(sl, t.left()), under_tree(t.right(), sr));
}

std::vector<Tree> all_trees(int n) {
  static std::map<int, std::vector<Tree>> memo;
  static std::mutex memo_mutex;
  if (n < 0) throw std::invalid_argument("all_trees: negative degree");
  std::lock_guard<std::mutex> lk(memo_mutex);
  for (int d = 0; d <= n; ++d) {
    if (memo.count(d)) continue;
    std::vector<Tree> out;
    if (d == 0) {
      out.push_back(Tree::leaf());
    } else {
      for (int ld = 0; ld <= d - 1; ++ld)
        for (const auto& l : memo.at(ld))
          for (const auto& r : memo.at(d - 1 - ld)) out.push_back(Tree::node(l, r));
      std::sort(out.begin(), out.end());
    }
    memo.emplace(d, std::move(out));
  }
  return memo.at(n);
}

}  // namespace operm
