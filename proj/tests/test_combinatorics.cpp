#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "operm/permutation.hpp"
#include "operm/subset.hpp"
#include "operm/tree.hpp"
#include "operm/word.hpp"

using namespace operm;

TEST_CASE("standardize") {
  CHECK(standardize({5, 11, 2, 4}) == Permutation({3, 4, 1, 2}));
  CHECK(standardize({1, 2, 3, 4, 5}) == Permutation({1, 2, 3, 4, 5}));
  CHECK(standardize({7, 9, 8, 6}) == Permutation({2, 4, 3, 1}));
  CHECK_THROWS_AS(standardize({3, 3, 1}), std::invalid_argument);
}

TEST_CASE("sequence reconstructible from set and standardization") {
  std::mt19937 rng(20061017);
  std::uniform_int_distribution<int> value(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<int> chosen;
    int len = 1 + trial % 9;
    while (static_cast<int>(chosen.size()) < len) chosen.insert(value(rng));
    std::vector<int> seq(chosen.begin(), chosen.end());
    std::shuffle(seq.begin(), seq.end(), rng);

    std::vector<int> sorted(seq);
    std::sort(sorted.begin(), sorted.end());
    auto st = standardize(seq);
    std::vector<int> rebuilt(seq.size());
    for (size_t p = 0; p < seq.size(); ++p) rebuilt[p] = sorted[st(p + 1) - 1];
    CHECK(rebuilt == seq);
  }
}

TEST_CASE("inversion sets") {
  using Pairs = std::set<std::pair<int, int>>;
  CHECK(inversion_set(Permutation({1, 2, 3})).pairs().empty());
  CHECK(inversion_set(Permutation({2, 1})) == InversionSet(Pairs{{1, 2}}));
  CHECK(inversion_set(Permutation({1, 3, 2, 4})) == InversionSet(Pairs{{2, 3}}));
}

TEST_CASE("inversion sets determine the permutation") {
  for (int n = 1; n <= 7; ++n) {
    std::set<InversionSet> seen;
    for (const auto& sigma : all_permutations(n))
      CHECK(seen.insert(inversion_set(sigma)).second);
  }
}

TEST_CASE("group product") {
  Permutation a({3, 1, 4, 2});
  CHECK(group_product(a, Permutation::identity(4)) == a);
  CHECK(group_product(Permutation::identity(4), a) == a);
  CHECK(group_product(Permutation({2, 1}), Permutation({2, 1})) ==
        Permutation({1, 2}));
  CHECK_THROWS_AS(group_product(a, Permutation({1, 2})), std::invalid_argument);
}

TEST_CASE("product convention: Z acting on over gives under") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; n + m <= 5; ++m)
      for (const auto& sigma : all_permutations(n))
        for (const auto& tau : all_permutations(m))
          CHECK(group_product(z_max(n, m), over(sigma, tau)) == under(sigma, tau));
}

TEST_CASE("descents") {
  CHECK(descents(Permutation({1, 2, 3})) == SubsetLabel(3, {}));
  CHECK(descents(Permutation({2, 4, 5, 3, 1, 6})) == SubsetLabel(6, {3, 4}));
  CHECK(descents(Permutation({4, 3, 2, 1})) == SubsetLabel(4, {1, 2, 3}));
}

TEST_CASE("global descents") {
  CHECK(global_descents(Permutation::identity(5)) == SubsetLabel(5, {}));
  CHECK(global_descents(Permutation({4, 3, 2, 1})) == SubsetLabel(4, {1, 2, 3}));
  CHECK(global_descents(Permutation({2, 3, 1, 4})) == SubsetLabel(4, {}));
}

TEST_CASE("global descents are descents") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& sigma : all_permutations(n)) {
      auto des = descents(sigma);
      auto gdes = global_descents(sigma);
      for (int p : gdes.members) CHECK(des.contains(p));
    }
}

TEST_CASE("predicates") {
  CHECK(is_closed(Permutation({2, 3, 4, 1})));
  CHECK_FALSE(is_closed(Permutation({2, 1, 3})));
  CHECK_FALSE(is_132_avoiding(Permutation({1, 3, 2})));
  CHECK(is_132_avoiding(Permutation({2, 1, 3})));
  CHECK_FALSE(is_eventual_identity(Permutation({1, 3, 2})));
  CHECK(is_eventual_identity(Permutation({3, 1, 2})));
  CHECK(is_eventual_identity(Permutation({2, 3, 1})));
}

TEST_CASE("over and under") {
  CHECK(over(Permutation({1}), Permutation({1})) == Permutation({1, 2}));
  CHECK(under(Permutation({1}), Permutation({1})) == Permutation({2, 1}));
  CHECK(over(Permutation({2, 1}), Permutation({1, 2})) ==
        Permutation({2, 1, 3, 4}));
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (const auto& s : all_permutations(n))
        for (const auto& t : all_permutations(m)) {
          CHECK(over(s, t).degree() == n + m);
          CHECK(under(s, t).degree() == n + m);
        }
}

TEST_CASE("shuffles") {
  auto sh11 = shuffles(1, 1);
  CHECK(sh11 == std::vector<Permutation>{Permutation({1, 2}), Permutation({2, 1})});
  CHECK(shuffles(2, 2).size() == 6);
  CHECK(z_max(2, 1) == Permutation({2, 3, 1}));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; n + m <= 6; ++m)
      for (const auto& zeta : shuffles(n, m)) {
        for (int p = 1; p < n; ++p) CHECK(zeta(p) < zeta(p + 1));
        for (int p = n + 1; p < n + m; ++p) CHECK(zeta(p) < zeta(p + 1));
      }
}

TEST_CASE("lambda tree") {
  CHECK(lambda_tree(Permutation({1})) == parse_tree("(o o)"));
  CHECK(lambda_tree(Permutation({2, 1, 3})) == parse_tree("((o (o o)) o)"));
  // identity maps to the comb whose right subtrees are all leaves
  Tree t = lambda_tree(Permutation::identity(5));
  while (!t.is_leaf()) {
    CHECK(t.right().is_leaf());
    t = t.left();
  }
}

TEST_CASE("leaf label set") {
  CHECK(leaf_label_set(lambda_tree(Permutation::identity(4))) ==
        SubsetLabel(4, {}));
  CHECK(leaf_label_set(lambda_tree(Permutation({2, 1}))) == SubsetLabel(2, {1}));
  CHECK(leaf_label_set(parse_tree("(o o)")) == SubsetLabel(1, {}));
  CHECK_THROWS_AS(leaf_label_set(Tree::leaf()), std::invalid_argument);
}

TEST_CASE("descents factor through trees") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& sigma : all_permutations(n))
      CHECK(leaf_label_set(lambda_tree(sigma)) == descents(sigma));
}

TEST_CASE("grafting and tree over/under") {
  Tree y = parse_tree("(o o)");
  CHECK(graft(Tree::leaf(), Tree::leaf()) == y);
  for (int d = 0; d <= 4; ++d)
    for (const auto& t : all_trees(d)) {
      CHECK(under_tree(Tree::leaf(), t) == t);
      CHECK(over_tree(t, Tree::leaf()) == t);
    }
  for (int ds = 0; ds <= 2; ++ds)
    for (int dt = 0; ds + dt <= 4; ++dt)
      for (const auto& s : all_trees(ds))
        for (const auto& t : all_trees(dt)) {
          CHECK(graft(s, t).degree() == ds + dt + 1);
          CHECK(over_tree(s, t).degree() == ds + dt);
          CHECK(under_tree(s, t).degree() == ds + dt);
          CHECK(under_tree(over_tree(s, y), t) == over_tree(s, under_tree(y, t)));
        }
}

TEST_CASE("tree parse and print round trip") {
  for (int d = 0; d <= 5; ++d)
    for (const auto& t : all_trees(d)) CHECK(parse_tree(t.to_string()) == t);
  CHECK_THROWS_AS(parse_tree("(o"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree("(o o) x"), std::invalid_argument);
}

TEST_CASE("word action") {
  Word w123({1, 2, 3});
  CHECK(act_on_word(PermCombo::term(Basis::F, Permutation::identity(3)), w123) ==
        WordCombo::term(w123));
  CHECK(act_on_word(PermCombo::term(Basis::F, Permutation({2, 1})), Word({1, 2})) ==
        WordCombo::term(Word({2, 1})));
  PermCombo x(Basis::F);
  x.add_term(Permutation({1, 2}), 1);
  x.add_term(Permutation({2, 1}), -1);
  WordCombo want = WordCombo::term(Word({1, 2})) - WordCombo::term(Word({2, 1}));
  CHECK(act_on_word(x, Word({1, 2})) == want);
  CHECK_THROWS_AS(act_on_word(x, w123), std::invalid_argument);
}

TEST_CASE("subset and composition and sign-string indexings agree") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : all_subsets(n)) {
      CHECK(subset_of(composition_of(s)) == s);
      CHECK(subset_of(binary_string_of(s)) == s);
    }
  CHECK(composition_of(SubsetLabel(4, {2, 3})) == Composition({2, 1, 1}));
  CHECK(compose_composition(Composition({2, 1}), Composition({1, 1}), 2) ==
        Composition({2, 1, 1}));
  CHECK(compose_composition(Composition({2, 1}), Composition({3}), 1) ==
        Composition({4, 1}));
  CHECK(insert_binary(BinaryString("+-"), BinaryString("+"), 2) ==
        BinaryString("++-"));
}
