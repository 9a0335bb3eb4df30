#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <thread>

#include "operm/algebra.hpp"
#include "operm/lie.hpp"

using namespace operm;

namespace {

template <class Index>
Combo<Index> random_combo(const std::vector<Index>& labels, Basis basis,
                          std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
  Combo<Index> out(basis);
  for (int k = 0; k < 5; ++k) out.add_term(labels[pick(rng)], coeff(rng));
  return out;
}

}  // namespace

TEST_CASE("monomial expansion in the group basis") {
  PermCombo got = to_f_basis(PermCombo::term(Basis::M, Permutation({4, 1, 2, 3})));
  PermCombo want(Basis::F);
  want.add_term(Permutation({4, 1, 2, 3}), 1);
  want.add_term(Permutation({4, 1, 3, 2}), -1);
  want.add_term(Permutation({4, 2, 1, 3}), -1);
  want.add_term(Permutation({4, 3, 2, 1}), 1);
  CHECK(got == want);
}

TEST_CASE("monomial expansion for subsets") {
  SubsetCombo got = to_f_basis(SubsetCombo::term(Basis::M, SubsetLabel(4, {1})));
  SubsetCombo want(Basis::F);
  want.add_term(SubsetLabel(4, {1}), 1);
  want.add_term(SubsetLabel(4, {1, 2}), -1);
  want.add_term(SubsetLabel(4, {1, 3}), -1);
  want.add_term(SubsetLabel(4, {1, 2, 3}), 1);
  CHECK(got == want);
}

TEST_CASE("basis changes are mutually inverse") {
  std::mt19937 rng(987123);
  for (int n = 1; n <= 6; ++n) {
    auto perms = all_permutations(n);
    auto subs = all_subsets(n);
    auto trees = all_trees(n);
    for (int trial = 0; trial < 4; ++trial) {
      auto xs = random_combo(perms, Basis::F, rng);
      CHECK(to_f_basis(to_m_basis(xs)) == xs);
      auto ms = random_combo(perms, Basis::M, rng);
      CHECK(to_m_basis(to_f_basis(ms)) == ms);
      auto xq = random_combo(subs, Basis::F, rng);
      CHECK(to_f_basis(to_m_basis(xq)) == xq);
      auto xy = random_combo(trees, Basis::M, rng);
      CHECK(to_m_basis(to_f_basis(xy)) == xy);
    }
  }
}

namespace {

template <class Index>
void check_unitriangular(int n) {
  const auto& poset = FamilyTraits<Index>::poset(n);
  for (int x = 0; x < poset.size(); ++x) {
    const auto& base = poset.label(x);
    Combo<Index> f = to_f_basis(Combo<Index>::term(Basis::M, base));
    CHECK(f.coefficient_of(base) == 1);
    for (const auto& [other, c] : f.terms()) CHECK(poset.leq_label(base, other));
    Combo<Index> m = to_m_basis(Combo<Index>::term(Basis::F, base));
    CHECK(m.coefficient_of(base) == 1);
    for (const auto& [other, c] : m.terms()) CHECK(poset.leq_label(base, other));
  }
}

}  // namespace

TEST_CASE("basis change is unitriangular") {
  for (int n = 1; n <= 5; ++n) {
    check_unitriangular<Permutation>(n);
    check_unitriangular<SubsetLabel>(n);
    check_unitriangular<Tree>(n);
  }
}

TEST_CASE("convolution") {
  PermCombo fid = PermCombo::term(Basis::F, Permutation::identity(3));
  PermCombo x = PermCombo::term(Basis::F, Permutation({3, 1, 2}));
  CHECK(convolve(x, fid) == x);
  CHECK(convolve(fid, x) == x);

  CHECK(convolve(PermCombo::term(Basis::F, Permutation({2, 1})),
                 PermCombo::term(Basis::F, Permutation({2, 1}))) ==
        PermCombo::term(Basis::F, Permutation({1, 2})));

  PermCombo theta2(Basis::F);
  theta2.add_term(Permutation({1, 2}), 1);
  theta2.add_term(Permutation({2, 1}), -1);
  CHECK(convolve(theta2, theta2) == Int(2) * theta2);

  CHECK_THROWS_AS(convolve(x, PermCombo::term(Basis::F, Permutation({1, 2}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(convolve(x, to_m_basis(x)), std::invalid_argument);
}

TEST_CASE("convolution is associative") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    for (int trial = 0; trial < 3; ++trial) {
      auto a = random_combo(perms, Basis::F, rng);
      auto b = random_combo(perms, Basis::F, rng);
      auto c = random_combo(perms, Basis::F, rng);
      CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    }
  }
}

TEST_CASE("linear plumbing") {
  PermCombo x = PermCombo::term(Basis::F, Permutation({2, 1, 3}));
  CHECK(add(x, PermCombo(Basis::F)) == x);
  CHECK(scale(1, x) == x);
  CHECK(coefficient_of(x, Permutation({2, 1, 3})) == 1);
  CHECK(coefficient_of(x, Permutation({1, 2, 3})) == 0);
  PermCombo zero = x - x;
  CHECK(zero.is_zero());
  CHECK(zero.support_size() == 0);
}

TEST_CASE("json round trips and is byte stable") {
  PermCombo x(Basis::M);
  x.add_term(Permutation({1, 3, 2}), 2);
  x.add_term(Permutation({3, 1, 2}), -1);
  std::string dumped = combo_to_json_string(x);
  CHECK(dumped == combo_to_json_string(x));
  CHECK(perm_combo_from_json(nlohmann::json::parse(dumped)) == x);

  SubsetCombo q = SubsetCombo::term(Basis::F, SubsetLabel(4, {1, 3}), -7);
  CHECK(subset_combo_from_json(nlohmann::json::parse(combo_to_json_string(q))) ==
        q);

  TreeCombo y = TreeCombo::term(Basis::M, parse_tree("((o o) (o o))"), 3);
  CHECK(tree_combo_from_json(nlohmann::json::parse(combo_to_json_string(y))) == y);

  CHECK_THROWS(perm_combo_from_json(
      nlohmann::json::parse(R"({"family":"Q","basis":"F","degree":2,"terms":[]})")));

  // coefficients beyond 64 bits travel as strings
  Int huge = Int(1) << 90;
  PermCombo big = PermCombo::term(Basis::F, Permutation({2, 1}), huge);
  std::string text = combo_to_json_string(big);
  CHECK(text.find("\"1237940039285380274899124224\"") != std::string::npos);
  CHECK(perm_combo_from_json(nlohmann::json::parse(text)) == big);
}

TEST_CASE("shared order caches serve concurrent readers") {
  PermCombo probe = PermCombo::term(Basis::M, Permutation({3, 1, 4, 2, 5}));
  PermCombo expected = to_f_basis(probe);
  std::vector<std::thread> pool;
  std::vector<PermCombo> results(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      PermCombo local = probe;
      for (int round = 0; round < 20; ++round) local = to_m_basis(to_f_basis(local));
      results[t] = to_f_basis(local);
    });
  for (auto& th : pool) th.join();
  for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("mixed degrees are rejected") {
  PermCombo bad(Basis::F);
  bad.add_term(Permutation({1, 2}), 1);
  bad.add_term(Permutation({1, 2, 3}), 1);
  CHECK_THROWS_AS(bad.degree(), std::invalid_argument);
  CHECK_FALSE(bad.is_homogeneous());
  CHECK_THROWS_AS(to_m_basis(bad), std::invalid_argument);
}
