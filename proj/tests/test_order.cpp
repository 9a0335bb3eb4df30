#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "operm/operads.hpp"
#include "operm/poset.hpp"

using namespace operm;

TEST_CASE("weak order comparisons") {
  CHECK(weak_leq(Permutation({2, 3, 1}), Permutation({2, 3, 1})));
  CHECK(weak_leq(Permutation({1, 3, 2, 4}), Permutation({3, 4, 1, 2})));
  CHECK_FALSE(weak_leq(Permutation({2, 1}), Permutation({1, 2})));
  CHECK_THROWS_AS(weak_leq(Permutation({2, 1}), Permutation({1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("boolean order") {
  for (const auto& s : all_subsets(4)) CHECK(boolean_leq(SubsetLabel(4, {}), s));
  CHECK_FALSE(boolean_leq(SubsetLabel(4, {2}), SubsetLabel(4, {1, 3})));
}

TEST_CASE("tamari order") {
  for (int n = 1; n <= 5; ++n) {
    Tree bottom = lambda_tree(Permutation::identity(n));
    for (const auto& t : all_trees(n)) CHECK(tamari_leq(bottom, t));
  }
  // the embedding gamma is an order isomorphism onto its image
  for (const auto& s : all_trees(4))
    for (const auto& t : all_trees(4))
      CHECK(tamari_leq(s, t) == weak_leq(gamma_max(s), gamma_max(t)));
}

namespace {

template <class T>
void check_poset_axioms(const Poset<T>& p) {
  for (int x = 0; x < p.size(); ++x) CHECK(p.leq(x, x));
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x != y && p.leq(x, y)) CHECK_FALSE(p.leq(y, x));
      if (!p.leq(x, y)) continue;
      for (int z = 0; z < p.size(); ++z)
        if (p.leq(y, z)) CHECK(p.leq(x, z));
    }
}

template <class T>
void check_mobius_recursion(const Poset<T>& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      int total = 0;
      for (int z : p.interval(x, y)) total += p.mobius(x, z);
      CHECK(total == (x == y ? 1 : 0));
    }
}

// covers straight from the definition: y > x with nothing strictly between
template <class T>
std::vector<std::pair<int, int>> covers_by_definition(const Poset<T>& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < p.size() && cover; ++z)
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace

TEST_CASE("poset axioms hold for all three families") {
  for (int n = 1; n <= 4; ++n) check_poset_axioms(weak_order(n));
  check_poset_axioms(weak_order(5));
  for (int n = 1; n <= 5; ++n) check_poset_axioms(boolean_order(n));
  for (int n = 1; n <= 5; ++n) check_poset_axioms(tamari_order(n));
}

TEST_CASE("mobius values of the weak order") {
  const auto& p = weak_order(4);
  Permutation base({4, 1, 2, 3});
  CHECK(p.mobius_label(base, base) == 1);
  CHECK(p.mobius_label(base, Permutation({4, 1, 3, 2})) == -1);
  CHECK(p.mobius_label(base, Permutation({4, 2, 1, 3})) == -1);
  CHECK(p.mobius_label(base, Permutation({4, 2, 3, 1})) == 0);
  CHECK(p.mobius_label(base, Permutation({4, 3, 1, 2})) == 0);
  CHECK(p.mobius_label(base, Permutation({4, 3, 2, 1})) == 1);
  CHECK_THROWS_AS(p.mobius_label(Permutation({1, 3, 2, 4}), base),
                  std::invalid_argument);
}

TEST_CASE("mobius recursion re-summation") {
  check_mobius_recursion(weak_order(4));
  check_mobius_recursion(boolean_order(5));
  check_mobius_recursion(tamari_order(4));
}

TEST_CASE("weak-order mobius values lie in {-1,0,1}") {
  for (int n = 1; n <= 5; ++n) {
    const auto& p = weak_order(n);
    for (int x = 0; x < p.size(); ++x) {
      auto row = p.mobius_row(x);
      for (int y = 0; y < p.size(); ++y) {
        CHECK((*row)[y] >= -1);
        CHECK((*row)[y] <= 1);
      }
    }
  }
}

TEST_CASE("boolean mobius is the alternating sign") {
  for (int n = 1; n <= 6; ++n) {
    const auto& p = boolean_order(n);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y)) continue;
        int diff = p.label(y).size() - p.label(x).size();
        CHECK(p.mobius(x, y) == (diff % 2 == 0 ? 1 : -1));
      }
  }
}

TEST_CASE("intervals") {
  const auto& p = weak_order(4);
  int bottom = p.index_of(Permutation({1, 3, 2, 4}));
  int top = p.index_of(Permutation({3, 4, 1, 2}));
  auto ival = p.interval(bottom, top);
  std::vector<Permutation> labels;
  for (int z : ival) labels.push_back(p.label(z));
  CHECK(labels == std::vector<Permutation>{
                      Permutation({1, 3, 2, 4}), Permutation({1, 4, 2, 3}),
                      Permutation({2, 3, 1, 4}), Permutation({2, 4, 1, 3}),
                      Permutation({3, 4, 1, 2})});
  CHECK(p.interval(bottom, bottom) == std::vector<int>{bottom});
  int all_top = p.index_of(Permutation({4, 3, 2, 1}));
  CHECK(p.up_set(all_top) == std::vector<int>{all_top});
  CHECK_THROWS_AS(p.interval(top, bottom), std::invalid_argument);
}

TEST_CASE("hasse covers") {
  CHECK(weak_order(3).covers().size() == 6);   // hexagon
  CHECK(boolean_order(2).covers().size() == 1);
  CHECK(tamari_order(3).size() == 5);          // pentagon
  CHECK(tamari_order(3).covers().size() == 5);
}

TEST_CASE("covers match the definition") {
  for (int n = 2; n <= 5; ++n) {
    auto structural = weak_order(n).covers();
    std::sort(structural.begin(), structural.end());
    CHECK(structural == covers_by_definition(weak_order(n)));
  }
  for (int n = 2; n <= 5; ++n) {
    auto structural = tamari_order(n).covers();
    std::sort(structural.begin(), structural.end());
    CHECK(structural == covers_by_definition(tamari_order(n)));
  }
  for (int n = 2; n <= 5; ++n) {
    auto structural = boolean_order(n).covers();
    std::sort(structural.begin(), structural.end());
    CHECK(structural == covers_by_definition(boolean_order(n)));
  }
}

TEST_CASE("weak covers swap consecutive values and add one inversion") {
  for (int n = 2; n <= 6; ++n) {
    const auto& p = weak_order(n);
    for (auto [x, y] : p.covers()) {
      const auto& a = p.label(x).values();
      const auto& b = p.label(y).values();
      CHECK(inversion_set(p.label(y)).size() ==
            inversion_set(p.label(x)).size() + 1);
      std::vector<int> diff;
      for (size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) diff.push_back(static_cast<int>(k));
      REQUIRE(diff.size() == 2);
      CHECK(a[diff[0]] == b[diff[1]]);
      CHECK(a[diff[1]] == b[diff[0]]);
      CHECK(std::abs(a[diff[0]] - a[diff[1]]) == 1);  // consecutive values
    }
  }
}

TEST_CASE("shuffles form the interval below Z") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; n + m <= 6; ++m) {
      const auto& p = weak_order(n + m);
      int lo = p.index_of(Permutation::identity(n + m));
      int hi = p.index_of(z_max(n, m));
      std::vector<Permutation> ival;
      for (int z : p.interval(lo, hi)) ival.push_back(p.label(z));
      CHECK(ival == shuffles(n, m));
    }
}

TEST_CASE("descent maps are order-preserving") {
  for (int n = 1; n <= 6; ++n) {
    const auto& p = weak_order(n);
    std::vector<SubsetLabel> des, gdes;
    std::vector<Tree> lam;
    const auto& tam = tamari_order(n);
    for (int x = 0; x < p.size(); ++x) {
      des.push_back(descents(p.label(x)));
      gdes.push_back(global_descents(p.label(x)));
      lam.push_back(lambda_tree(p.label(x)));
    }
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y)) continue;
        CHECK(boolean_leq(des[x], des[y]));
        CHECK(boolean_leq(gdes[x], gdes[y]));
        CHECK(tam.leq_label(lam[x], lam[y]));
      }
  }
}

TEST_CASE("mobius cache round trip") {
  auto first = make_weak_poset(4);
  Permutation base({4, 1, 2, 3});
  int x = first.index_of(base);
  first.mobius_row(x);
  std::stringstream buffer;
  first.save_mobius(buffer);

  auto second = make_weak_poset(4);
  CHECK(second.load_mobius(buffer));
  CHECK(second.mobius_label(base, Permutation({4, 3, 2, 1})) == 1);
  check_mobius_recursion(second);

  std::stringstream garbage("999\n");
  auto third = make_weak_poset(4);
  CHECK_FALSE(third.load_mobius(garbage));
}
