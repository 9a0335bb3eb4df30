#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "operm/hopf.hpp"
#include "operm/linalg.hpp"

using namespace operm;

namespace {

PermCombo fterm(const Permutation& p) { return PermCombo::term(Basis::F, p); }
PermCombo mterm(const Permutation& p) { return PermCombo::term(Basis::M, p); }

TensorCombo tensor2(const Permutation& a, const Permutation& b, Int c = 1) {
  TensorCombo out(2);
  out.add_term({a, b}, c);
  return out;
}

// (id (x) Delta) applied to an arity-2 tensor combo
TensorCombo coproduct_on_second(const TensorCombo& t) {
  TensorCombo out(3);
  for (const auto& [tensor, c] : t.terms()) {
    TensorCombo inner = coproduct(fterm(tensor[1]));
    for (const auto& [pair, d] : inner.terms())
      out.add_term({tensor[0], pair[0], pair[1]}, c * d);
  }
  return out;
}

// product on H (x) H: (a (x) b)(c (x) d) = ac (x) bd
TensorCombo tensor_product(const TensorCombo& x, const TensorCombo& y) {
  TensorCombo out(2);
  for (const auto& [t1, c1] : x.terms())
    for (const auto& [t2, c2] : y.terms()) {
      PermCombo left = mr_product(fterm(t1[0]), fterm(t2[0]));
      PermCombo right = mr_product(fterm(t1[1]), fterm(t2[1]));
      for (const auto& [a, ca] : left.terms())
        for (const auto& [b, cb] : right.terms())
          out.add_term({a, b}, c1 * c2 * ca * cb);
    }
  return out;
}

}  // namespace

TEST_CASE("coproduct") {
  CHECK(coproduct(fterm(Permutation({1}))).is_zero());
  CHECK(coproduct(fterm(Permutation({2, 1}))) ==
        tensor2(Permutation({1}), Permutation({1})));
  CHECK(coproduct(mterm(Permutation({1, 2}))).is_zero());
  TensorCombo d312 = coproduct(fterm(Permutation({3, 1, 2})));
  TensorCombo want(2);
  want.add_term({Permutation({1}), Permutation({1, 2})}, 1);
  want.add_term({Permutation({2, 1}), Permutation({1})}, 1);
  CHECK(d312 == want);
}

TEST_CASE("coassociativity") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& sigma : all_permutations(n)) {
      TensorCombo left = iterated_coproduct(fterm(sigma), 2);
      TensorCombo right = coproduct_on_second(coproduct(fterm(sigma)));
      CHECK(left == right);
    }
}

TEST_CASE("filtration degree") {
  CHECK(filtration_degree(mterm(Permutation({1, 2}))) == 1);
  CHECK(filtration_degree(fterm(Permutation({2, 1}))) == 2);
  CHECK(filtration_degree(mterm(Permutation({4, 3, 2, 1}))) == 4);
  for (int n = 1; n <= 4; ++n)
    for (const auto& sigma : all_permutations(n))
      CHECK(filtration_degree(mterm(sigma)) ==
            1 + global_descents(sigma).size());
}

TEST_CASE("coproduct of a composition") {
  CHECK(verify_coproduct_composition(Permutation({1}), Permutation({1}), 1));
  CHECK(verify_coproduct_composition(Permutation({2, 1}), Permutation({1, 2}), 1));
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; n + m - 1 <= 5; ++m)
      for (const auto& sigma : all_permutations(n))
        for (const auto& tau : all_permutations(m))
          for (int i = 1; i <= n; ++i)
            CHECK(verify_coproduct_composition(sigma, tau, i));
}

TEST_CASE("predicted global descents of the fiber top") {
  CHECK(predicted_gdes_of_t(Permutation::identity(3), Permutation::identity(2), 2) ==
        SubsetLabel(4, {}));
  CHECK(predicted_gdes_of_t(Permutation({1, 2}), Permutation({2, 1}), 2) ==
        SubsetLabel(3, {2}));
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; n + m - 1 <= 5; ++m)
      for (const auto& sigma : all_permutations(n))
        for (const auto& tau : all_permutations(m))
          for (int i = 1; i <= n; ++i)
            CHECK(predicted_gdes_of_t(sigma, tau, i) ==
                  global_descents(top_t(sigma, tau, i)));
}

TEST_CASE("product") {
  PermCombo got = mr_product(fterm(Permutation({1})), fterm(Permutation({1})));
  PermCombo want(Basis::F);
  want.add_term(Permutation({1, 2}), 1);
  want.add_term(Permutation({2, 1}), 1);
  CHECK(got == want);

  CHECK(commutator(fterm(Permutation({1})), fterm(Permutation({1}))).is_zero());

  // the twisted bracket is a different operation
  PermCombo twisted(Basis::F);
  twisted.add_term(Permutation({1, 2}), 1);
  twisted.add_term(Permutation({2, 1}), -1);
  PermCombo over_minus_under = fterm(over(Permutation({1}), Permutation({1}))) -
                               fterm(under(Permutation({1}), Permutation({1})));
  CHECK(over_minus_under == twisted);
}

TEST_CASE("product is compatible with the coproduct") {
  // Delta(xy) = x(x)y + y(x)x + sum y1 (x) x y2 + sum x y1 (x) y2
  //           + sum x1 (x) x2 y + sum x1 y (x) x2 + Delta(x) Delta(y)
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; n + m <= 4; ++m)
      for (const auto& sigma : all_permutations(n))
        for (const auto& tau : all_permutations(m)) {
          PermCombo x = fterm(sigma), y = fterm(tau);
          TensorCombo lhs = coproduct(mr_product(x, y));
          TensorCombo rhs(2);
          rhs += tensor2(sigma, tau);
          rhs += tensor2(tau, sigma);
          TensorCombo dy = coproduct(y);
          for (const auto& [t, c] : dy.terms()) {
            PermCombo right = mr_product(x, fterm(t[1]));
            for (const auto& [p, d] : right.terms())
              rhs.add_term({t[0], p}, c * d);
            PermCombo left = mr_product(x, fterm(t[0]));
            for (const auto& [p, d] : left.terms())
              rhs.add_term({p, t[1]}, c * d);
          }
          TensorCombo dx = coproduct(x);
          for (const auto& [t, c] : dx.terms()) {
            PermCombo right = mr_product(fterm(t[1]), y);
            for (const auto& [p, d] : right.terms())
              rhs.add_term({t[0], p}, c * d);
            PermCombo left = mr_product(fterm(t[0]), y);
            for (const auto& [p, d] : left.terms())
              rhs.add_term({p, t[1]}, c * d);
          }
          rhs += tensor_product(coproduct(x), coproduct(y));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("product is associative") {
  for (const auto& a : all_permutations(1))
    for (const auto& b : all_permutations(2))
      for (const auto& c : all_permutations(1))
        CHECK(mr_product(mr_product(fterm(a), fterm(b)), fterm(c)) ==
              mr_product(fterm(a), mr_product(fterm(b), fterm(c))));
}

TEST_CASE("kernel membership") {
  CHECK(hopf_kernel_member(mterm(Permutation({1, 3, 2}))));
  CHECK_FALSE(hopf_kernel_member(mterm(Permutation({3, 1, 2}))));
  CHECK_FALSE(hopf_kernel_member(mterm(Permutation({1}))));
  CHECK_FALSE(hopf_kernel_member(fterm(Permutation({2, 1}))));

  int dim2 = 0, dim3 = 0;
  for (const auto& s : all_permutations(2))
    if (!is_eventual_identity(s)) ++dim2;
  std::vector<Permutation> basis3;
  for (const auto& s : all_permutations(3))
    if (!is_eventual_identity(s)) {
      ++dim3;
      basis3.push_back(s);
    }
  CHECK(dim2 == 0);
  CHECK(dim3 == 2);
  CHECK(basis3 == std::vector<Permutation>{Permutation({1, 3, 2}),
                                           Permutation({2, 1, 3})});
}

TEST_CASE("kernel matches the direct computation") {
  // K_n = ker(D) cap ker((id (x) D) Delta), computed by exact rank of the
  // stacked matrix, with columns indexed jointly over both target spaces
  for (int n = 2; n <= 4; ++n) {
    auto sn = all_permutations(n);
    std::map<SubsetLabel, int> dindex;
    std::map<std::pair<Permutation, SubsetLabel>, int> tindex;
    std::map<std::pair<int, int>, int> columns;  // (block, inner index)
    auto column_for_d = [&](const SubsetLabel& s) {
      auto [it, fresh] = dindex.emplace(s, static_cast<int>(dindex.size()));
      auto [cit, cfresh] = columns.emplace(std::make_pair(0, it->second),
                                           static_cast<int>(columns.size()));
      return cit->second;
    };
    auto column_for_t = [&](const Permutation& a, const SubsetLabel& s) {
      auto [it, fresh] =
          tindex.emplace(std::make_pair(a, s), static_cast<int>(tindex.size()));
      auto [cit, cfresh] = columns.emplace(std::make_pair(1, it->second),
                                           static_cast<int>(columns.size()));
      return cit->second;
    };
    std::vector<std::map<int, Rat>> sparse_rows;
    for (const auto& sigma : sn) {
      std::map<int, Rat> row;
      row[column_for_d(descents(sigma))] += Rat(1);
      TensorCombo image = coproduct(fterm(sigma));
      for (const auto& [tensor, c] : image.terms())
        row[column_for_t(tensor[0], descents(tensor[1]))] += Rat(c);
      sparse_rows.push_back(std::move(row));
    }
    const int dim = static_cast<int>(columns.size());
    std::vector<std::vector<Rat>> dense;
    for (const auto& row : sparse_rows) {
      std::vector<Rat> r(dim, Rat(0));
      for (const auto& [j, v] : row) r[j] = v;
      dense.push_back(std::move(r));
    }
    int rank = rank_of(dense, dim);
    int expected_kernel = 0;
    for (const auto& sigma : sn)
      if (!is_eventual_identity(sigma)) ++expected_kernel;
    CHECK(static_cast<int>(sn.size()) - rank == expected_kernel);

    // every claimed kernel basis vector really lies in both kernels
    for (const auto& sigma : sn) {
      if (is_eventual_identity(sigma)) continue;
      PermCombo f = to_f_basis(mterm(sigma));
      CHECK(des_morphism(f).is_zero());
      std::map<std::pair<Permutation, SubsetLabel>, Int> image;
      TensorCombo df = coproduct(f);
      for (const auto& [tensor, c] : df.terms()) {
        auto key = std::make_pair(tensor[0], descents(tensor[1]));
        image[key] += c;
        if (image[key] == 0) image.erase(key);
      }
      CHECK(image.empty());
    }
  }
}

TEST_CASE("eventual identities are closed under projection") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; n + m - 1 <= 5; ++m)
      for (const auto& rho : all_permutations(n + m - 1)) {
        if (!is_eventual_identity(rho)) continue;
        for (int i = 1; i <= n; ++i) {
          auto [sigma, tau] = project_p(rho, n, m, i);
          CHECK((is_eventual_identity(sigma) || is_eventual_identity(tau)));
        }
      }
}
