#include "operm/hopf.hpp"

#include <algorithm>

namespace operm {

namespace {

std::vector<int> slice(const Permutation& p, int lo, int hi) {
  std::vector<int> out;
  for (int pos = lo; pos <= hi; ++pos) out.push_back(p(pos));
  return out;
}

// st(sigma_1..sigma_i) and st(sigma_{i+1}..sigma_n)
std::pair<Permutation, Permutation> split_at(const Permutation& sigma, int i) {
  return {standardize(slice(sigma, 1, i)),
          standardize(slice(sigma, i + 1, sigma.degree()))};
}

}  // namespace

TensorCombo coproduct(const PermCombo& x) {
  PermCombo f = to_f_basis(x);
  TensorCombo out(2);
  for (const auto& [sigma, c] : f.terms()) {
    const int n = sigma.degree();
    for (int i = 1; i <= n - 1; ++i) {
      auto [a, b] = split_at(sigma, i);
      out.add_term({a, b}, c);
    }
  }
  return out;
}

TensorCombo iterated_coproduct(const PermCombo& x, int k) {
  if (k < 1) throw std::invalid_argument("iterated_coproduct: k must be >= 1");
  TensorCombo cur = coproduct(x);
  for (int step = 2; step <= k; ++step) {
    TensorCombo next(step + 1);
    for (const auto& [tensor, c] : cur.terms()) {
      const Permutation& head = tensor.front();
      const int n = head.degree();
      for (int i = 1; i <= n - 1; ++i) {
        auto [a, b] = split_at(head, i);
        std::vector<Permutation> t;
        t.reserve(tensor.size() + 1);
        t.push_back(a);
        t.push_back(b);
        t.insert(t.end(), tensor.begin() + 1, tensor.end());
        next.add_term(t, c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

int filtration_degree(const PermCombo& x) {
  if (x.is_zero()) return 0;
  PermCombo f = to_f_basis(x);
  const int n = f.degree();
  for (int k = 1; k <= n; ++k)
    if (iterated_coproduct(f, k).is_zero()) return k;
  throw std::logic_error("filtration_degree: no vanishing iterate");
}

bool verify_coproduct_composition(const Permutation& sigma, const Permutation& tau,
                                  int i) {
  const int n = sigma.degree(), m = tau.degree();
  if (i < 1 || i > n)
    throw std::invalid_argument("verify_coproduct_composition: slot out of range");
  TensorCombo lhs =
      coproduct(PermCombo::term(Basis::F, insert_b(sigma, tau, i)));

  TensorCombo rhs(2);
  for (int j = 1; j <= i - 1; ++j) {
    auto [a, b] = split_at(sigma, j);
    rhs.add_term({a, insert_b(b, tau, i - j)}, 1);
  }
  for (int k = 1; k <= m - 1; ++k) {
    auto [t1, t2] = split_at(tau, k);
    auto s1 = standardize(slice(sigma, 1, i));          // sigma^i_(1)
    auto s2 = standardize(slice(sigma, i, n));          // sigma^{i-1}_(2)
    rhs.add_term({insert_b(s1, t1, i), insert_b(s2, t2, 1)}, 1);
  }
  for (int j = i; j <= n - 1; ++j) {
    auto [a, b] = split_at(sigma, j);
    rhs.add_term({insert_b(a, tau, i), b}, 1);
  }
  return lhs == rhs;
}

SubsetLabel predicted_gdes_of_t(const Permutation& sigma, const Permutation& tau,
                                int i) {
  const int n = sigma.degree(), m = tau.degree();
  if (i < 1 || i > n)
    throw std::invalid_argument("predicted_gdes_of_t: slot out of range");
  SubsetLabel gs = global_descents(sigma);
  std::vector<int> members;
  for (int p : gs.members) {
    if (p <= i - 1) members.push_back(p);
    else members.push_back(p + m - 1);  // p in [i, n-1]
  }
  if (m >= 2) {
    InsertionProfile pr = insertion_profile(sigma, tau, i);
    if (pr.A1b.empty() && pr.A3t.empty()) {
      SubsetLabel gt = global_descents(tau);
      for (int q : gt.members) members.push_back(q + i - 1);
    }
  }
  std::sort(members.begin(), members.end());
  return SubsetLabel(n + m - 1, std::move(members));
}

PermCombo mr_product(const PermCombo& x, const PermCombo& y) {
  if (x.basis() != Basis::F || y.basis() != Basis::F)
    throw std::invalid_argument("mr_product: F-basis combos required");
  PermCombo out(Basis::F);
  for (const auto& [sigma, ca] : x.terms()) {
    for (const auto& [tau, cb] : y.terms()) {
      Permutation base = over(sigma, tau);
      Int c = ca * cb;
      for (const auto& zeta : shuffles(sigma.degree(), tau.degree()))
        out.add_term(group_product(base, zeta.inverse()), c);
    }
  }
  return out;
}

PermCombo commutator(const PermCombo& x, const PermCombo& y) {
  return mr_product(x, y) - mr_product(y, x);
}

bool hopf_kernel_member(const PermCombo& x) {
  PermCombo mform = to_m_basis(x);
  for (const auto& [sigma, c] : mform.terms())
    if (is_eventual_identity(sigma)) return false;
  return true;
}

}  // namespace operm
