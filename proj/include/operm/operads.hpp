#pragma once

#include <string>
#include <utility>
#include <vector>

#include "operm/algebra.hpp"
#include "operm/permutation.hpp"
#include "operm/poset.hpp"
#include "operm/subset.hpp"
#include "operm/tree.hpp"

namespace operm {

/// Block data of the insertion B_i(sigma,tau): the segment sets decompose as
///   {L_1} = A1b u [sigma_i-k, sigma_i-1] u A1t
///   {L_2} = [sigma_i, eta_i]
///   {L_3} = A3b u [eta_i+1, eta_i+l] u A3t
/// with A1b, A3b < sigma_i-k and eta_i+l < A1t, A3t. k and l depend only on
/// sigma (and i), not on tau.
struct InsertionProfile {
  int n = 0, m = 0, i = 0;
  int sigma_i = 0, eta_i = 0;
  int k_sigma = 0, l_sigma = 0;
  std::vector<int> A1b, A1t, A3b, A3t;  // ascending
  std::vector<int> L1, L2, L3;          // segments of B_i(sigma,tau)
};

InsertionProfile insertion_profile(const Permutation& sigma, const Permutation& tau,
                                   int i);

/// Slot insertion: tau's permutation matrix inserted at entry (sigma_i, i).
Permutation insert_b(const Permutation& sigma, const Permutation& tau, int i);

/// Top of the fiber of P_i over (sigma,tau); T_i(sigma,1) = sigma.
Permutation top_t(const Permutation& sigma, const Permutation& tau, int i);

/// Segment data of rho in S_{n+m-1} around slot i: with u = min{L_2(rho)} and
/// v = max{L_2(rho)}, the outer segments split as C_{j,b} < u < C_{j,m} < v <
/// C_{j,t}, and v - u + 1 = m + |C_{1,m}| + |C_{3,m}|.
struct FiberProfile {
  int n = 0, m = 0, i = 0;
  int u = 0, v = 0;
  int n1m = 0, n3m = 0;
  std::vector<int> C1b, C1m, C1t, C3b, C3m, C3t;  // ascending
};

FiberProfile fiber_profile(const Permutation& rho, int n, int m, int i);

/// The bottom of rho's fiber, B_i(P_i(rho)); requires m >= 2.
Permutation b_closure(const Permutation& rho, int n, int m, int i);

/// Projection onto S_n x S_m; P_i(rho) = (rho, 1) when m = 1.
std::pair<Permutation, Permutation> project_p(const Permutation& rho, int n, int m,
                                              int i);

/// Test oracle: J_rho, the inversions removed when passing to the fiber
/// bottom, so Inv(b_closure(rho)) = Inv(rho) - J_rho.
InversionSet oracle_j(const Permutation& rho, int n, int m, int i);

/// Test oracle: K, the inversions added on top of the fiber bottom, so
/// Inv(top_t(sigma,tau)) = Inv(insert_b(sigma,tau)) u K.
InversionSet oracle_k(const Permutation& sigma, const Permutation& tau, int i);

/// F-basis composition: bilinear extension of insert_b.
PermCombo compose_as_f(const PermCombo& x, const PermCombo& y, int i);

/// M-basis composition: sum of M_rho over the weak-order interval
/// [insert_b(sigma,tau), top_t(sigma,tau)], bilinearly.
PermCombo compose_as_m(const PermCombo& x, const PermCombo& y, int i);

/// Right symmetric-group action; index translation on the F basis.
PermCombo right_action(const PermCombo& x, const Permutation& tau);

struct CheckReport {
  bool passed = true;
  long long instances = 0;
  std::vector<std::string> failures;

  void fail(const std::string& msg) {
    passed = false;
    if (failures.size() < 32) failures.push_back(msg);
  }
  void merge(const CheckReport& o) {
    passed = passed && o.passed;
    instances += o.instances;
    for (const auto& f : o.failures)
      if (failures.size() < 32) failures.push_back(f);
    if (!o.passed) passed = false;
  }
};

/// Exhaustive associativity and unit axioms on basis labels of one family,
/// over all arities with n+m+l <= max_total_degree.
CheckReport check_operad_axioms(Family family, int max_total_degree);

/// Exhaustive equivariance (x.sigma) o_i (y.tau) = (x o_{sigma(i)} y).B_i(sigma,tau)
/// over all group elements for each listed arity pair.
CheckReport check_equivariance(const std::vector<std::pair<int, int>>& arities);

// Q family.
SubsetCombo compose_q_f(const SubsetCombo& x, const SubsetCombo& y, int i);
SubsetCombo compose_q_m(const SubsetCombo& x, const SubsetCombo& y, int i);

/// Descents morphism: F_sigma -> F_{Des(sigma)}; on the M basis, M_{Des(sigma)}
/// for closed sigma and 0 otherwise.
SubsetCombo des_morphism(const PermCombo& x);

// Y family.
TreeCombo compose_y_f(const TreeCombo& x, const TreeCombo& y, int i);
TreeCombo compose_y_m(const TreeCombo& x, const TreeCombo& y, int i);

/// Weak-order maximum of the lambda fiber over t (132-avoiding representative).
Permutation gamma_max(const Tree& t);
/// Tamari-maximal tree r with gamma_max(r) <= tau in the weak order.
Tree rho_tree(const Permutation& tau);

std::pair<Tree, Tree> project_tree(const Tree& r, int n, int m, int i);
Tree top_tree(const Tree& s, const Tree& t, int i);

/// F_sigma -> F_{lambda(sigma)}; on the M basis, M_{lambda(sigma)} for
/// 132-avoiding sigma and 0 otherwise.
TreeCombo lambda_morphism(const PermCombo& x);

/// F_t -> F_{L(t)} (F basis only).
SubsetCombo l_morphism(const TreeCombo& x);

}  // namespace operm
