#include "operm/operads.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace operm {

namespace {

std::vector<int> segment(const Permutation& p, int lo, int hi) {
  // values at positions [lo, hi], 1-based inclusive; empty when lo > hi
  std::vector<int> out;
  for (int pos = lo; pos <= hi; ++pos) out.push_back(p(pos));
  return out;
}

// sequence with the given underlying set and the relative order of `pattern`
std::vector<int> order_by_pattern(std::vector<int> set_values,
                                  const std::vector<int>& pattern) {
  if (set_values.size() != pattern.size())
    throw std::logic_error("order_by_pattern: size mismatch");
  std::sort(set_values.begin(), set_values.end());
  std::vector<int> out(set_values.size());
  for (size_t p = 0; p < pattern.size(); ++p)
    out[p] = set_values[pattern[p] - 1];
  return out;
}

std::vector<int> pattern_of(const std::vector<int>& seq) {
  return standardize(seq).values();
}

void append_range(std::vector<int>& out, int lo, int hi) {
  for (int v = lo; v <= hi; ++v) out.push_back(v);
}

}  // namespace

Permutation insert_b(const Permutation& sigma, const Permutation& tau, int i) {
  const int n = sigma.degree(), m = tau.degree();
  if (n < 1 || m < 1) throw std::invalid_argument("insert_b: degree must be >= 1");
  if (i < 1 || i > n) throw std::invalid_argument("insert_b: slot out of range");
  const int si = sigma(i);
  std::vector<int> out;
  out.reserve(n + m - 1);
  auto shifted = [&](int j) {
    return sigma(j) < si ? sigma(j) : sigma(j) + m - 1;
  };
  for (int j = 1; j <= i - 1; ++j) out.push_back(shifted(j));
  for (int k = 1; k <= m; ++k) out.push_back(tau(k) + si - 1);
  for (int j = i + 1; j <= n; ++j) out.push_back(shifted(j));
  return Permutation(std::move(out));
}

InsertionProfile insertion_profile(const Permutation& sigma, const Permutation& tau,
                                   int i) {
  const int n = sigma.degree(), m = tau.degree();
  Permutation b = insert_b(sigma, tau, i);
  InsertionProfile pr;
  pr.n = n;
  pr.m = m;
  pr.i = i;
  pr.sigma_i = sigma(i);
  pr.eta_i = sigma(i) + m - 1;
  pr.L1 = segment(b, 1, i - 1);
  pr.L2 = segment(b, i, i + m - 1);
  pr.L3 = segment(b, i + m, n + m - 1);

  std::set<int> set1(pr.L1.begin(), pr.L1.end());
  std::set<int> set3(pr.L3.begin(), pr.L3.end());
  int k = 0;
  while (k < i - 1 && set1.count(pr.sigma_i - k - 1)) ++k;
  pr.k_sigma = k;
  int l = 0;
  while (l < n - i && set3.count(pr.eta_i + l + 1)) ++l;
  pr.l_sigma = l;

  for (int v : set1) {
    if (v < pr.sigma_i - pr.k_sigma) pr.A1b.push_back(v);
    else if (v > pr.sigma_i) pr.A1t.push_back(v);
  }
  for (int v : set3) {
    if (v < pr.eta_i) pr.A3b.push_back(v);
    else if (v > pr.eta_i + pr.l_sigma) pr.A3t.push_back(v);
  }
  return pr;
}

Permutation top_t(const Permutation& sigma, const Permutation& tau, int i) {
  const int n = sigma.degree(), m = tau.degree();
  if (i < 1 || i > n) throw std::invalid_argument("top_t: slot out of range");
  if (m == 1) return sigma;
  InsertionProfile pr = insertion_profile(sigma, tau, i);
  const int si = pr.sigma_i, eta = pr.eta_i, k = pr.k_sigma, l = pr.l_sigma;

  std::vector<int> s1(pr.A1b);
  append_range(s1, eta + l - k, eta + l - 1);
  s1.insert(s1.end(), pr.A1t.begin(), pr.A1t.end());

  std::vector<int> s2{si - k};
  append_range(s2, si - k + l + 1, eta + l - k - 1);
  s2.push_back(eta + l);

  std::vector<int> s3(pr.A3b);
  append_range(s3, si - k + 1, si - k + l);
  s3.insert(s3.end(), pr.A3t.begin(), pr.A3t.end());

  std::vector<int> out = order_by_pattern(std::move(s1), pattern_of(pr.L1));
  std::vector<int> mid = order_by_pattern(std::move(s2), pattern_of(pr.L2));
  std::vector<int> tail = order_by_pattern(std::move(s3), pattern_of(pr.L3));
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return Permutation(std::move(out));
}

FiberProfile fiber_profile(const Permutation& rho, int n, int m, int i) {
  if (rho.degree() != n + m - 1)
    throw std::invalid_argument("fiber_profile: dimension mismatch");
  if (i < 1 || i > n) throw std::invalid_argument("fiber_profile: slot out of range");
  if (m < 2) throw std::invalid_argument("fiber_profile: m must be >= 2");
  FiberProfile pr;
  pr.n = n;
  pr.m = m;
  pr.i = i;
  auto l2 = segment(rho, i, i + m - 1);
  pr.u = *std::min_element(l2.begin(), l2.end());
  pr.v = *std::max_element(l2.begin(), l2.end());
  for (int pos = 1; pos <= i - 1; ++pos) {
    int x = rho(pos);
    if (x < pr.u) pr.C1b.push_back(x);
    else if (x > pr.v) pr.C1t.push_back(x);
    else pr.C1m.push_back(x);
  }
  for (int pos = i + m; pos <= n + m - 1; ++pos) {
    int x = rho(pos);
    if (x < pr.u) pr.C3b.push_back(x);
    else if (x > pr.v) pr.C3t.push_back(x);
    else pr.C3m.push_back(x);
  }
  std::sort(pr.C1b.begin(), pr.C1b.end());
  std::sort(pr.C1m.begin(), pr.C1m.end());
  std::sort(pr.C1t.begin(), pr.C1t.end());
  std::sort(pr.C3b.begin(), pr.C3b.end());
  std::sort(pr.C3m.begin(), pr.C3m.end());
  std::sort(pr.C3t.begin(), pr.C3t.end());
  pr.n1m = static_cast<int>(pr.C1m.size());
  pr.n3m = static_cast<int>(pr.C3m.size());
  return pr;
}

Permutation b_closure(const Permutation& rho, int n, int m, int i) {
  FiberProfile pr = fiber_profile(rho, n, m, i);
  std::vector<int> s1(pr.C1b);
  append_range(s1, pr.u, pr.u + pr.n1m - 1);
  s1.insert(s1.end(), pr.C1t.begin(), pr.C1t.end());

  std::vector<int> s2;
  append_range(s2, pr.u + pr.n1m, pr.v - pr.n3m);

  std::vector<int> s3(pr.C3b);
  append_range(s3, pr.v - pr.n3m + 1, pr.v);
  s3.insert(s3.end(), pr.C3t.begin(), pr.C3t.end());

  std::vector<int> out =
      order_by_pattern(std::move(s1), pattern_of(segment(rho, 1, i - 1)));
  std::vector<int> mid =
      order_by_pattern(std::move(s2), pattern_of(segment(rho, i, i + m - 1)));
  std::vector<int> tail = order_by_pattern(
      std::move(s3), pattern_of(segment(rho, i + m, n + m - 1)));
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return Permutation(std::move(out));
}

std::pair<Permutation, Permutation> project_p(const Permutation& rho, int n, int m,
                                              int i) {
  if (rho.degree() != n + m - 1)
    throw std::invalid_argument("project_p: dimension mismatch");
  if (i < 1 || i > n) throw std::invalid_argument("project_p: slot out of range");
  if (m == 1) return {rho, Permutation::identity(1)};
  FiberProfile pr = fiber_profile(rho, n, m, i);
  Permutation brho = b_closure(rho, n, m, i);
  std::vector<int> first = segment(brho, 1, i - 1);
  first.push_back(pr.u + pr.n1m);
  auto tail = segment(brho, i + m, n + m - 1);
  first.insert(first.end(), tail.begin(), tail.end());
  return {standardize(first), standardize(segment(rho, i, i + m - 1))};
}

InversionSet oracle_j(const Permutation& rho, int n, int m, int i) {
  if (rho.degree() != n + m - 1)
    throw std::invalid_argument("oracle_j: dimension mismatch");
  if (i < 1 || i > n) throw std::invalid_argument("oracle_j: slot out of range");
  if (m == 1) return InversionSet();
  FiberProfile pr = fiber_profile(rho, n, m, i);
  std::set<int> c1m(pr.C1m.begin(), pr.C1m.end());
  std::set<int> c3m(pr.C3m.begin(), pr.C3m.end());
  std::vector<int> i1, i3;
  for (int pos = 1; pos <= i - 1; ++pos)
    if (c1m.count(rho(pos))) i1.push_back(pos);
  for (int pos = i + m; pos <= n + m - 1; ++pos)
    if (c3m.count(rho(pos))) i3.push_back(pos);

  std::set<std::pair<int, int>> pairs;
  auto maybe = [&](int a, int b) {
    if (rho(a) > rho(b)) pairs.insert({a, b});
  };
  for (int a : i1)
    for (int b = i; b <= i + m - 1; ++b) maybe(a, b);
  for (int a = i; a <= i + m - 1; ++a)
    for (int b : i3) maybe(a, b);
  for (int a : i1)
    for (int b : i3) maybe(a, b);
  return InversionSet(std::move(pairs));
}

InversionSet oracle_k(const Permutation& sigma, const Permutation& tau, int i) {
  const int n = sigma.degree(), m = tau.degree();
  if (i < 1 || i > n) throw std::invalid_argument("oracle_k: slot out of range");
  if (m == 1) return InversionSet();
  InsertionProfile pr = insertion_profile(sigma, tau, i);
  Permutation b = insert_b(sigma, tau, i);
  std::vector<int> i1s, i3s;
  for (int a = 1; a <= i - 1; ++a)
    if (pr.sigma_i - pr.k_sigma <= b(a) && b(a) <= pr.sigma_i - 1) i1s.push_back(a);
  for (int c = i + m; c <= n + m - 1; ++c)
    if (pr.eta_i + 1 <= b(c) && b(c) <= pr.eta_i + pr.l_sigma) i3s.push_back(c);

  std::set<std::pair<int, int>> pairs;
  for (int a : i1s)
    for (int c = i; c <= i + m - 1; ++c)
      if (b(c) < pr.eta_i) pairs.insert({a, c});
  for (int a = i; a <= i + m - 1; ++a)
    for (int c : i3s)
      if (pr.sigma_i < b(a)) pairs.insert({a, c});
  for (int a : i1s)
    for (int c : i3s) pairs.insert({a, c});
  return InversionSet(std::move(pairs));
}

namespace {

template <class Index, class Insert>
Combo<Index> compose_f_impl(const Combo<Index>& x, const Combo<Index>& y, int i,
                            Insert ins, const char* what) {
  if (x.basis() != Basis::F || y.basis() != Basis::F)
    throw std::invalid_argument(std::string(what) + ": F-basis combos required");
  x.degree();
  y.degree();  // rejects mixed-degree supports
  Combo<Index> out(Basis::F);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add_term(ins(a, b, i), ca * cb);
  return out;
}

}  // namespace

PermCombo compose_as_f(const PermCombo& x, const PermCombo& y, int i) {
  return compose_f_impl(x, y, i, [](const Permutation& a, const Permutation& b,
                                    int slot) { return insert_b(a, b, slot); },
                        "compose_as_f");
}

PermCombo compose_as_m(const PermCombo& x, const PermCombo& y, int i) {
  if (x.basis() != Basis::M || y.basis() != Basis::M)
    throw std::invalid_argument("compose_as_m: M-basis combos required");
  x.degree();
  y.degree();
  PermCombo out(Basis::M);
  for (const auto& [sigma, ca] : x.terms()) {
    if (i < 1 || i > sigma.degree())
      throw std::invalid_argument("compose_as_m: slot out of range");
    for (const auto& [tau, cb] : y.terms()) {
      Permutation bottom = insert_b(sigma, tau, i);
      Permutation top = top_t(sigma, tau, i);
      const auto& poset = weak_order(bottom.degree());
      int bi = poset.index_of(bottom), ti = poset.index_of(top);
      Int c = ca * cb;
      for (int z = 0; z < poset.size(); ++z)
        if (poset.leq(bi, z) && poset.leq(z, ti)) out.add_term(poset.label(z), c);
    }
  }
  return out;
}

PermCombo right_action(const PermCombo& x, const Permutation& tau) {
  if (x.basis() == Basis::M) return to_m_basis(right_action(to_f_basis(x), tau));
  PermCombo out(Basis::F);
  for (const auto& [sigma, c] : x.terms()) {
    if (sigma.degree() != tau.degree())
      throw std::invalid_argument("right_action: degree mismatch");
    out.add_term(group_product(sigma, tau), c);
  }
  return out;
}

namespace {

template <class Elem, class Enumerate, class Insert>
CheckReport axioms_impl(Enumerate all_of, Insert ins, const Elem& unit,
                        int max_total, const char* family) {
  CheckReport rep;
  auto text = [&](const Elem& e) {
    return std::string(family) + " " + e.to_string();
  };
  for (int n = 1; n <= max_total - 2; ++n) {
    for (int m = 1; n + m + 1 <= max_total; ++m) {
      for (int l = 1; n + m + l <= max_total; ++l) {
        auto xs = all_of(n);
        auto ys = all_of(m);
        auto zs = all_of(l);
        for (const auto& x : xs) {
          for (const auto& y : ys) {
            for (const auto& z : zs) {
              // parallel slots: (x o_i y) o_{j+m-1} z = (x o_j z) o_i y, i < j
              for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                  ++rep.instances;
                  auto lhs = ins(ins(x, y, i), z, j + m - 1);
                  auto rhs = ins(ins(x, z, j), y, i);
                  if (!(lhs == rhs))
                    rep.fail("parallel associativity fails at " + text(x));
                }
              }
              // nested slots: (x o_i y) o_{i+j-1} z = x o_i (y o_j z)
              for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= m; ++j) {
                  ++rep.instances;
                  auto lhs = ins(ins(x, y, i), z, i + j - 1);
                  auto rhs = ins(x, ins(y, z, j), i);
                  if (!(lhs == rhs))
                    rep.fail("nested associativity fails at " + text(x));
                }
              }
            }
          }
        }
      }
    }
  }
  for (int n = 1; n <= max_total; ++n) {
    for (const auto& x : all_of(n)) {
      for (int i = 1; i <= n; ++i) {
        ++rep.instances;
        if (!(ins(x, unit, i) == x)) rep.fail("right unit fails at " + text(x));
      }
      ++rep.instances;
      if (!(ins(unit, x, 1) == x)) rep.fail("left unit fails at " + text(x));
    }
  }
  return rep;
}

}  // namespace

CheckReport check_operad_axioms(Family family, int max_total_degree) {
  switch (family) {
    case Family::S:
      return axioms_impl<Permutation>(
          [](int n) { return all_permutations(n); },
          [](const Permutation& a, const Permutation& b, int i) {
            return insert_b(a, b, i);
          },
          Permutation::identity(1), max_total_degree, "S");
    case Family::Q:
      return axioms_impl<SubsetLabel>(
          [](int n) { return all_subsets(n); },
          [](const SubsetLabel& a, const SubsetLabel& b, int i) {
            return insert_subset(a, b, i);
          },
          SubsetLabel(1, {}), max_total_degree, "Q");
    default:
      return axioms_impl<Tree>(
          [](int n) { return all_trees(n); },
          [](const Tree& a, const Tree& b, int i) { return insert_tree(a, b, i); },
          all_trees(1).front(), max_total_degree, "Y");
  }
}

CheckReport check_equivariance(const std::vector<std::pair<int, int>>& arities) {
  CheckReport rep;
  for (auto [n, m] : arities) {
    auto sn = all_permutations(n);
    auto sm = all_permutations(m);
    for (const auto& alpha : sn)
      for (const auto& sigma : sn)
        for (const auto& beta : sm)
          for (const auto& tau : sm)
            for (int i = 1; i <= n; ++i) {
              ++rep.instances;
              Permutation lhs =
                  insert_b(group_product(alpha, sigma), group_product(beta, tau), i);
              Permutation rhs = group_product(insert_b(alpha, beta, sigma(i)),
                                              insert_b(sigma, tau, i));
              if (lhs != rhs)
                rep.fail("equivariance fails at alpha=" + alpha.to_string() +
                         " sigma=" + sigma.to_string() + " beta=" +
                         beta.to_string() + " tau=" + tau.to_string() +
                         " i=" + std::to_string(i));
            }
  }
  return rep;
}

SubsetCombo compose_q_f(const SubsetCombo& x, const SubsetCombo& y, int i) {
  return compose_f_impl(x, y, i, [](const SubsetLabel& a, const SubsetLabel& b,
                                    int slot) { return insert_subset(a, b, slot); },
                        "compose_q_f");
}

SubsetCombo compose_q_m(const SubsetCombo& x, const SubsetCombo& y, int i) {
  if (x.basis() != Basis::M || y.basis() != Basis::M)
    throw std::invalid_argument("compose_q_m: M-basis combos required");
  x.degree();
  y.degree();
  SubsetCombo out(Basis::M);
  for (const auto& [s, ca] : x.terms())
    for (const auto& [t, cb] : y.terms())
      out.add_term(insert_subset(s, t, i), ca * cb);
  return out;
}

SubsetCombo des_morphism(const PermCombo& x) {
  SubsetCombo out(x.basis());
  for (const auto& [sigma, c] : x.terms()) {
    if (x.basis() == Basis::F) {
      out.add_term(descents(sigma), c);
    } else if (is_closed(sigma)) {
      out.add_term(descents(sigma), c);
    }
  }
  return out;
}

TreeCombo compose_y_f(const TreeCombo& x, const TreeCombo& y, int i) {
  return compose_f_impl(x, y, i, [](const Tree& a, const Tree& b, int slot) {
    return insert_tree(a, b, slot);
  }, "compose_y_f");
}

namespace {

const std::map<Tree, Permutation>& gamma_table(int n) {
  static std::map<int, std::map<Tree, Permutation>> tables;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lk(mutex);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;

  std::map<Tree, std::vector<Permutation>> fibers;
  for (const auto& sigma : all_permutations(n))
    fibers[lambda_tree(sigma)].push_back(sigma);
  std::map<Tree, Permutation> table;
  for (auto& [t, members] : fibers) {
    const Permutation* best = &members.front();
    for (const auto& p : members)
      if (weak_leq(*best, p)) best = &p;
    for (const auto& p : members)
      if (!weak_leq(p, *best))
        throw std::logic_error("gamma: lambda fiber has no maximum");
    table.emplace(t, *best);
  }
  auto [pos, ok] = tables.emplace(n, std::move(table));
  (void)ok;
  return pos->second;
}

}  // namespace

Permutation gamma_max(const Tree& t) {
  const int n = t.degree();
  if (n < 1) throw std::invalid_argument("gamma_max: degree must be >= 1");
  return gamma_table(n).at(t);
}

Tree rho_tree(const Permutation& tau) {
  const int n = tau.degree();
  if (n < 1) throw std::invalid_argument("rho_tree: degree must be >= 1");
  const auto& table = gamma_table(n);
  const auto& poset = tamari_order(n);
  const Tree* best = nullptr;
  for (const auto& [r, gamma] : table) {
    if (!weak_leq(gamma, tau)) continue;
    if (!best || poset.leq_label(*best, r)) best = &r;
  }
  if (!best) throw std::logic_error("rho_tree: empty candidate set");
  for (const auto& [r, gamma] : table)
    if (weak_leq(gamma, tau) && !poset.leq_label(r, *best))
      throw std::logic_error("rho_tree: candidate set has no maximum");
  return *best;
}

std::pair<Tree, Tree> project_tree(const Tree& r, int n, int m, int i) {
  if (r.degree() != n + m - 1)
    throw std::invalid_argument("project_tree: dimension mismatch");
  auto [sigma, tau] = project_p(gamma_max(r), n, m, i);
  return {lambda_tree(sigma), lambda_tree(tau)};
}

Tree top_tree(const Tree& s, const Tree& t, int i) {
  return rho_tree(top_t(gamma_max(s), gamma_max(t), i));
}

TreeCombo compose_y_m(const TreeCombo& x, const TreeCombo& y, int i) {
  if (x.basis() != Basis::M || y.basis() != Basis::M)
    throw std::invalid_argument("compose_y_m: M-basis combos required");
  x.degree();
  y.degree();
  TreeCombo out(Basis::M);
  for (const auto& [s, ca] : x.terms()) {
    if (i < 1 || i > s.degree())
      throw std::invalid_argument("compose_y_m: slot out of range");
    for (const auto& [t, cb] : y.terms()) {
      Tree bottom = insert_tree(s, t, i);
      Tree top = top_tree(s, t, i);
      const auto& poset = tamari_order(bottom.degree());
      int bi = poset.index_of(bottom), ti = poset.index_of(top);
      Int c = ca * cb;
      for (int z = 0; z < poset.size(); ++z)
        if (poset.leq(bi, z) && poset.leq(z, ti)) out.add_term(poset.label(z), c);
    }
  }
  return out;
}

TreeCombo lambda_morphism(const PermCombo& x) {
  TreeCombo out(x.basis());
  for (const auto& [sigma, c] : x.terms()) {
    if (x.basis() == Basis::F) {
      out.add_term(lambda_tree(sigma), c);
    } else if (is_132_avoiding(sigma)) {
      out.add_term(lambda_tree(sigma), c);
    }
  }
  return out;
}

SubsetCombo l_morphism(const TreeCombo& x) {
  if (x.basis() != Basis::F)
    throw std::invalid_argument("l_morphism: F-basis combo required");
  SubsetCombo out(Basis::F);
  for (const auto& [t, c] : x.terms()) out.add_term(leaf_label_set(t), c);
  return out;
}

}  // namespace operm
