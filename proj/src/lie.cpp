#include "operm/lie.hpp"

#include <sstream>

#include "operm/linalg.hpp"
#include "operm/word.hpp"

namespace operm {

PermCombo bracket_f(const PermCombo& x, const PermCombo& y) {
  if (x.basis() != Basis::F || y.basis() != Basis::F)
    throw std::invalid_argument("bracket_f: F-basis combos required");
  PermCombo out(Basis::F);
  for (const auto& [sigma, ca] : x.terms())
    for (const auto& [tau, cb] : y.terms()) {
      Int c = ca * cb;
      out.add_term(over(sigma, tau), c);
      out.add_term(under(sigma, tau), -c);
    }
  return out;
}

PermCombo bracket_via_operad(const PermCombo& x, const PermCombo& y) {
  PermCombo m12(Basis::F);
  m12.add_term(Permutation({1, 2}), 1);
  m12.add_term(Permutation({2, 1}), -1);
  return compose_as_f(compose_as_f(m12, y, 2), x, 1);
}

PermCombo bracket_m(const PermCombo& x, const PermCombo& y) {
  if (x.basis() != Basis::M || y.basis() != Basis::M)
    throw std::invalid_argument("bracket_m: M-basis combos required");
  PermCombo out(Basis::M);
  for (const auto& [sigma, ca] : x.terms())
    for (const auto& [tau, cb] : y.terms()) {
      const int n = sigma.degree(), m = tau.degree();
      Permutation base = over(sigma, tau);
      Permutation z = z_max(n, m);
      Int c = ca * cb;
      for (const auto& zeta : shuffles(n, m)) {
        if (zeta == z) continue;
        out.add_term(group_product(zeta, base), c);
      }
    }
  return out;
}

CheckReport twisted_lie_check(int max_total_degree) {
  CheckReport rep;
  auto fterm = [](const Permutation& p) { return PermCombo::term(Basis::F, p); };
  // antisymmetry {y,x} = -{x,y} . Z_{m,n}
  for (int n = 1; n + 1 <= max_total_degree; ++n) {
    for (int m = 1; n + m <= max_total_degree; ++m) {
      for (const auto& sigma : all_permutations(n)) {
        for (const auto& tau : all_permutations(m)) {
          ++rep.instances;
          PermCombo lhs = bracket_f(fterm(tau), fterm(sigma));
          PermCombo rhs = Int(-1) * right_action(bracket_f(fterm(sigma), fterm(tau)),
                                                 z_max(m, n));
          if (lhs != rhs)
            rep.fail("twisted antisymmetry fails at sigma=" + sigma.to_string() +
                     " tau=" + tau.to_string());
        }
      }
    }
  }
  // {x,{y,z}} + {y,{z,x}}.Z_{n,m+p} + {z,{x,y}}.Z_{n+m,p} = 0
  for (int n = 1; n + 2 <= max_total_degree; ++n) {
    for (int m = 1; n + m + 1 <= max_total_degree; ++m) {
      for (int p = 1; n + m + p <= max_total_degree; ++p) {
        for (const auto& a : all_permutations(n)) {
          for (const auto& b : all_permutations(m)) {
            for (const auto& c : all_permutations(p)) {
              ++rep.instances;
              PermCombo x = fterm(a), y = fterm(b), z = fterm(c);
              PermCombo total = bracket_f(x, bracket_f(y, z));
              total += right_action(bracket_f(y, bracket_f(z, x)), z_max(n, m + p));
              total += right_action(bracket_f(z, bracket_f(x, y)), z_max(n + m, p));
              if (!total.is_zero())
                rep.fail("twisted Jacobi fails at (" + a.to_string() + "," +
                         b.to_string() + "," + c.to_string() + ")");
            }
          }
        }
      }
    }
  }
  return rep;
}

PermCombo dynkin_nested(int n) {
  if (n < 1) throw std::invalid_argument("dynkin_nested: n must be >= 1");
  PermCombo theta = PermCombo::term(Basis::F, Permutation::identity(1));
  PermCombo f1 = PermCombo::term(Basis::F, Permutation::identity(1));
  for (int k = 2; k <= n; ++k) theta = bracket_f(theta, f1);
  return theta;
}

PermCombo dynkin_m(int n) {
  if (n < 1) throw std::invalid_argument("dynkin_m: n must be >= 1");
  PermCombo out(Basis::M);
  for (const auto& sigma : all_permutations(n))
    if (sigma(1) == 1) out.add_term(sigma, 1);
  return out;
}

bool dynkin_word_check(int n) {
  if (n < 1) throw std::invalid_argument("dynkin_word_check: n must be >= 1");
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 1;
  WordCombo acted = act_on_word(dynkin_nested(n), Word(letters));
  WordCombo expected = WordCombo::term(Word({1}));
  for (int k = 2; k <= n; ++k)
    expected = word_commutator(expected, WordCombo::term(Word({k})));
  return acted == expected;
}

namespace {

std::vector<Rat> dense_f(const PermCombo& x, const Poset<Permutation>& poset) {
  std::vector<Rat> v(poset.size(), Rat(0));
  for (const auto& [sigma, c] : x.terms()) v[poset.index_of(sigma)] = Rat(c);
  return v;
}

}  // namespace

std::vector<PermCombo> lie_span(int n) {
  if (n < 1) throw std::invalid_argument("lie_span: n must be >= 1");
  // L_1 = <F_(1)>, L_2 = <M_(1,2)>; higher degrees close under slot
  // composition of lower components and the right group action.
  std::vector<std::vector<PermCombo>> bases(static_cast<size_t>(n) + 1);
  bases[1] = {PermCombo::term(Basis::F, Permutation::identity(1))};
  if (n >= 2) {
    PermCombo m12(Basis::F);
    m12.add_term(Permutation({1, 2}), 1);
    m12.add_term(Permutation({2, 1}), -1);
    bases[2] = {m12};
  }
  for (int d = 3; d <= n; ++d) {
    const auto& poset = weak_order(d);
    RowSpace space(poset.size());
    std::vector<PermCombo> basis;
    auto consider = [&](const PermCombo& v) {
      if (v.is_zero()) return;
      if (space.insert(dense_f(v, poset))) basis.push_back(v);
    };
    for (int a = 2; a <= d - 1; ++a) {
      int b = d + 1 - a;
      if (b < 2) continue;
      for (const auto& x : bases[a])
        for (const auto& y : bases[b])
          for (int i = 1; i <= a; ++i) {
            PermCombo prod = compose_as_f(x, y, i);
            for (const auto& g : all_permutations(d))
              consider(right_action(prod, g));
          }
    }
    bases[d] = std::move(basis);
  }
  return bases[n];
}

}  // namespace operm
