#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "operm/permutation.hpp"
#include "operm/poset.hpp"
#include "operm/subset.hpp"
#include "operm/tree.hpp"

namespace operm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Basis { F, M };
enum class Family { S, Q, Y };

const char* to_string(Basis b);
const char* to_string(Family f);
Basis basis_from_string(const std::string& s);
Family family_from_string(const std::string& s);

template <class Index>
struct FamilyTraits;

template <>
struct FamilyTraits<Permutation> {
  static constexpr Family family = Family::S;
  static int degree(const Permutation& p) { return p.degree(); }
  static const Poset<Permutation>& poset(int n) { return weak_order(n); }
};
template <>
struct FamilyTraits<SubsetLabel> {
  static constexpr Family family = Family::Q;
  static int degree(const SubsetLabel& s) { return s.n; }
  static const Poset<SubsetLabel>& poset(int n) { return boolean_order(n); }
};
template <>
struct FamilyTraits<Tree> {
  static constexpr Family family = Family::Y;
  static int degree(const Tree& t) { return t.degree(); }
  static const Poset<Tree>& poset(int n) { return tamari_order(n); }
};

/// Finitely supported exact-integer combination of basis labels. Zero
/// coefficients are never stored. The basis tag travels with the value.
template <class Index>
class Combo {
 public:
  Combo() = default;
  explicit Combo(Basis b) : basis_(b) {}

  static Combo term(Basis b, const Index& x, Int c = 1) {
    Combo out(b);
    out.add_term(x, c);
    return out;
  }

  Basis basis() const { return basis_; }
  const std::map<Index, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int support_size() const { return static_cast<int>(terms_.size()); }

  void add_term(const Index& x, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
      terms_.emplace(x, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coefficient_of(const Index& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Int(0) : it->second;
  }

  /// Degree shared by all terms; 0 for the zero combo.
  int degree() const {
    if (terms_.empty()) return 0;
    int d = FamilyTraits<Index>::degree(terms_.begin()->first);
    for (const auto& [x, c] : terms_)
      if (FamilyTraits<Index>::degree(x) != d)
        throw std::invalid_argument("combo: mixed degrees in support");
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = FamilyTraits<Index>::degree(terms_.begin()->first);
    for (const auto& [x, c] : terms_)
      if (FamilyTraits<Index>::degree(x) != d) return false;
    return true;
  }

  Combo& operator+=(const Combo& o) {
    require_same_basis(o);
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
  }
  Combo& operator-=(const Combo& o) {
    require_same_basis(o);
    for (const auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
  }
  Combo& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [x, v] : terms_) v *= c;
    return *this;
  }

  friend Combo operator+(Combo a, const Combo& b) { return a += b; }
  friend Combo operator-(Combo a, const Combo& b) { return a -= b; }
  friend Combo operator*(const Int& c, Combo a) { return a *= c; }

  bool operator==(const Combo& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }
  bool operator!=(const Combo& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void require_same_basis(const Combo& o) const {
    if (!terms_.empty() && !o.terms_.empty() && basis_ != o.basis_)
      throw std::invalid_argument("combo: mixed bases");
  }

  Basis basis_ = Basis::F;
  std::map<Index, Int> terms_;
};

using PermCombo = Combo<Permutation>;
using SubsetCombo = Combo<SubsetLabel>;
using TreeCombo = Combo<Tree>;

template <class Index>
Combo<Index> add(const Combo<Index>& a, const Combo<Index>& b) {
  return a + b;
}
template <class Index>
Combo<Index> scale(const Int& c, const Combo<Index>& x) {
  return c * x;
}
template <class Index>
Int coefficient_of(const Combo<Index>& x, const Index& label) {
  return x.coefficient_of(label);
}

/// Basis change by Moebius inversion over the family's order. Exact and
/// mutually inverse on homogeneous combos.
template <class Index>
Combo<Index> to_m_basis(const Combo<Index>& x) {
  if (x.basis() == Basis::M) return x;
  Combo<Index> out(Basis::M);
  if (x.is_zero()) return out;
  const auto& poset = FamilyTraits<Index>::poset(x.degree());
  std::vector<Int> dense(poset.size());
  for (const auto& [label, c] : x.terms()) {
    int idx = poset.index_of(label);
    for (int y = 0; y < poset.size(); ++y)
      if (poset.leq(idx, y)) dense[y] += c;
  }
  for (int y = 0; y < poset.size(); ++y)
    if (dense[y] != 0) out.add_term(poset.label(y), dense[y]);
  return out;
}

template <class Index>
Combo<Index> to_f_basis(const Combo<Index>& x) {
  if (x.basis() == Basis::F) return x;
  Combo<Index> out(Basis::F);
  if (x.is_zero()) return out;
  const auto& poset = FamilyTraits<Index>::poset(x.degree());
  std::vector<Int> dense(poset.size());
  for (const auto& [label, c] : x.terms()) {
    int idx = poset.index_of(label);
    auto mu = poset.mobius_row(idx);
    for (int y = 0; y < poset.size(); ++y)
      if ((*mu)[y] != 0) dense[y] += c * (*mu)[y];
  }
  for (int y = 0; y < poset.size(); ++y)
    if (dense[y] != 0) out.add_term(poset.label(y), dense[y]);
  return out;
}

template <class Index>
Combo<Index> convert_to(const Combo<Index>& x, Basis b) {
  return b == Basis::F ? to_f_basis(x) : to_m_basis(x);
}

/// Group-algebra convolution in Z[S_n], bilinear over group_product.
PermCombo convolve(const PermCombo& x, const PermCombo& y);

/// JSON form {family, basis, degree, terms: [{index, coeff}, ...]} with terms
/// in canonical label order; byte-identical across runs.
template <class Index>
nlohmann::json combo_to_json(const Combo<Index>& x);
template <class Index>
std::string combo_to_json_string(const Combo<Index>& x);

PermCombo perm_combo_from_json(const nlohmann::json& j);
SubsetCombo subset_combo_from_json(const nlohmann::json& j);
TreeCombo tree_combo_from_json(const nlohmann::json& j);
Family combo_family_of_json(const nlohmann::json& j);

/// Integer combination of k-fold tensors of S-family F-basis labels.
class TensorCombo {
 public:
  TensorCombo() = default;
  explicit TensorCombo(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<std::vector<Permutation>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<Permutation>& t, const Int& c);

  TensorCombo& operator+=(const TensorCombo& o);
  TensorCombo& operator-=(const TensorCombo& o);
  friend TensorCombo operator+(TensorCombo a, const TensorCombo& b) { return a += b; }
  friend TensorCombo operator-(TensorCombo a, const TensorCombo& b) { return a -= b; }
  bool operator==(const TensorCombo& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const TensorCombo& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int arity_ = 2;
  std::map<std::vector<Permutation>, Int> terms_;
};

}  // namespace operm
