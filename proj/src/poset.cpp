#include "operm/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>

namespace operm {

bool weak_leq(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("weak_leq: degree mismatch");
  std::uint64_t a = inversion_mask(sigma), b = inversion_mask(tau);
  return (a & ~b) == 0;
}

bool boolean_leq(const SubsetLabel& s, const SubsetLabel& t) {
  if (s.n != t.n) throw std::invalid_argument("boolean_leq: degree mismatch");
  std::uint64_t a = subset_mask(s), b = subset_mask(t);
  return (a & ~b) == 0;
}

bool tamari_leq(const Tree& s, const Tree& t) {
  if (s.degree() != t.degree())
    throw std::invalid_argument("tamari_leq: degree mismatch");
  return tamari_order(s.degree()).leq_label(s, t);
}

Poset<Permutation> make_weak_poset(int n) {
  if (n < 1 || n > 9) throw CapExceeded("weak order: degree outside [1, 9]");
  Poset<Permutation>::Build b;
  b.elements = all_permutations(n);
  std::map<Permutation, int> index;
  for (int i = 0; i < static_cast<int>(b.elements.size()); ++i)
    index.emplace(b.elements[i], i);
  b.keys.reserve(b.elements.size());
  for (const auto& p : b.elements) b.keys.push_back(inversion_mask(p));
  // covers: swap the entries holding values k and k+1 when that adds an
  // inversion, i.e. when k sits left of k+1
  for (int i = 0; i < static_cast<int>(b.elements.size()); ++i) {
    const auto& sigma = b.elements[i];
    const auto& inv = sigma.inverse_values();
    for (int k = 1; k <= n - 1; ++k) {
      int p = inv[k - 1], q = inv[k];
      if (p < q) {
        std::vector<int> vals = sigma.values();
        std::swap(vals[p - 1], vals[q - 1]);
        b.covers.emplace_back(i, index.at(Permutation(std::move(vals))));
      }
    }
  }
  return Poset<Permutation>(std::move(b));
}

Poset<SubsetLabel> make_boolean_poset(int n) {
  if (n < 1 || n > 16) throw CapExceeded("Boolean order: degree outside [1, 16]");
  Poset<SubsetLabel>::Build b;
  b.elements = all_subsets(n);
  std::map<SubsetLabel, int> index;
  for (int i = 0; i < static_cast<int>(b.elements.size()); ++i)
    index.emplace(b.elements[i], i);
  b.keys.reserve(b.elements.size());
  for (const auto& s : b.elements) b.keys.push_back(subset_mask(s));
  for (int i = 0; i < static_cast<int>(b.elements.size()); ++i) {
    const auto& s = b.elements[i];
    for (int p = 1; p <= n - 1; ++p) {
      if (s.contains(p)) continue;
      std::vector<int> members = s.members;
      members.push_back(p);
      b.covers.emplace_back(i, index.at(SubsetLabel(n, std::move(members))));
    }
  }
  return Poset<SubsetLabel>(std::move(b));
}

namespace {

// all trees one right-to-left rotation above t: (A v B) v C -> A v (B v C)
// applied at any internal node
void rotations_above(const Tree& t, const std::function<void(const Tree&)>& emit) {
  if (t.is_leaf()) return;
  const Tree& l = t.left();
  const Tree& r = t.right();
  if (!l.is_leaf())
    emit(Tree::node(l.left(), Tree::node(l.right(), r)));
  rotations_above(l, [&](const Tree& nl) { emit(Tree::node(nl, r)); });
  rotations_above(r, [&](const Tree& nr) { emit(Tree::node(l, nr)); });
}

}  // namespace

Poset<Tree> make_tamari_poset(int n) {
  if (n < 1 || n > 10) throw CapExceeded("Tamari order: degree outside [1, 10]");
  Poset<Tree>::Build b;
  b.elements = all_trees(n);
  std::map<Tree, int> index;
  for (int i = 0; i < static_cast<int>(b.elements.size()); ++i)
    index.emplace(b.elements[i], i);
  for (int i = 0; i < static_cast<int>(b.elements.size()); ++i) {
    rotations_above(b.elements[i], [&](const Tree& up) {
      b.covers.emplace_back(i, index.at(up));
    });
  }
  std::sort(b.covers.begin(), b.covers.end());
  b.covers.erase(std::unique(b.covers.begin(), b.covers.end()), b.covers.end());
  return Poset<Tree>(std::move(b));
}

namespace {

struct PosetRegistry {
  std::mutex mutex;
  std::map<int, std::unique_ptr<Poset<Permutation>>> weak;
  std::map<int, std::unique_ptr<Poset<SubsetLabel>>> boolen;
  std::map<int, std::unique_ptr<Poset<Tree>>> tamari;
  std::string cache_dir;

  static PosetRegistry& get() {
    static PosetRegistry reg;
    return reg;
  }

  template <class T, class Maker>
  const Poset<T>& fetch(std::map<int, std::unique_ptr<Poset<T>>>& store, int n,
                        const char* family, Maker make) {
    std::lock_guard<std::mutex> lk(mutex);
    auto it = store.find(n);
    if (it != store.end()) return *it->second;
    auto poset = std::make_unique<Poset<T>>(make(n));
    if (!cache_dir.empty()) {
      std::ifstream in(cache_file(family, n));
      if (in) poset->load_mobius(in);
    }
    auto [pos, ok] = store.emplace(n, std::move(poset));
    (void)ok;
    return *pos->second;
  }

  std::string cache_file(const char* family, int n) const {
    return cache_dir + "/mobius-" + family + "-" + std::to_string(n) + ".txt";
  }

  void save() {
    std::lock_guard<std::mutex> lk(mutex);
    if (cache_dir.empty()) return;
    for (auto& [n, p] : weak) {
      std::ofstream out(cache_file("S", n));
      if (out) p->save_mobius(out);
    }
    for (auto& [n, p] : boolen) {
      std::ofstream out(cache_file("Q", n));
      if (out) p->save_mobius(out);
    }
    for (auto& [n, p] : tamari) {
      std::ofstream out(cache_file("Y", n));
      if (out) p->save_mobius(out);
    }
  }
};

}  // namespace

const Poset<Permutation>& weak_order(int n) {
  return PosetRegistry::get().fetch(PosetRegistry::get().weak, n, "S",
                                    make_weak_poset);
}

const Poset<SubsetLabel>& boolean_order(int n) {
  return PosetRegistry::get().fetch(PosetRegistry::get().boolen, n, "Q",
                                    make_boolean_poset);
}

const Poset<Tree>& tamari_order(int n) {
  return PosetRegistry::get().fetch(PosetRegistry::get().tamari, n, "Y",
                                    make_tamari_poset);
}

void set_poset_cache_dir(const std::string& dir) {
  auto& reg = PosetRegistry::get();
  std::lock_guard<std::mutex> lk(reg.mutex);
  reg.cache_dir = dir;
}

void save_poset_caches() { PosetRegistry::get().save(); }

}  // namespace operm
