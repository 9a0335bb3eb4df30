#pragma once

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "operm/permutation.hpp"
#include "operm/subset.hpp"
#include "operm/tree.hpp"

namespace operm {

/// Raised when a requested degree exceeds the configured or hard cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite poset over labels of type T. The order relation is given either by
/// 64-bit containment keys (weak and Boolean orders) or by a reachability
/// matrix built from cover edges (Tamari order). Elements are stored in the
/// canonical label order; Moebius rows are memoized per source element and
/// safe to read concurrently.
template <class T>
class Poset {
 public:
  struct Build {
    std::vector<T> elements;                  // canonical ascending order
    std::vector<std::uint64_t> keys;          // empty -> use covers/reachability
    std::vector<std::pair<int, int>> covers;  // (x, y) with y covering x
  };

  explicit Poset(Build b)
      : elems_(std::move(b.elements)),
        keys_(std::move(b.keys)),
        covers_(std::move(b.covers)) {
    const int n = size();
    for (int i = 0; i < n; ++i) index_.emplace(elems_[i], i);
    mask_mode_ = !keys_.empty();
    build_topo();
    if (!mask_mode_) build_reach();
  }

  Poset(Poset&& o) noexcept
      : elems_(std::move(o.elems_)),
        index_(std::move(o.index_)),
        keys_(std::move(o.keys_)),
        mask_mode_(o.mask_mode_),
        reach_(std::move(o.reach_)),
        covers_(std::move(o.covers_)),
        topo_(std::move(o.topo_)),
        topo_pos_(std::move(o.topo_pos_)),
        mu_rows_(std::move(o.mu_rows_)) {}
  Poset(const Poset&) = delete;
  Poset& operator=(const Poset&) = delete;
  Poset& operator=(Poset&&) = delete;

  int size() const { return static_cast<int>(elems_.size()); }
  const T& label(int i) const { return elems_[static_cast<size_t>(i)]; }

  int index_of(const T& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw std::invalid_argument("poset: unknown element");
    return it->second;
  }

  bool leq(int x, int y) const {
    if (mask_mode_) return (keys_[x] & ~keys_[y]) == 0;
    return (reach_[x][static_cast<size_t>(y) >> 6] >> (y & 63)) & 1u;
  }
  bool leq_label(const T& x, const T& y) const { return leq(index_of(x), index_of(y)); }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& topo() const { return topo_; }

  std::vector<int> up_set(int x) const {
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
      if (leq(x, y)) out.push_back(y);
    return out;
  }

  std::vector<int> interval(int x, int y) const {
    if (!leq(x, y)) throw std::invalid_argument("poset: incomparable pair");
    std::vector<int> out;
    for (int z = 0; z < size(); ++z)
      if (leq(x, z) && leq(z, y)) out.push_back(z);
    return out;
  }

  /// Moebius values from source x to every element of its up-set
  /// (zero elsewhere), by the defining recursion. Only elements that have
  /// already received a nonzero value can contribute to later sums, so the
  /// inner sum runs over those alone.
  std::shared_ptr<const std::vector<int>> mobius_row(int x) const {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = mu_rows_.find(x);
      if (it != mu_rows_.end()) return it->second;
    }
    auto row = std::make_shared<std::vector<int>>(size(), 0);
    (*row)[x] = 1;
    std::vector<int> support{x};  // nonzero entries, in linear-extension order
    for (int p = topo_pos_[x] + 1; p < size(); ++p) {
      int y = topo_[p];
      if (!leq(x, y)) continue;
      int s = 0;
      for (int z : support)
        if (leq(z, y)) s += (*row)[z];
      if (s != 0) {
        (*row)[y] = -s;
        support.push_back(y);
      }
    }
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = mu_rows_.emplace(x, std::move(row));
    (void)inserted;
    return it->second;
  }

  int mobius(int x, int y) const {
    if (!leq(x, y)) throw std::invalid_argument("poset: incomparable pair");
    return (*mobius_row(x))[y];
  }
  int mobius_label(const T& x, const T& y) const {
    return mobius(index_of(x), index_of(y));
  }

  /// Serialized Moebius rows computed so far: "size\n" then one line per row.
  void save_mobius(std::ostream& os) const {
    std::lock_guard<std::mutex> lk(mu_);
    os << size() << "\n";
    for (const auto& [x, row] : mu_rows_) {
      os << x;
      for (int y = 0; y < size(); ++y)
        if ((*row)[y] != 0 && y != x) os << " " << y << " " << (*row)[y];
      os << "\n";
    }
  }

  bool load_mobius(std::istream& is) {
    int n = -1;
    if (!(is >> n) || n != size()) return false;
    std::string line;
    std::getline(is, line);
    std::map<int, std::shared_ptr<const std::vector<int>>> rows;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      int x;
      if (!(ls >> x) || x < 0 || x >= size()) return false;
      auto row = std::make_shared<std::vector<int>>(size(), 0);
      (*row)[x] = 1;
      int y, v;
      while (ls >> y >> v) {
        if (y < 0 || y >= size()) return false;
        (*row)[y] = v;
      }
      rows.emplace(x, std::move(row));
    }
    std::lock_guard<std::mutex> lk(mu_);
    for (auto& [x, row] : rows) mu_rows_[x] = row;
    return true;
  }

 private:
  void build_topo() {
    const int n = size();
    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    for (auto& [a, b] : covers_) {
      adj[a].push_back(b);
      indeg[b]++;
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> q;
    for (int i = 0; i < n; ++i)
      if (indeg[i] == 0) q.push(i);
    topo_.reserve(n);
    while (!q.empty()) {
      int x = q.top();
      q.pop();
      topo_.push_back(x);
      for (int y : adj[x])
        if (--indeg[y] == 0) q.push(y);
    }
    if (static_cast<int>(topo_.size()) != n)
      throw std::logic_error("poset: cover graph is cyclic");
    topo_pos_.assign(n, 0);
    for (int p = 0; p < n; ++p) topo_pos_[topo_[p]] = p;
  }

  void build_reach() {
    const int n = size();
    const size_t words = (static_cast<size_t>(n) + 63) / 64;
    reach_.assign(n, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<int>> up_adj(n);
    for (auto& [a, b] : covers_) up_adj[a].push_back(b);
    for (int p = n - 1; p >= 0; --p) {
      int x = topo_[p];
      reach_[x][static_cast<size_t>(x) >> 6] |= 1ull << (x & 63);
      for (int y : up_adj[x])
        for (size_t w = 0; w < words; ++w) reach_[x][w] |= reach_[y][w];
    }
  }

  std::vector<T> elems_;
  std::map<T, int> index_;
  std::vector<std::uint64_t> keys_;
  bool mask_mode_ = false;
  std::vector<std::vector<std::uint64_t>> reach_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> topo_, topo_pos_;

  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const std::vector<int>>> mu_rows_;
};

bool weak_leq(const Permutation& sigma, const Permutation& tau);
bool boolean_leq(const SubsetLabel& s, const SubsetLabel& t);
bool tamari_leq(const Tree& s, const Tree& t);

Poset<Permutation> make_weak_poset(int n);
Poset<SubsetLabel> make_boolean_poset(int n);
Poset<Tree> make_tamari_poset(int n);

/// Shared registry; each poset is built once behind a lock and immutable after.
const Poset<Permutation>& weak_order(int n);
const Poset<SubsetLabel>& boolean_order(int n);
const Poset<Tree>& tamari_order(int n);

/// Optional on-disk cache of Moebius tables, keyed by family and degree.
/// Empty string disables. Files are loaded when a poset is first built and
/// written by save_poset_caches().
void set_poset_cache_dir(const std::string& dir);
void save_poset_caches();

}  // namespace operm
