#pragma once

#include <cstdint>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "operm/subset.hpp"

namespace operm {

/// Permutation of [n] in one-line notation: the value at position i is sigma_i.
/// Immutable after construction. The empty permutation exists only as a
/// recursion base (lambda_tree); group-algebra use requires degree >= 1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(vals_.size()); }
  int operator()(int i) const { return vals_[i - 1]; }  // 1-based
  const std::vector<int>& values() const { return vals_; }

  /// One-line notation of the inverse; computed on first use and cached.
  const std::vector<int>& inverse_values() const;
  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return vals_ == o.vals_; }
  bool operator!=(const Permutation& o) const { return vals_ != o.vals_; }
  bool operator<(const Permutation& o) const { return vals_ < o.vals_; }

  std::string to_string() const;  // "(2,3,1)"

  Permutation(const Permutation& o) : vals_(o.vals_) {}
  Permutation(Permutation&& o) noexcept : vals_(std::move(o.vals_)) {}
  Permutation& operator=(const Permutation& o);
  Permutation& operator=(Permutation&& o) noexcept;
  ~Permutation() = default;

 private:
  std::vector<int> vals_;
  mutable std::vector<int> inv_;  // filled on first inverse_values() call
  mutable std::mutex inv_mutex_;
};

/// Position pairs (i,j), i<j, with sigma_i > sigma_j.
class InversionSet {
 public:
  InversionSet() = default;
  explicit InversionSet(std::set<std::pair<int, int>> pairs);

  const std::set<std::pair<int, int>>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool contains(int i, int j) const;
  bool subset_of(const InversionSet& o) const;

  bool operator==(const InversionSet& o) const { return pairs_ == o.pairs_; }
  bool operator!=(const InversionSet& o) const { return pairs_ != o.pairs_; }
  bool operator<(const InversionSet& o) const { return pairs_ < o.pairs_; }

  InversionSet set_union(const InversionSet& o) const;
  InversionSet set_difference(const InversionSet& o) const;

  std::string to_string() const;

 private:
  std::set<std::pair<int, int>> pairs_;
};

/// Unique permutation order-isomorphic to a sequence of distinct integers.
Permutation standardize(const std::vector<int>& a);

InversionSet inversion_set(const Permutation& sigma);

/// Inversion pairs packed into a word; position pair (i,j) -> one bit.
/// Requires degree <= 11.
std::uint64_t inversion_mask(const Permutation& sigma);

/// Group product, convention (a*b)(i) = a(b(i)).
Permutation group_product(const Permutation& a, const Permutation& b);

SubsetLabel descents(const Permutation& sigma);
SubsetLabel global_descents(const Permutation& sigma);

bool is_closed(const Permutation& sigma);
bool is_132_avoiding(const Permutation& sigma);
/// True iff sigma ends with the block 1,2,...,k for some k >= 1.
bool is_eventual_identity(const Permutation& sigma);

/// sigma followed by tau shifted up by n.
Permutation over(const Permutation& sigma, const Permutation& tau);
/// sigma shifted up by m followed by tau.
Permutation under(const Permutation& sigma, const Permutation& tau);

/// All (n,m)-shuffles: increasing on the first n positions and on the rest.
std::vector<Permutation> shuffles(int n, int m);
/// 1_n \ 1_m, the top of the shuffle interval.
Permutation z_max(int n, int m);

/// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace operm
