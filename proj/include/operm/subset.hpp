#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace operm {

/// A degree n together with a subset of [n-1]. Indexes the Q family.
struct SubsetLabel {
  int n = 1;
  std::vector<int> members;  // sorted, distinct, each in [1, n-1]

  SubsetLabel() = default;
  SubsetLabel(int degree, std::vector<int> members);

  int degree() const { return n; }
  int size() const { return static_cast<int>(members.size()); }
  bool contains(int p) const;

  bool operator==(const SubsetLabel& o) const {
    return n == o.n && members == o.members;
  }
  bool operator!=(const SubsetLabel& o) const { return !(*this == o); }
  bool operator<(const SubsetLabel& o) const {
    if (n != o.n) return n < o.n;
    return members < o.members;
  }

  std::string to_string() const;  // "{1,3}"
};

/// Nonempty sequence of positive parts.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int total() const;
  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator!=(const Composition& o) const { return !(*this == o); }
  std::string to_string() const;  // "(2,1,1)"
};

/// Sign string of length n-1 over {+,-} for a degree-n label.
struct BinaryString {
  std::string bits;  // each char '+' or '-'

  BinaryString() = default;
  explicit BinaryString(std::string bits);

  int degree() const { return static_cast<int>(bits.size()) + 1; }
  bool operator==(const BinaryString& o) const { return bits == o.bits; }
  bool operator!=(const BinaryString& o) const { return !(*this == o); }
  std::string to_string() const { return bits; }
};

Composition composition_of(const SubsetLabel& s);
SubsetLabel subset_of(const Composition& alpha);
BinaryString binary_string_of(const SubsetLabel& s);
SubsetLabel subset_of(const BinaryString& b);

/// Slot insertion on subset labels:
/// (S cap {1..i-1}) u (T+i-1) u ((S cap {i..n-1}) + m-1), a subset of [n+m-2].
SubsetLabel insert_subset(const SubsetLabel& s, const SubsetLabel& t, int i);

/// Same operation through the composition indexing.
Composition compose_composition(const Composition& alpha, const Composition& beta,
                                int i);

/// Same operation through the sign-string indexing: splice delta before slot i.
BinaryString insert_binary(const BinaryString& eps, const BinaryString& delta,
                           int i);

std::vector<SubsetLabel> all_subsets(int n);

/// Bit k-1 set iff k is a member. Requires n <= 64.
std::uint64_t subset_mask(const SubsetLabel& s);

}  // namespace operm
