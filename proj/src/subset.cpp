#include "operm/subset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace operm {

SubsetLabel::SubsetLabel(int degree, std::vector<int> mem)
    : n(degree), members(std::move(mem)) {
  if (n < 1) throw std::invalid_argument("subset label: degree must be >= 1");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int p : members)
    if (p < 1 || p > n - 1)
      throw std::invalid_argument("subset label: member outside [1, n-1]");
}

bool SubsetLabel::contains(int p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

std::string SubsetLabel::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) os << ",";
    os << members[i];
  }
  os << "}";
  return os.str();
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  if (parts.empty()) throw std::invalid_argument("composition: no parts");
  for (int a : parts)
    if (a < 1) throw std::invalid_argument("composition: part < 1");
}

int Composition::total() const {
  int t = 0;
  for (int a : parts) t += a;
  return t;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

BinaryString::BinaryString(std::string b) : bits(std::move(b)) {
  for (char c : bits)
    if (c != '+' && c != '-')
      throw std::invalid_argument("binary string: characters must be + or -");
}

Composition composition_of(const SubsetLabel& s) {
  std::vector<int> parts;
  int prev = 0;
  for (int a : s.members) {
    parts.push_back(a - prev);
    prev = a;
  }
  parts.push_back(s.n - prev);
  return Composition(std::move(parts));
}

SubsetLabel subset_of(const Composition& alpha) {
  std::vector<int> members;
  int acc = 0;
  for (size_t p = 0; p + 1 < alpha.parts.size(); ++p) {
    acc += alpha.parts[p];
    members.push_back(acc);
  }
  return SubsetLabel(alpha.total(), std::move(members));
}

BinaryString binary_string_of(const SubsetLabel& s) {
  std::string bits(static_cast<size_t>(s.n - 1), '-');
  for (int a : s.members) bits[a - 1] = '+';
  return BinaryString(std::move(bits));
}

SubsetLabel subset_of(const BinaryString& b) {
  std::vector<int> members;
  for (int i = 0; i < static_cast<int>(b.bits.size()); ++i)
    if (b.bits[i] == '+') members.push_back(i + 1);
  return SubsetLabel(static_cast<int>(b.bits.size()) + 1, std::move(members));
}

SubsetLabel insert_subset(const SubsetLabel& s, const SubsetLabel& t, int i) {
  const int n = s.n, m = t.n;
  if (i < 1 || i > n) throw std::invalid_argument("insert_subset: slot out of range");
  std::vector<int> members;
  for (int a : s.members)
    if (a <= i - 1) members.push_back(a);
  for (int b : t.members) members.push_back(b + i - 1);
  for (int a : s.members)
    if (a >= i) members.push_back(a + m - 1);
  return SubsetLabel(n + m - 1, std::move(members));
}

Composition compose_composition(const Composition& alpha, const Composition& beta,
                                int i) {
  const int n = alpha.total(), m = beta.total();
  if (i < 1 || i > n)
    throw std::invalid_argument("compose_composition: slot out of range");
  const auto& a = alpha.parts;
  const auto& b = beta.parts;
  const size_t h = a.size(), k = b.size();
  // partial sums A_0 = 0 < A_1 < ... ; ell with A_ell < i <= A_{ell+1}
  std::vector<int> A(h + 1, 0);
  for (size_t p = 0; p < h; ++p) A[p + 1] = A[p] + a[p];
  size_t ell = 0;
  while (!(A[ell] < i && i <= A[ell + 1])) ++ell;

  std::vector<int> out;
  for (size_t p = 0; p < ell; ++p) out.push_back(a[p]);
  if (k == 1) {
    out.push_back(a[ell] + m - 1);
  } else {
    out.push_back(b[0] + i - 1 - A[ell]);
    for (size_t q = 1; q + 1 < k; ++q) out.push_back(b[q]);
    out.push_back(b[k - 1] + A[ell + 1] - i);
  }
  for (size_t p = ell + 1; p < h; ++p) out.push_back(a[p]);
  return Composition(std::move(out));
}

BinaryString insert_binary(const BinaryString& eps, const BinaryString& delta,
                           int i) {
  const int n = eps.degree();
  if (i < 1 || i > n) throw std::invalid_argument("insert_binary: slot out of range");
  std::string bits;
  bits.reserve(eps.bits.size() + delta.bits.size());
  bits.append(eps.bits, 0, static_cast<size_t>(i - 1));
  bits.append(delta.bits);
  bits.append(eps.bits, static_cast<size_t>(i - 1), std::string::npos);
  return BinaryString(std::move(bits));
}

std::vector<SubsetLabel> all_subsets(int n) {
  if (n < 1) throw std::invalid_argument("all_subsets: degree must be >= 1");
  std::vector<SubsetLabel> out;
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    std::vector<int> members;
    for (int p = 1; p <= n - 1; ++p)
      if (mask & (1ull << (p - 1))) members.push_back(p);
    out.emplace_back(n, std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t subset_mask(const SubsetLabel& s) {
  if (s.n > 64) throw std::invalid_argument("subset_mask: degree > 64");
  std::uint64_t mask = 0;
  for (int a : s.members) mask |= 1ull << (a - 1);
  return mask;
}

}  // namespace operm
