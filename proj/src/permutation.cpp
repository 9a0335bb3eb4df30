#include "operm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace operm {

namespace {

void validate_one_line(const std::vector<int>& vals) {
  std::vector<int> sorted(vals);
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
    if (sorted[k] != k + 1)
      throw std::invalid_argument("permutation: values are not a bijection of [n]");
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  validate_one_line(vals_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: negative degree");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  Permutation p;
  p.vals_ = std::move(v);
  return p;
}

const std::vector<int>& Permutation::inverse_values() const {
  std::lock_guard<std::mutex> lk(inv_mutex_);
  if (inv_.size() != vals_.size()) {
    inv_.assign(vals_.size(), 0);
    for (int i = 0; i < static_cast<int>(vals_.size()); ++i)
      inv_[vals_[i] - 1] = i + 1;
  }
  return inv_;
}

Permutation Permutation::inverse() const { return Permutation(inverse_values()); }

Permutation& Permutation::operator=(const Permutation& o) {
  if (this != &o) {
    vals_ = o.vals_;
    inv_.clear();
  }
  return *this;
}

Permutation& Permutation::operator=(Permutation&& o) noexcept {
  if (this != &o) {
    vals_ = std::move(o.vals_);
    inv_.clear();
  }
  return *this;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i) os << ",";
    os << vals_[i];
  }
  os << ")";
  return os.str();
}

InversionSet::InversionSet(std::set<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
  for (const auto& [i, j] : pairs_)
    if (i >= j) throw std::invalid_argument("inversion set: pair needs i < j");
}

bool InversionSet::contains(int i, int j) const {
  return pairs_.count({i, j}) > 0;
}

bool InversionSet::subset_of(const InversionSet& o) const {
  return std::includes(o.pairs_.begin(), o.pairs_.end(), pairs_.begin(),
                       pairs_.end());
}

InversionSet InversionSet::set_union(const InversionSet& o) const {
  std::set<std::pair<int, int>> out(pairs_);
  out.insert(o.pairs_.begin(), o.pairs_.end());
  return InversionSet(std::move(out));
}

InversionSet InversionSet::set_difference(const InversionSet& o) const {
  std::set<std::pair<int, int>> out;
  for (const auto& p : pairs_)
    if (!o.pairs_.count(p)) out.insert(p);
  return InversionSet(std::move(out));
}

std::string InversionSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, j] : pairs_) {
    if (!first) os << ",";
    first = false;
    os << "(" << i << "," << j << ")";
  }
  os << "}";
  return os.str();
}

Permutation standardize(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i] < a[j]; });
  for (int k = 0; k + 1 < n; ++k)
    if (a[order[k]] == a[order[k + 1]])
      throw std::invalid_argument("standardize: duplicate entries");
  std::vector<int> out(n);
  for (int rank = 0; rank < n; ++rank) out[order[rank]] = rank + 1;
  return Permutation(std::move(out));
}

InversionSet inversion_set(const Permutation& sigma) {
  std::set<std::pair<int, int>> pairs;
  const int n = sigma.degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma(i) > sigma(j)) pairs.insert({i, j});
  return InversionSet(std::move(pairs));
}

std::uint64_t inversion_mask(const Permutation& sigma) {
  const int n = sigma.degree();
  if (n > 11) throw std::invalid_argument("inversion_mask: degree > 11");
  std::uint64_t mask = 0;
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++bit)
      if (sigma(i) > sigma(j)) mask |= 1ull << bit;
  return mask;
}

Permutation group_product(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("group_product: degree mismatch");
  const int n = a.degree();
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = a(b(i));
  return Permutation(std::move(out));
}

SubsetLabel descents(const Permutation& sigma) {
  const int n = sigma.degree();
  std::vector<int> members;
  for (int p = 1; p <= n - 1; ++p)
    if (sigma(p) > sigma(p + 1)) members.push_back(p);
  return SubsetLabel(n, std::move(members));
}

SubsetLabel global_descents(const Permutation& sigma) {
  const int n = sigma.degree();
  std::vector<int> members;
  // p is global iff min over the prefix exceeds max over the suffix.
  std::vector<int> prefix_min(n + 1, 0), suffix_max(n + 2, 0);
  prefix_min[0] = n + 1;
  for (int i = 1; i <= n; ++i)
    prefix_min[i] = std::min(prefix_min[i - 1], sigma(i));
  suffix_max[n + 1] = 0;
  for (int i = n; i >= 1; --i)
    suffix_max[i] = std::max(suffix_max[i + 1], sigma(i));
  for (int p = 1; p <= n - 1; ++p)
    if (prefix_min[p] > suffix_max[p + 1]) members.push_back(p);
  return SubsetLabel(n, std::move(members));
}

bool is_closed(const Permutation& sigma) {
  return descents(sigma) == global_descents(sigma);
}

bool is_132_avoiding(const Permutation& sigma) {
  const int n = sigma.degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (sigma(i) < sigma(k) && sigma(k) < sigma(j)) return false;
  return true;
}

bool is_eventual_identity(const Permutation& sigma) {
  const int n = sigma.degree();
  for (int k = 1; k <= n; ++k) {
    bool ok = true;
    for (int j = 1; j <= k; ++j)
      if (sigma(n - k + j) != j) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

Permutation over(const Permutation& sigma, const Permutation& tau) {
  const int n = sigma.degree(), m = tau.degree();
  std::vector<int> out;
  out.reserve(n + m);
  for (int i = 1; i <= n; ++i) out.push_back(sigma(i));
  for (int i = 1; i <= m; ++i) out.push_back(tau(i) + n);
  return Permutation(std::move(out));
}

Permutation under(const Permutation& sigma, const Permutation& tau) {
  const int n = sigma.degree(), m = tau.degree();
  std::vector<int> out;
  out.reserve(n + m);
  for (int i = 1; i <= n; ++i) out.push_back(sigma(i) + m);
  for (int i = 1; i <= m; ++i) out.push_back(tau(i));
  return Permutation(std::move(out));
}

std::vector<Permutation> shuffles(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("shuffles: negative arity");
  std::vector<Permutation> out;
  std::vector<int> pick(n + m, 0);
  std::fill(pick.begin(), pick.begin() + n, 1);
  std::sort(pick.begin(), pick.end(), std::greater<int>());
  // choose the value set of the first block; each choice gives one shuffle
  std::vector<int> vals(n + m);
  do {
    std::vector<int> first, second;
    for (int v = 1; v <= n + m; ++v)
      (pick[v - 1] ? first : second).push_back(v);
    for (int i = 0; i < n; ++i) vals[i] = first[i];
    for (int i = 0; i < m; ++i) vals[n + i] = second[i];
    out.emplace_back(vals);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Permutation z_max(int n, int m) {
  return under(Permutation::identity(n), Permutation::identity(m));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace operm
