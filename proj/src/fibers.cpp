#include "operm/fibers.hpp"

#include <map>
#include <sstream>

namespace operm {

std::vector<Fiber> enumerate_fibers(int n, int m, int i) {
  if (n < 1 || m < 1) throw std::invalid_argument("fibers: arity must be >= 1");
  if (i < 1 || i > n) throw std::invalid_argument("fibers: slot out of range");
  std::map<std::pair<Permutation, Permutation>, std::vector<Permutation>> buckets;
  for (const auto& rho : all_permutations(n + m - 1))
    buckets[project_p(rho, n, m, i)].push_back(rho);
  std::vector<Fiber> out;
  out.reserve(buckets.size());
  for (auto& [key, members] : buckets) {
    Fiber f;
    f.sigma = key.first;
    f.tau = key.second;
    f.bottom = insert_b(f.sigma, f.tau, i);
    f.top = top_t(f.sigma, f.tau, i);
    f.members = std::move(members);
    out.push_back(std::move(f));
  }
  return out;
}

std::string fibers_text(int n, int m, int i) {
  auto fibers = enumerate_fibers(n, m, i);
  std::ostringstream os;
  os << "fibers of P_" << i << ": S_" << (n + m - 1) << " -> S_" << n << " x S_"
     << m << ", count=" << fibers.size() << "\n";
  for (const auto& f : fibers) {
    os << "sigma=" << f.sigma.to_string() << " tau=" << f.tau.to_string()
       << " bottom=" << f.bottom.to_string() << " top=" << f.top.to_string()
       << " members=[";
    for (size_t k = 0; k < f.members.size(); ++k) {
      if (k) os << ",";
      os << f.members[k].to_string();
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

std::string node_label(const Permutation& p) {
  std::ostringstream os;
  if (p.degree() <= 9) {
    for (int v : p.values()) os << v;
  } else {
    for (size_t k = 0; k < p.values().size(); ++k) {
      if (k) os << ",";
      os << p.values()[k];
    }
  }
  return os.str();
}

}  // namespace

std::string fibers_dot(int n, int m, int i) {
  auto fibers = enumerate_fibers(n, m, i);
  const auto& poset = weak_order(n + m - 1);
  std::vector<int> fiber_of(poset.size(), -1);
  for (size_t f = 0; f < fibers.size(); ++f)
    for (const auto& p : fibers[f].members)
      fiber_of[poset.index_of(p)] = static_cast<int>(f);

  std::ostringstream os;
  os << "digraph fibers_s" << (n + m - 1) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int x = 0; x < poset.size(); ++x)
    os << "  n" << x << " [label=\"" << node_label(poset.label(x)) << "\"];\n";
  for (const auto& [a, b] : poset.covers()) {
    os << "  n" << a << " -> n" << b;
    if (fiber_of[a] == fiber_of[b]) os << " [penwidth=3]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

template <class T>
std::string hasse_dot_impl(const Poset<T>& poset, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int x = 0; x < poset.size(); ++x) {
    std::string label = poset.label(x).to_string();
    std::string quoted;
    for (char c : label) {
      if (c == '"' || c == '\\') quoted += '\\';
      quoted += c;
    }
    os << "  n" << x << " [label=\"" << quoted << "\"];\n";
  }
  for (const auto& [a, b] : poset.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string hasse_dot(Family family, int n) {
  switch (family) {
    case Family::S:
      return hasse_dot_impl(weak_order(n), "weak_order_" + std::to_string(n));
    case Family::Q:
      return hasse_dot_impl(boolean_order(n), "boolean_order_" + std::to_string(n));
    default:
      return hasse_dot_impl(tamari_order(n), "tamari_order_" + std::to_string(n));
  }
}

}  // namespace operm
