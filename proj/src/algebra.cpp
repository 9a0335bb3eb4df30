#include "operm/algebra.hpp"

#include <sstream>

namespace operm {

const char* to_string(Basis b) { return b == Basis::F ? "F" : "M"; }

const char* to_string(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::Q: return "Q";
    default: return "Y";
  }
}

Basis basis_from_string(const std::string& s) {
  if (s == "F" || s == "f") return Basis::F;
  if (s == "M" || s == "m") return Basis::M;
  throw std::invalid_argument("basis must be F or M");
}

Family family_from_string(const std::string& s) {
  if (s == "S" || s == "s") return Family::S;
  if (s == "Q" || s == "q") return Family::Q;
  if (s == "Y" || s == "y") return Family::Y;
  throw std::invalid_argument("family must be S, Q, or Y");
}

namespace {

std::string label_text(const Permutation& p) { return p.to_string(); }
std::string label_text(const SubsetLabel& s) { return s.to_string(); }
std::string label_text(const Tree& t) { return t.to_string(); }

}  // namespace

template <class Index>
std::string Combo<Index>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = c > 0 ? c : Int(-c);
    if (a != 1) os << a.str() << "*";
    os << operm::to_string(basis_) << "_" << label_text(x);
  }
  return os.str();
}

template std::string Combo<Permutation>::to_string() const;
template std::string Combo<SubsetLabel>::to_string() const;
template std::string Combo<Tree>::to_string() const;

PermCombo convolve(const PermCombo& x, const PermCombo& y) {
  if (x.basis() != Basis::F || y.basis() != Basis::F)
    throw std::invalid_argument("convolve: F-basis combos required");
  if (!x.is_zero() && !y.is_zero() && x.degree() != y.degree())
    throw std::invalid_argument("convolve: degree mismatch");
  PermCombo out(Basis::F);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      out.add_term(group_product(a, b), ca * cb);
  return out;
}

namespace {

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("combo json: bad coefficient");
}

nlohmann::json int_to_json(const Int& c) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (c >= lo && c <= hi)
    return nlohmann::json(static_cast<long long>(c));
  return nlohmann::json(c.str());
}

nlohmann::json index_to_json(const Permutation& p) {
  return nlohmann::json(p.values());
}
nlohmann::json index_to_json(const SubsetLabel& s) {
  return nlohmann::json(s.members);
}
nlohmann::json index_to_json(const Tree& t) { return nlohmann::json(t.to_string()); }

Permutation perm_index_from_json(const nlohmann::json& j, int /*degree*/) {
  return Permutation(j.get<std::vector<int>>());
}
SubsetLabel subset_index_from_json(const nlohmann::json& j, int degree) {
  return SubsetLabel(degree, j.get<std::vector<int>>());
}
Tree tree_index_from_json(const nlohmann::json& j, int /*degree*/) {
  return parse_tree(j.get<std::string>());
}

}  // namespace

template <class Index>
nlohmann::json combo_to_json(const Combo<Index>& x) {
  nlohmann::json j;
  j["family"] = to_string(FamilyTraits<Index>::family);
  j["basis"] = to_string(x.basis());
  j["degree"] = x.degree();
  j["terms"] = nlohmann::json::array();
  for (const auto& [label, c] : x.terms()) {
    nlohmann::json term;
    term["index"] = index_to_json(label);
    term["coeff"] = int_to_json(c);
    j["terms"].push_back(term);
  }
  return j;
}

template nlohmann::json combo_to_json(const Combo<Permutation>&);
template nlohmann::json combo_to_json(const Combo<SubsetLabel>&);
template nlohmann::json combo_to_json(const Combo<Tree>&);

template <class Index>
std::string combo_to_json_string(const Combo<Index>& x) {
  return combo_to_json(x).dump();
}

template std::string combo_to_json_string(const Combo<Permutation>&);
template std::string combo_to_json_string(const Combo<SubsetLabel>&);
template std::string combo_to_json_string(const Combo<Tree>&);

namespace {

template <class Index, class IndexParser>
Combo<Index> combo_from_json_impl(const nlohmann::json& j, Family expect,
                                  IndexParser parse_index) {
  if (!j.is_object()) throw std::invalid_argument("combo json: object expected");
  if (combo_family_of_json(j) != expect)
    throw std::invalid_argument("combo json: family mismatch");
  Basis basis = basis_from_string(j.at("basis").get<std::string>());
  int degree = j.at("degree").get<int>();
  Combo<Index> out(basis);
  for (const auto& term : j.at("terms")) {
    Index label = parse_index(term.at("index"), degree);
    if (FamilyTraits<Index>::degree(label) != degree)
      throw std::invalid_argument("combo json: term degree mismatch");
    out.add_term(label, int_from_json(term.at("coeff")));
  }
  return out;
}

}  // namespace

Family combo_family_of_json(const nlohmann::json& j) {
  return family_from_string(j.at("family").get<std::string>());
}

PermCombo perm_combo_from_json(const nlohmann::json& j) {
  return combo_from_json_impl<Permutation>(j, Family::S, perm_index_from_json);
}

SubsetCombo subset_combo_from_json(const nlohmann::json& j) {
  return combo_from_json_impl<SubsetLabel>(j, Family::Q, subset_index_from_json);
}

TreeCombo tree_combo_from_json(const nlohmann::json& j) {
  return combo_from_json_impl<Tree>(j, Family::Y, tree_index_from_json);
}

void TensorCombo::add_term(const std::vector<Permutation>& t, const Int& c) {
  if (c == 0) return;
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tensor combo: arity mismatch");
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorCombo& TensorCombo::operator+=(const TensorCombo& o) {
  if (!o.terms_.empty() && !terms_.empty() && arity_ != o.arity_)
    throw std::invalid_argument("tensor combo: arity mismatch");
  if (terms_.empty()) arity_ = o.arity_;
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

TensorCombo& TensorCombo::operator-=(const TensorCombo& o) {
  if (!o.terms_.empty() && !terms_.empty() && arity_ != o.arity_)
    throw std::invalid_argument("tensor combo: arity mismatch");
  if (terms_.empty()) arity_ = o.arity_;
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

std::string TensorCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = c > 0 ? c : Int(-c);
    if (a != 1) os << a.str() << "*";
    for (size_t k = 0; k < t.size(); ++k) {
      if (k) os << "(x)";
      os << "F_" << t[k].to_string();
    }
  }
  return os.str();
}

}  // namespace operm
