#include "operm/word.hpp"

#include <sstream>
#include <stdexcept>

namespace operm {

Word::Word(std::vector<int> l) : letters(std::move(l)) {
  for (int v : letters)
    if (v < 1) throw std::invalid_argument("word: letter indices start at 1");
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ".";
    os << "v" << letters[i];
  }
  return os.str();
}

Word concat(const Word& a, const Word& b) {
  std::vector<int> letters(a.letters);
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return Word(std::move(letters));
}

WordCombo WordCombo::term(const Word& w, Int c) {
  WordCombo out;
  out.add_term(w, c);
  return out;
}

void WordCombo::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WordCombo& WordCombo::operator+=(const WordCombo& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WordCombo& WordCombo::operator-=(const WordCombo& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

std::string WordCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = c > 0 ? c : Int(-c);
    if (a != 1) os << a.str() << "*";
    os << w.to_string();
  }
  return os.str();
}

WordCombo concat(const WordCombo& a, const WordCombo& b) {
  WordCombo out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(concat(wa, wb), ca * cb);
  return out;
}

WordCombo word_commutator(const WordCombo& a, const WordCombo& b) {
  return concat(a, b) - concat(b, a);
}

WordCombo act_on_word(const PermCombo& x, const Word& w) {
  if (x.basis() != Basis::F)
    throw std::invalid_argument("act_on_word: F-basis combo required");
  WordCombo out;
  for (const auto& [sigma, c] : x.terms()) {
    if (sigma.degree() != w.length())
      throw std::invalid_argument("act_on_word: degree mismatch");
    const auto& inv = sigma.inverse_values();
    std::vector<int> letters(w.letters.size());
    for (int j = 1; j <= w.length(); ++j)
      letters[j - 1] = w.letters[inv[j - 1] - 1];
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

}  // namespace operm
