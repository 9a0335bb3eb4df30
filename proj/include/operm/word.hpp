#pragma once

#include <string>
#include <vector>

#include "operm/algebra.hpp"

namespace operm {

/// Monomial in the tensor algebra on abstract letters v_1, v_2, ...
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> letters);

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator!=(const Word& o) const { return letters != o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }
  std::string to_string() const;  // "v1.v3.v2"
};

Word concat(const Word& a, const Word& b);

class WordCombo {
 public:
  WordCombo() = default;
  static WordCombo term(const Word& w, Int c = 1);

  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Int& c);

  WordCombo& operator+=(const WordCombo& o);
  WordCombo& operator-=(const WordCombo& o);
  friend WordCombo operator+(WordCombo a, const WordCombo& b) { return a += b; }
  friend WordCombo operator-(WordCombo a, const WordCombo& b) { return a -= b; }
  bool operator==(const WordCombo& o) const { return terms_ == o.terms_; }
  bool operator!=(const WordCombo& o) const { return terms_ != o.terms_; }
  std::string to_string() const;

 private:
  std::map<Word, Int> terms_;
};

WordCombo concat(const WordCombo& a, const WordCombo& b);
/// [a,b] = ab - ba in the word algebra.
WordCombo word_commutator(const WordCombo& a, const WordCombo& b);

/// Left action F_sigma . v_1...v_n = v_{sigma^{-1}(1)}...v_{sigma^{-1}(n)},
/// extended linearly over an S-family F-basis combo.
WordCombo act_on_word(const PermCombo& x, const Word& w);

}  // namespace operm
