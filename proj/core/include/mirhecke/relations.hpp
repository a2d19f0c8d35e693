#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "mirhecke/algebra.hpp"

namespace mirhecke {

/// Noncommutative polynomial in the generators: word -> coefficient.
class WordCombination {
 public:
  using Terms = std::map<GeneratorWord, Laurent>;

  WordCombination() = default;
  WordCombination(GeneratorWord w, const Laurent& c = 1);  // NOLINT
  static WordCombination one() { return WordCombination(GeneratorWord{}); }
  static WordCombination letter(const Letter& l) { return WordCombination(GeneratorWord{l}); }

  const Terms& terms() const { return terms_; }
  void add(const GeneratorWord& w, const Laurent& c);

  WordCombination& operator+=(const WordCombination& o);
  WordCombination& operator-=(const WordCombination& o);
  friend WordCombination operator+(WordCombination a, const WordCombination& b) { return a += b; }
  friend WordCombination operator-(WordCombination a, const WordCombination& b) { return a -= b; }
  friend WordCombination operator*(const Laurent& c, const WordCombination& a);
  /// Concatenation product.
  friend WordCombination operator*(const WordCombination& a, const WordCombination& b);

 private:
  Terms terms_;
};

WordCombination product(std::initializer_list<WordCombination> factors);

/// A relation "lhs = rhs" stored as lhs - rhs.
struct Relation {
  std::string name;
  WordCombination difference;
};

/// The presentation in rank n: the T_0..T_{n-1} relations with
/// T_0 = q(1 - P_1) - 1, inverses, the P_i relations and the P_i recursion.
std::vector<Relation> defining_relations(int n);

}  // namespace mirhecke
