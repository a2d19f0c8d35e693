#pragma once

#include <map>
#include <span>

#include "mirhecke/laurent.hpp"
#include "mirhecke/permutation.hpp"

namespace mirhecke {

/// Element of the Iwahori-Hecke algebra of S_n in the T_w basis,
/// with T_i^2 = (q-1) T_i + q.
class HeckeElement {
 public:
  using Terms = std::map<Perm, Laurent>;

  explicit HeckeElement(int n = 0) : n_(n) {}
  static HeckeElement basis(const Perm& w, const Laurent& c = 1);
  /// T_{i1} T_{i2} ... for the given letters.
  static HeckeElement word(int n, std::span<const int> letters);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Perm& w, const Laurent& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator*=(const Laurent& c);

  HeckeElement times_T(int i) const;
  HeckeElement times_Tinv(int i) const;
  HeckeElement T_times(int i) const;

  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  int n_;
  Terms terms_;
};

}  // namespace mirhecke
