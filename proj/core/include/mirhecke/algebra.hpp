#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "mirhecke/basis.hpp"
#include "mirhecke/hecke.hpp"
#include "mirhecke/laurent.hpp"
#include "mirhecke/partition.hpp"
#include "mirhecke/report.hpp"

namespace mirhecke {

/// One letter of a word in the generators T_i, T_i^{-1}, P_j.
struct Letter {
  enum class Kind : std::uint8_t { T, TInv, P };
  Kind kind = Kind::T;
  int index = 1;

  static Letter T(int i) { return {Kind::T, i}; }
  static Letter Tinv(int i) { return {Kind::TInv, i}; }
  static Letter P(int j) { return {Kind::P, j}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using GeneratorWord = std::vector<Letter>;

std::string to_string(const Letter& l);
std::string to_string(const GeneratorWord& w);
/// Throws unless every letter is valid in rank n.
void validate(const GeneratorWord& w, int n);

/// Finite linear combination of standard basis elements of rank n.
class AlgebraElement {
 public:
  using Terms = std::map<BasisIndex, Laurent>;

  explicit AlgebraElement(int n = 0) : n_(n) {}
  static AlgebraElement basis(const BasisIndex& idx, const Laurent& c = 1);
  static AlgebraElement identity(int n);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const BasisIndex& idx) const;

  void add(const BasisIndex& idx, const Laurent& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Laurent& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Laurent& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// All coefficients lie in Z[q, q^-1].
  bool is_even() const;

 private:
  void check_rank(const AlgebraElement& o) const;

  int n_;
  Terms terms_;
};

std::string to_string(const AlgebraElement& x);

/// Word T_A P_k T_w T_B^{-1} for a basis index; P_0 contributes no letter.
GeneratorWord basis_word(const BasisIndex& idx);

/// Normal-form engine for one rank. Right multiplication by a generator is
/// the only primitive; results per (basis index, letter) are cached and the
/// cache is safe for concurrent use.
class NormalForm {
 public:
  explicit NormalForm(int n);
  int n() const { return n_; }
  const std::vector<BasisIndex>& basis() const { return basis_; }

  AlgebraElement rmul(const BasisIndex& idx, const Letter& g) const;
  AlgebraElement rmul(const AlgebraElement& x, const Letter& g) const;
  AlgebraElement rmul(const AlgebraElement& x, const GeneratorWord& w) const;
  AlgebraElement reduce(const GeneratorWord& w) const;

  /// L P_k R expanded in the standard basis, for Hecke elements L and R.
  AlgebraElement sandwich(int k, const HeckeElement& left, const HeckeElement& right) const;

 private:
  struct RightKey {
    int len;  // length of the coset representative
    Perm d;
    Perm w;
    friend bool operator<(const RightKey& a, const RightKey& b) {
      if (a.len != b.len) return a.len > b.len;
      if (a.d != b.d) return a.d < b.d;
      return a.w < b.w;
    }
  };
  using RightCoords = std::map<RightKey, Laurent>;

  AlgebraElement compute_rmul(const BasisIndex& idx, const Letter& g) const;
  AlgebraElement rmul_p1(const BasisIndex& idx) const;
  /// T_w T_B^{-1}
  const HeckeElement& tail(const Perm& w, Subset b) const;
  RightCoords right_coords(int k, const HeckeElement& h) const;
  const RightCoords& expansion(int k, const Perm& w, Subset b) const;
  /// Writes P_k h as sum over (B, w) of P_k T_w T_B^{-1}.
  std::map<std::pair<Subset, Perm>, Laurent> right_normalize(int k, const HeckeElement& h) const;

  int n_;
  std::vector<BasisIndex> basis_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<BasisIndex, Letter>, AlgebraElement> rmul_cache_;
  mutable std::map<std::pair<Perm, Subset>, std::unique_ptr<HeckeElement>> tail_cache_;
  mutable std::map<std::tuple<int, Perm, Subset>, std::unique_ptr<RightCoords>> expansion_cache_;
};

/// Shared engine for rank n (created on first use).
const NormalForm& normal_form(int n);

AlgebraElement reduce_word(int n, const GeneratorWord& w);
AlgebraElement rmul_gen(const AlgebraElement& x, const Letter& g);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);

/// P_{n-|mu|} T_{w_{mu^(n)}} as a basis element; mu may be any composition.
AlgebraElement hat_T(int n, const Composition& mu);
inline AlgebraElement hat_T(int n, const Partition& mu) { return hat_T(n, mu.parts()); }
/// Word P_{n-|mu|} T_{mu,1} T_{mu,2} ... for the same element.
GeneratorWord hat_T_word(int n, const Composition& mu);

/// Shifts generator indices up by one: rank n-1 -> rank n.
AlgebraElement iota(const AlgebraElement& x);
/// P_1 iota(x)
AlgebraElement rho(const AlgebraElement& x);
/// Anti-automorphism fixing every generator.
AlgebraElement star(const AlgebraElement& x);

/// T_0 = q(1 - P_1) - 1
AlgebraElement t_zero(int n);

/// Every defining relation and the derived P-relations, evaluated in rank n.
Report check_relations(int n);

}  // namespace mirhecke
