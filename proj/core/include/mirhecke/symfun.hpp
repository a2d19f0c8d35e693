#pragma once

#include <map>

#include "mirhecke/laurent.hpp"
#include "mirhecke/partition.hpp"

namespace mirhecke {

/// Symmetric polynomial in x_1..x_r over Z[v, v^-1], in the monomial basis.
class SymPoly {
 public:
  using Terms = std::map<Partition, Laurent>;

  explicit SymPoly(int r = 0) : r_(r) {}
  static SymPoly constant(int r, const Laurent& c);

  int r() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const Partition& mu) const;

  /// Adds c * m_mu; throws when mu has more than r parts.
  void add(const Partition& mu, const Laurent& c);
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Laurent& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const Laurent& c, SymPoly a) { return a *= c; }
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  /// q -> q^-1 on the coefficients; the variables are untouched.
  SymPoly bar_coefficients() const;

 private:
  void check_r(const SymPoly& o) const;

  int r_;
  Terms terms_;
};

std::string to_string(const SymPoly& p);

/// Which list of Pieri transition coefficients to use: the one forced by the
/// brute-force product expansion, or the alternative closed-form case list.
enum class GVariant { Oracle, Paper };

/// m_mu(x_1..x_r); zero when mu has more than r parts.
SymPoly m_sym(const Partition& mu, int r);
/// s_lambda(x_1..x_r) = sum_mu K_{lambda mu} m_mu.
SymPoly schur(const Partition& lambda, int r);
SymPoly mul_sym(const SymPoly& a, const SymPoly& b);

class NotInSchurSpan : public std::runtime_error {
 public:
  NotInSchurSpan() : std::runtime_error("polynomial is not in the Schur span") {}
};

/// Coefficients c_lambda with sum c_lambda s_lambda = p.
std::map<Partition, Laurent> schur_expand(const SymPoly& p);
SymPoly from_schur(const std::map<Partition, Laurent>& coeffs, int r);

/// q~_m(x_1..x_r, 1; q) from the monomial formula, with m_mu(x, 1) expanded
/// by deleting the part absorbed by the trailing variable.
SymPoly qtilde(int m, int r);
/// Product of qtilde over the parts.
SymPoly qtilde_mu(const Composition& mu, int r);
inline SymPoly qtilde_mu(const Partition& mu, int r) { return qtilde_mu(mu.parts(), r); }

/// The same polynomial from the generating function prod (1 - q x_i y)/(1 - x_i y)
/// (x_{r+1} = 1) followed by exact division by (q - 1). Requires m >= 1.
SymPoly qtilde_generating(int m, int r);
/// The same polynomial as the signed sum over weakly decreasing sequences in
/// {1..r+1}.
SymPoly qtilde_sequence_sum(int m, int r);

/// g_m(x_1..x_r, 1; q) by enumeration of weakly increasing sequences.
SymPoly g_poly(int m, int r);
/// q~_m = (-q)^{m-1} g_m(q^{-1}); requires m >= 1.
bool check_two_symmetric(int m, int r);

/// Strip expansion of q~_m s_nu in the Schur basis.
std::map<Partition, Laurent> pieri_qtilde(int m, const Partition& nu, int r, GVariant variant = GVariant::Oracle);
/// schur_expand(qtilde(m) * schur(nu)).
std::map<Partition, Laurent> pieri_bruteforce(int m, const Partition& nu, int r);

}  // namespace mirhecke
