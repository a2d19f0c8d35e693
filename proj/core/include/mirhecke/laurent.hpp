#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mirhecke {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Exact element of Z[v, v^-1]. The Hecke parameter is q = v^2, so the
/// "q-only" scalars are exactly the ones with even exponents.
///
/// Storage is dense between the lowest and highest nonzero exponent and is
/// always trimmed, so two equal values have identical representations.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor): integer constants
  explicit Laurent(const BigInt& c);

  static Laurent v_power(int e, const BigInt& c = 1);
  static Laurent q_power(int e, const BigInt& c = 1) { return v_power(2 * e, c); }
  static Laurent v() { return v_power(1); }
  static Laurent q() { return v_power(2); }
  static Laurent from_terms(const std::map<int, BigInt>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  /// ±v^k
  bool is_unit() const;
  /// True when every stored v-exponent is even, i.e. the value lies in Z[q, q^-1].
  bool is_even() const;

  /// Lowest/highest v-exponent. Zero has no exponents; both return 0 for it.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int e) const;
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, BigInt>> terms() const;

  /// q -> q^-1, i.e. v -> v^-1.
  Laurent bar() const;
  /// Multiplication by v^e.
  Laurent shifted(int e) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::size_t hash() const;

 private:
  void trim();
  void add_scaled(const Laurent& o, int sign);

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

Laurent pow(const Laurent& base, unsigned exponent);

/// Exact quotient a / b in Z[v, v^-1]; empty when b does not divide a.
std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b);

/// Gcd of the integer coefficients (0 for the zero element).
BigInt content(const Laurent& a);

/// Gcd in Z[v, v^-1], normalised to lowest exponent 0 and a positive leading
/// coefficient. gcd(0, 0) = 0.
Laurent gcd(const Laurent& a, const Laurent& b);

/// Evaluate at v = v0 (v0 != 0).
BigRational specialize_v(const Laurent& a, const BigRational& v0);
/// Evaluate at q = q0 (q0 != 0). Requires even exponents.
BigRational specialize_q(const Laurent& a, const BigRational& q0);
/// Evaluate at q = q0 where v0^2 = q0 is supplied for odd exponents.
BigRational specialize(const Laurent& a, const BigRational& q0,
                       const std::optional<BigRational>& v0 = std::nullopt);

/// Human-readable form, written in q when possible ("q^2-q+1"), otherwise in v.
std::string to_string(const Laurent& a);
/// Parses the output of to_string (and similar sums of c*q^e / c*v^e terms).
Laurent parse_laurent(std::string_view text);

struct LaurentHash {
  std::size_t operator()(const Laurent& a) const { return a.hash(); }
};

}  // namespace mirhecke
