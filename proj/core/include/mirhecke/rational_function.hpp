#pragma once

#include <string>

#include "mirhecke/laurent.hpp"

namespace mirhecke {

/// Element of the fraction field Q(v), kept as a reduced quotient of Laurent
/// polynomials. Normal form: gcd(num, den) = 1, den has lowest exponent 0, is
/// primitive and has a positive leading coefficient (units ±v^k and integer
/// content live in the numerator's side of the fraction).
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(const Laurent& value) : num_(value), den_(1) {}  // NOLINT
  RationalFunction(const Laurent& num, const Laurent& den);

  const Laurent& numerator() const { return num_; }
  const Laurent& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Z[v, v^-1].
  bool is_laurent() const { return den_ == Laurent(1); }
  Laurent to_laurent() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  Laurent num_;
  Laurent den_;
};

std::string to_string(const RationalFunction& f);

}  // namespace mirhecke
