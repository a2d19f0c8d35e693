#include "mirhecke/rational_function.hpp"

#include <stdexcept>

namespace mirhecke {

RationalFunction::RationalFunction(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  // Move the v-power of the denominator to the numerator.
  num_ = num_.shifted(-den_.low());
  den_ = den_.shifted(-den_.low());
  Laurent g = gcd(num_, den_);
  if (!(g == Laurent(1))) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  if (den_.coeff(den_.high()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  num_ = num_.shifted(-den_.low());
  den_ = den_.shifted(-den_.low());
}

Laurent RationalFunction::to_laurent() const {
  if (!is_laurent()) throw std::domain_error("rational function is not a Laurent polynomial");
  return num_;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string to_string(const RationalFunction& f) {
  if (f.is_laurent()) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace mirhecke
