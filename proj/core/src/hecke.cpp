#include "mirhecke/hecke.hpp"

#include <stdexcept>

namespace mirhecke {

HeckeElement HeckeElement::basis(const Perm& w, const Laurent& c) {
  HeckeElement h(w.size());
  h.add(w, c);
  return h;
}

HeckeElement HeckeElement::word(int n, std::span<const int> letters) {
  HeckeElement h = basis(Perm(n));
  for (int i : letters) h = h.times_T(i);
  return h;
}

void HeckeElement::add(const Perm& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

HeckeElement HeckeElement::times_T(int i) const {
  static const Laurent q = Laurent::q();
  static const Laurent q_minus_1 = Laurent::q() - 1;
  HeckeElement r(n_);
  for (const auto& [w, c] : terms_) {
    if (w.right_ascent(i)) {
      r.add(w.times_simple(i), c);
    } else {
      r.add(w, c * q_minus_1);
      r.add(w.times_simple(i), c * q);
    }
  }
  return r;
}

HeckeElement HeckeElement::times_Tinv(int i) const {
  // T_i^{-1} = q^{-1} T_i - (1 - q^{-1})
  static const Laurent q_inv = Laurent::q_power(-1);
  static const Laurent shift = Laurent::q_power(-1) - 1;
  HeckeElement r(n_);
  for (const auto& [w, c] : terms_) {
    if (w.right_ascent(i)) {
      r.add(w.times_simple(i), c * q_inv);
      r.add(w, c * shift);
    } else {
      r.add(w.times_simple(i), c);
    }
  }
  return r;
}

HeckeElement HeckeElement::T_times(int i) const {
  static const Laurent q = Laurent::q();
  static const Laurent q_minus_1 = Laurent::q() - 1;
  HeckeElement r(n_);
  for (const auto& [w, c] : terms_) {
    const Perm wi = w.inverse();
    if (wi.right_ascent(i)) {
      r.add(w.simple_times(i), c);
    } else {
      r.add(w, c * q_minus_1);
      r.add(w.simple_times(i), c * q);
    }
  }
  return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Hecke product of different ranks");
  HeckeElement r(a.n_);
  for (const auto& [w, c] : b.terms_) {
    HeckeElement part = a;
    for (int i : w.reduced_word()) part = part.times_T(i);
    part *= c;
    r += part;
  }
  return r;
}

}  // namespace mirhecke
