#include "mirhecke/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mirhecke {

namespace {

// Dense integer polynomial, lowest degree first, trimmed at the top.
using Poly = std::vector<BigInt>;

void trim_top(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

BigInt poly_content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly primitive_part(Poly p) {
  BigInt g = poly_content(p);
  if (g == 0) return p;
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

// Pseudo-remainder of a by b (b nonzero).
Poly pseudo_rem(Poly a, const Poly& b) {
  const int db = degree(b);
  const BigInt& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    const BigInt la = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_top(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim_top(a);
  trim_top(b);
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  BigInt ca = poly_content(a), cb = poly_content(b);
  BigInt c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    Poly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  for (auto& x : a) x *= c;
  return a;
}

}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Laurent::Laurent(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

Laurent Laurent::v_power(int e, const BigInt& c) {
  Laurent r;
  if (c != 0) {
    r.low_ = e;
    r.coeffs_.push_back(c);
  }
  return r;
}

Laurent Laurent::from_terms(const std::map<int, BigInt>& terms) {
  Laurent r;
  for (const auto& [e, c] : terms) r += v_power(e, c);
  return r;
}

bool Laurent::is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }

bool Laurent::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

bool Laurent::is_even() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && (low_ + static_cast<int>(i)) % 2 != 0) return false;
  }
  return true;
}

BigInt Laurent::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<int, BigInt>> Laurent::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

Laurent Laurent::bar() const {
  Laurent r;
  if (is_zero()) return r;
  r.low_ = -high();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

Laurent Laurent::shifted(int e) const {
  Laurent r = *this;
  if (!r.is_zero()) r.low_ += e;
  return r;
}

void Laurent::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

void Laurent::add_scaled(const Laurent& o, int sign) {
  if (o.is_zero()) return;
  if (is_zero()) {
    *this = o;
    if (sign < 0)
      for (auto& c : coeffs_) c = -c;
    return;
  }
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<BigInt> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    if (sign > 0)
      coeffs_[off + i] += o.coeffs_[i];
    else
      coeffs_[off + i] -= o.coeffs_[i];
  }
  trim();
}

Laurent& Laurent::operator+=(const Laurent& o) {
  add_scaled(o, 1);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  add_scaled(o, -1);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::size_t Laurent::hash() const {
  std::size_t h = std::hash<int>{}(low_);
  for (const auto& c : coeffs_) {
    const long small = c.fits_slong_p() ? c.get_si() : static_cast<long>(mpz_size(c.get_mpz_t()));
    h ^= std::hash<long>{}(small) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Laurent pow(const Laurent& base, unsigned exponent) {
  Laurent result = 1;
  Laurent b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return Laurent{};
  Poly rem;
  for (int e = a.low(); e <= a.high(); ++e) rem.push_back(a.coeff(e));
  Poly div;
  for (int e = b.low(); e <= b.high(); ++e) div.push_back(b.coeff(e));
  const int dd = degree(div);
  if (degree(rem) < dd) return std::nullopt;
  Poly quot(static_cast<std::size_t>(degree(rem) - dd + 1));
  for (int top = degree(rem); top >= dd; --top) {
    BigInt& lead = rem[static_cast<std::size_t>(top)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), div.back().get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), div.back().get_mpz_t());
    const int shift = top - dd;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(i + shift)] -= c * div[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(shift)] = c;
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  std::map<int, BigInt> terms;
  for (std::size_t i = 0; i < quot.size(); ++i)
    if (quot[i] != 0) terms[a.low() - b.low() + static_cast<int>(i)] = quot[i];
  return Laurent::from_terms(terms);
}

BigInt content(const Laurent& a) {
  BigInt g = 0;
  for (const auto& [e, c] : a.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Laurent gcd(const Laurent& a, const Laurent& b) {
  auto to_poly = [](const Laurent& x) {
    Poly p;
    for (int e = x.low(); e <= x.high() && !x.is_zero(); ++e) p.push_back(x.coeff(e));
    return p;
  };
  Poly g = poly_gcd(to_poly(a), to_poly(b));
  trim_top(g);
  if (g.empty()) return {};
  if (g.back() < 0)
    for (auto& c : g) c = -c;
  std::map<int, BigInt> terms;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) terms[static_cast<int>(i)] = g[i];
  Laurent r = Laurent::from_terms(terms);
  return r.shifted(-r.low());
}

BigRational specialize_v(const Laurent& a, const BigRational& v0) {
  if (v0 == 0) throw std::invalid_argument("specialization point must be nonzero");
  BigRational acc = 0;
  // Horner from the top, then scale by v0^low.
  for (int e = a.high(); e >= a.low() && !a.is_zero(); --e) acc = acc * v0 + BigRational(a.coeff(e));
  BigRational scale = 1;
  const int lo = a.low();
  for (int i = 0; i < (lo < 0 ? -lo : lo); ++i) scale *= v0;
  if (lo < 0) return acc / scale;
  return acc * scale;
}

BigRational specialize_q(const Laurent& a, const BigRational& q0) {
  if (q0 == 0) throw std::invalid_argument("q is invertible; cannot specialize at q = 0");
  if (!a.is_even()) throw std::invalid_argument("odd v-exponent present; supply v0 with v0^2 = q0");
  BigRational acc = 0;
  BigRational qinv = 1 / q0;
  for (const auto& [e, c] : a.terms()) {
    BigRational term = c;
    const int k = e / 2;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) term *= (k < 0 ? qinv : q0);
    acc += term;
  }
  return acc;
}

BigRational specialize(const Laurent& a, const BigRational& q0, const std::optional<BigRational>& v0) {
  if (q0 == 0) throw std::invalid_argument("q is invertible; cannot specialize at q = 0");
  if (a.is_even()) return specialize_q(a, q0);
  if (!v0) throw std::invalid_argument("odd v-exponent present; supply v0 with v0^2 = q0");
  if ((*v0) * (*v0) != q0) throw std::invalid_argument("v0^2 must equal q0");
  return specialize_v(a, *v0);
}

std::string to_string(const Laurent& a) {
  if (a.is_zero()) return "0";
  const bool in_q = a.is_even();
  const char var = in_q ? 'q' : 'v';
  std::ostringstream out;
  auto t = a.terms();
  bool first = true;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const int e = in_q ? it->first / 2 : it->first;
    BigInt c = it->second;
    if (c < 0) {
      out << '-';
      c = -c;
    } else if (!first) {
      out << '+';
    }
    first = false;
    if (e == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << '*';
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

Laurent parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial string");
  Laurent result;
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("cannot parse Laurent polynomial: " + std::string(text)); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    BigInt c = 1;
    bool have_digits = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      c = BigInt(s.substr(i, j - i));
      have_digits = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int exponent = 0;
    if (i < s.size() && (s[i] == 'q' || s[i] == 'v')) {
      const int scale = s[i] == 'q' ? 2 : 1;
      ++i;
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
        std::size_t m = k;
        while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
        if (m == k) fail();
        e = std::stoi(s.substr(i, m - i));
        i = m;
      }
      exponent = scale * e;
    } else if (!have_digits) {
      fail();
    }
    result += Laurent::v_power(exponent, sign * c);
    if (i < s.size() && s[i] != '+' && s[i] != '-') fail();
  }
  return result;
}

}  // namespace mirhecke
