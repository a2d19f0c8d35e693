#include "mirhecke/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mirhecke/characters.hpp"

namespace mirhecke {

SymPoly SymPoly::constant(int r, const Laurent& c) {
  SymPoly p(r);
  p.add(Partition(), c);
  return p;
}

Laurent SymPoly::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Laurent() : it->second;
}

void SymPoly::add(const Partition& mu, const Laurent& c) {
  if (mu.length() > r_) throw std::invalid_argument("monomial with more parts than variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymPoly::check_r(const SymPoly& o) const {
  if (o.r_ != r_) throw std::invalid_argument("symmetric polynomials in different numbers of variables");
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  check_r(o);
  for (const auto& [mu, c] : o.terms_) add(mu, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  check_r(o);
  for (const auto& [mu, c] : o.terms_) add(mu, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, x] : terms_) x *= c;
  return *this;
}

SymPoly SymPoly::bar_coefficients() const {
  SymPoly out(r_);
  for (const auto& [mu, c] : terms_) out.add(mu, c.bar());
  return out;
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mu, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(c) << ")*m[" << to_string(mu) << ']';
  }
  return out.str();
}

SymPoly m_sym(const Partition& mu, int r) {
  SymPoly p(r);
  if (mu.length() <= r) p.add(mu, 1);
  return p;
}

SymPoly schur(const Partition& lambda, int r) {
  SymPoly p(r);
  if (lambda.length() > r) return p;
  for (const Partition& mu : partitions_of(lambda.size(), r)) {
    if (!dominates(lambda, mu)) continue;
    p.add(mu, Laurent(combinatorics::kostka(lambda, mu)));
  }
  return p;
}

namespace {

std::vector<int> padded(const Partition& p, int r) {
  std::vector<int> v = p.parts();
  v.resize(static_cast<std::size_t>(r), 0);
  return v;
}

// Distinct rearrangements of the exponent vector of m_mu in r variables.
std::vector<std::vector<int>> orbit(const Partition& mu, int r) {
  std::vector<int> v = padded(mu, r);
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

using ProductKey = std::tuple<Partition, Partition, int>;

// Structure constants of the monomial basis, cached.
const std::map<Partition, BigInt>& monomial_product(const Partition& a, const Partition& b, int r) {
  static std::mutex mutex;
  static std::map<ProductKey, std::map<Partition, BigInt>> cache;
  const ProductKey key{std::min(a, b), std::max(a, b), r};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::map<Partition, BigInt> out;
  const auto oa = orbit(std::get<0>(key), r);
  const auto ob = orbit(std::get<1>(key), r);
  std::vector<int> sum(static_cast<std::size_t>(r));
  for (const auto& x : oa) {
    for (const auto& y : ob) {
      bool dominant = true;
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = x[i] + y[i];
        if (i > 0 && sum[i] > sum[i - 1]) {
          dominant = false;
          break;
        }
      }
      if (dominant) out[Partition::sorted_from(sum)] += 1;
    }
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(out)).first->second;
}

// Monomials keyed by exponent vectors in x_1..x_r.
using ExponentPoly = std::map<std::vector<int>, Laurent>;

void add_term(ExponentPoly& p, const std::vector<int>& e, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// Reads the monomial expansion off the dominant exponents; throws when some
// monomial disagrees with its sorted rearrangement.
SymPoly symmetrize_checked(const ExponentPoly& p, int r) {
  SymPoly out(r);
  for (const auto& [e, c] : p)
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.add(Partition::sorted_from(e), c);
  for (const auto& [e, c] : p)
    if (!(out.coeff(Partition::sorted_from(e)) == c)) throw std::logic_error("polynomial is not symmetric");
  for (const auto& [mu, c] : out.terms()) {
    for (const auto& e : orbit(mu, r))
      if (!p.count(e)) throw std::logic_error("polynomial is not symmetric");
  }
  return out;
}

}  // namespace

SymPoly mul_sym(const SymPoly& a, const SymPoly& b) {
  if (a.r() != b.r()) throw std::invalid_argument("mul_sym: different numbers of variables");
  SymPoly out(a.r());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Laurent c = ca * cb;
      for (const auto& [mu, k] : monomial_product(ma, mb, a.r())) out.add(mu, c * Laurent(k));
    }
  }
  return out;
}

std::map<Partition, Laurent> schur_expand(const SymPoly& p) {
  std::map<Partition, Laurent> out;
  SymPoly rest = p;
  while (!rest.is_zero()) {
    // Smallest degree first; within a degree the lexicographically largest
    // partition, which is the leading monomial of exactly one Schur polynomial.
    const auto [lambda, c] = *rest.terms().begin();
    out[lambda] = c;
    SymPoly s = schur(lambda, p.r());
    if (!(s.coeff(lambda) == Laurent(1))) throw NotInSchurSpan();
    s *= c;
    rest -= s;
    if (rest.coeff(lambda) != Laurent()) throw NotInSchurSpan();
  }
  return out;
}

SymPoly from_schur(const std::map<Partition, Laurent>& coeffs, int r) {
  SymPoly out(r);
  for (const auto& [lambda, c] : coeffs) out += c * schur(lambda, r);
  return out;
}

SymPoly qtilde(int m, int r) {
  if (m < 0) throw std::invalid_argument("qtilde: negative degree");
  if (m == 0) return SymPoly::constant(r, 1);
  const Laurent q_minus_1 = Laurent::q() - 1;
  SymPoly out(r);
  for (const Partition& mu : partitions_of(m)) {
    const int len = mu.length();
    Laurent c = pow(q_minus_1, static_cast<unsigned>(len - 1));
    if ((m - len) % 2) c = -c;
    // m_mu(x_1..x_r, 1): the last variable takes exponent 0 or one of the parts.
    if (len <= r) out.add(mu, c);
    std::vector<int> parts = mu.parts();
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    for (int p : parts) {
      std::vector<int> rest = mu.parts();
      rest.erase(std::find(rest.begin(), rest.end(), p));
      if (static_cast<int>(rest.size()) <= r) out.add(Partition(rest), c);
    }
  }
  return out;
}

SymPoly qtilde_mu(const Composition& mu, int r) {
  SymPoly out = SymPoly::constant(r, 1);
  for (int part : mu) out = mul_sym(out, qtilde(part, r));
  return out;
}

SymPoly qtilde_generating(int m, int r) {
  if (m < 1) throw std::invalid_argument("qtilde_generating: needs m >= 1");
  const Laurent one_minus_q = 1 - Laurent::q();
  // by_degree[d] = coefficient of y^d, as a polynomial in x_1..x_r
  std::vector<ExponentPoly> by_degree(static_cast<std::size_t>(m + 1));
  by_degree[0][std::vector<int>(static_cast<std::size_t>(r), 0)] = 1;
  for (int i = 0; i <= r; ++i) {
    // factor 1 + (1 - q) sum_{a >= 1} x_i^a y^a, with x_{r+1} = 1
    std::vector<ExponentPoly> next = by_degree;
    for (int d = 0; d <= m; ++d) {
      for (const auto& [e, c] : by_degree[static_cast<std::size_t>(d)]) {
        for (int a = 1; d + a <= m; ++a) {
          std::vector<int> f = e;
          if (i < r) f[static_cast<std::size_t>(i)] += a;
          add_term(next[static_cast<std::size_t>(d + a)], f, c * one_minus_q);
        }
      }
    }
    by_degree = std::move(next);
  }
  const Laurent divisor = Laurent::q() - 1;
  ExponentPoly result;
  for (const auto& [e, c] : by_degree[static_cast<std::size_t>(m)]) {
    auto quotient = divide_exact(c, divisor);
    if (!quotient) throw std::logic_error("generating function coefficient not divisible by q-1");
    add_term(result, e, m % 2 ? -*quotient : *quotient);
  }
  return symmetrize_checked(result, r);
}

namespace {

// Calls f on every monotone sequence of length m over {1..top}; `decreasing`
// selects weakly decreasing instead of weakly increasing.
void for_each_monotone(int m, int top, bool decreasing, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> seq;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(seq.size()) == m) {
      f(seq);
      return;
    }
    const int lo = decreasing ? 1 : (seq.empty() ? 1 : seq.back());
    const int hi = decreasing ? (seq.empty() ? top : seq.back()) : top;
    for (int k = lo; k <= hi; ++k) {
      seq.push_back(k);
      rec();
      seq.pop_back();
    }
  };
  rec();
}

}  // namespace

SymPoly qtilde_sequence_sum(int m, int r) {
  if (m < 0) throw std::invalid_argument("qtilde_sequence_sum: negative degree");
  const Laurent q_minus_1 = Laurent::q() - 1;
  ExponentPoly p;
  for_each_monotone(m, r + 1, true, [&](const std::vector<int>& k) {
    int equal = 0, drops = 0;
    for (std::size_t a = 0; a + 1 < k.size(); ++a) {
      if (k[a] == k[a + 1]) ++equal;
      if (k[a] > k[a + 1]) ++drops;
    }
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    for (int letter : k)
      if (letter <= r) ++e[static_cast<std::size_t>(letter - 1)];
    Laurent c = pow(q_minus_1, static_cast<unsigned>(drops));
    add_term(p, e, equal % 2 ? -c : c);
  });
  return symmetrize_checked(p, r);
}

SymPoly g_poly(int m, int r) {
  if (m < 0) throw std::invalid_argument("g_poly: negative degree");
  const Laurent q = Laurent::q();
  const Laurent q_minus_1 = q - 1;
  ExponentPoly p;
  for_each_monotone(m, r + 1, false, [&](const std::vector<int>& idx) {
    int equal = 0, rises = 0;
    for (std::size_t b = 0; b + 1 < idx.size(); ++b) {
      if (idx[b] == idx[b + 1]) ++equal;
      if (idx[b] < idx[b + 1]) ++rises;
    }
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    for (int letter : idx)
      if (letter <= r) ++e[static_cast<std::size_t>(letter - 1)];
    add_term(p, e, pow(q, static_cast<unsigned>(equal)) * pow(q_minus_1, static_cast<unsigned>(rises)));
  });
  return symmetrize_checked(p, r);
}

bool check_two_symmetric(int m, int r) {
  if (m < 1) throw std::invalid_argument("check_two_symmetric: needs m >= 1");
  SymPoly rhs = g_poly(m, r).bar_coefficients();
  rhs *= pow(-Laurent::q(), static_cast<unsigned>(m - 1));
  return qtilde(m, r) == rhs;
}

std::map<Partition, Laurent> pieri_qtilde(int m, const Partition& nu, int r, GVariant variant) {
  if (m < 0) throw std::invalid_argument("pieri_qtilde: negative degree");
  std::map<Partition, Laurent> out;
  if (nu.length() > r) return out;
  if (m == 0) {
    out[nu] = 1;
    return out;
  }
  for (int size = nu.size(); size <= nu.size() + m; ++size) {
    for (const Partition& lambda : partitions_of(size, r)) {
      if (!lambda.contains(nu)) continue;
      const auto strip = combinatorics::strip_data(lambda, nu);
      if (!strip.is_strip) continue;
      Laurent c = g_coeff(strip.size, m, variant) * wtbar(lambda, nu);
      if (!c.is_zero()) out[lambda] = c;
    }
  }
  return out;
}

std::map<Partition, Laurent> pieri_bruteforce(int m, const Partition& nu, int r) {
  return schur_expand(mul_sym(qtilde(m, r), schur(nu, r)));
}

}  // namespace mirhecke
