#include "mirhecke/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mirhecke/relations.hpp"

namespace mirhecke {

std::string to_string(const Letter& l) {
  switch (l.kind) {
    case Letter::Kind::T:
      return "T" + std::to_string(l.index);
    case Letter::Kind::TInv:
      return "T" + std::to_string(l.index) + "^-1";
    case Letter::Kind::P:
      return "P" + std::to_string(l.index);
  }
  return "?";
}

std::string to_string(const GeneratorWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

void validate(const GeneratorWord& w, int n) {
  for (const Letter& l : w) {
    const int hi = l.kind == Letter::Kind::P ? n : n - 1;
    if (l.index < 1 || l.index > hi) throw std::invalid_argument("generator " + to_string(l) + " out of range for rank " + std::to_string(n));
  }
}

AlgebraElement AlgebraElement::basis(const BasisIndex& idx, const Laurent& c) {
  AlgebraElement x(idx.n());
  x.add(idx, c);
  return x;
}

AlgebraElement AlgebraElement::identity(int n) { return basis({0, 0, Perm(n)}); }

Laurent AlgebraElement::coeff(const BasisIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Laurent() : it->second;
}

void AlgebraElement::add(const BasisIndex& idx, const Laurent& c) {
  if (c.is_zero()) return;
  if (idx.n() != n_) throw std::invalid_argument("basis index rank does not match element rank");
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_rank(const AlgebraElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("algebra elements of different rank");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_rank(o);
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_rank(o);
  for (const auto& [idx, c] : o.terms_) add(idx, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, x] : terms_) x *= c;
  return *this;
}

bool AlgebraElement::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_even(); });
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : x.terms()) {
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(c) << ")*[" << to_string(idx) << ']';
  }
  return out.str();
}

GeneratorWord basis_word(const BasisIndex& idx) {
  GeneratorWord word;
  for (int i : subset_word_letters(idx.A)) word.push_back(Letter::T(i));
  const int k = idx.k();
  if (k > 0) word.push_back(Letter::P(k));
  for (int i : idx.w.reduced_word()) word.push_back(Letter::T(i));
  const auto b = subset_word_letters(idx.B);
  for (auto it = b.rbegin(); it != b.rend(); ++it) word.push_back(Letter::Tinv(*it));
  return word;
}

namespace {

Laurent signed_unit(int exponent_parity) { return exponent_parity % 2 == 0 ? Laurent(1) : Laurent(-1); }

std::vector<int> descending(int from, int to) {
  std::vector<int> out;
  for (int i = from; i >= to; --i) out.push_back(i);
  return out;
}

}  // namespace

NormalForm::NormalForm(int n) : n_(n), basis_(standard_basis(n)) {}

const HeckeElement& NormalForm::tail(const Perm& w, Subset b) const {
  const auto key = std::make_pair(w, b);
  {
    std::lock_guard lock(mutex_);
    if (auto it = tail_cache_.find(key); it != tail_cache_.end()) return *it->second;
  }
  auto h = std::make_unique<HeckeElement>(HeckeElement::basis(w));
  const auto letters = subset_word_letters(b);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) *h = h->times_Tinv(*it);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = tail_cache_.try_emplace(key, std::move(h));
  return *it->second;
}

NormalForm::RightCoords NormalForm::right_coords(int k, const HeckeElement& h) const {
  RightCoords out;
  for (const auto& [z, c] : h.terms()) {
    ParabolicFactor f = split_right(z, k);
    RightKey key{f.coset.length(), f.coset, f.inner};
    Laurent value = f.sign > 0 ? c : -c;
    auto [it, inserted] = out.try_emplace(std::move(key), value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

const NormalForm::RightCoords& NormalForm::expansion(int k, const Perm& w, Subset b) const {
  const auto key = std::make_tuple(k, w, b);
  {
    std::lock_guard lock(mutex_);
    if (auto it = expansion_cache_.find(key); it != expansion_cache_.end()) return *it->second;
  }
  auto coords = std::make_unique<RightCoords>(right_coords(k, tail(w, b)));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = expansion_cache_.try_emplace(key, std::move(coords));
  return *it->second;
}

std::map<std::pair<Subset, Perm>, Laurent> NormalForm::right_normalize(int k, const HeckeElement& h) const {
  std::map<std::pair<Subset, Perm>, Laurent> result;
  RightCoords coords = right_coords(k, h);
  while (!coords.empty()) {
    const RightKey key = coords.begin()->first;
    Subset b = 0;
    for (int p = 1; p <= n_; ++p)
      if (key.d(p) <= k) b |= 1u << (p - 1);
    const RightCoords& e = expansion(k, key.w, b);
    auto lead = e.find(key);
    if (lead == e.end() || !(lead->second == Laurent::q_power(-key.len)))
      throw std::logic_error("right normalization: unexpected leading coefficient");
    const Laurent factor = coords.begin()->second * Laurent::q_power(key.len);
    result[{b, key.w}] += factor;
    for (const auto& [ek, ev] : e) {
      Laurent delta = factor * ev;
      auto [it, inserted] = coords.try_emplace(ek, -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second.is_zero()) coords.erase(it);
      }
    }
  }
  return result;
}

AlgebraElement NormalForm::sandwich(int k, const HeckeElement& left, const HeckeElement& right) const {
  std::map<Perm, HeckeElement> groups;
  for (const auto& [x, c] : left.terms()) {
    ParabolicFactor f = split_left(x, k);
    auto it = groups.try_emplace(f.coset, n_).first;
    it->second.add(f.inner, f.sign > 0 ? c : -c);
  }
  AlgebraElement out(n_);
  for (const auto& [d, inner] : groups) {
    Subset a = 0;
    for (int i = 1; i <= k; ++i) a |= 1u << (d(i) - 1);
    for (const auto& [bw, c] : right_normalize(k, inner * right)) out.add({a, bw.first, bw.second}, c);
  }
  return out;
}

AlgebraElement NormalForm::rmul_p1(const BasisIndex& idx) const {
  const int k = idx.k();
  const HeckeElement left = HeckeElement::basis(subset_shuffle(idx.A, n_));
  const HeckeElement& h = tail(idx.w, idx.B);
  const Laurent q = Laurent::q();
  const Laurent minus_q = -q;

  // P_k T_k ... T_1 P_1 = sum_{m=1}^{k} (-q)^{m-1}(q-1) P_k T_k ... T_{m+1} + (-q)^k P_{k+1}
  HeckeElement same(n_);
  std::map<int, HeckeElement> raised;
  for (const auto& [z, c] : h.terms()) {
    const int j = z(1);
    const Perm lead = Perm::from_word(n_, descending(j - 1, 1));
    const HeckeElement te = HeckeElement::basis(lead.inverse() * z);
    if (j <= k) {
      HeckeElement part = te;
      part *= signed_unit(j - 1) * c;
      same += part;
      continue;
    }
    for (int m = 1; m <= k; ++m) {
      HeckeElement part = HeckeElement::word(n_, descending(j - 1, m + 1)) * te;
      part *= pow(minus_q, static_cast<unsigned>(m - 1)) * (q - 1) * c;
      same += part;
    }
    HeckeElement part = te;
    part *= pow(minus_q, static_cast<unsigned>(k)) * c;
    raised.try_emplace(j, n_).first->second += part;
  }
  AlgebraElement out = sandwich(k, left, same);
  for (const auto& [j, right] : raised)
    out += sandwich(k + 1, left * HeckeElement::word(n_, descending(j - 1, k + 1)), right);
  return out;
}

AlgebraElement NormalForm::compute_rmul(const BasisIndex& idx, const Letter& g) const {
  switch (g.kind) {
    case Letter::Kind::T:
      return sandwich(idx.k(), HeckeElement::basis(subset_shuffle(idx.A, n_)), tail(idx.w, idx.B).times_T(g.index));
    case Letter::Kind::TInv:
      return sandwich(idx.k(), HeckeElement::basis(subset_shuffle(idx.A, n_)),
                      tail(idx.w, idx.B).times_Tinv(g.index));
    case Letter::Kind::P:
      break;
  }
  if (g.index == 1) return rmul_p1(idx);
  // P_j = -P_{j-1} T_{j-1}^{-1} P_{j-1}
  AlgebraElement x = rmul(idx, Letter::P(g.index - 1));
  x = rmul(x, Letter::Tinv(g.index - 1));
  x = rmul(x, Letter::P(g.index - 1));
  x *= Laurent(-1);
  return x;
}

AlgebraElement NormalForm::rmul(const BasisIndex& idx, const Letter& g) const {
  validate(GeneratorWord{g}, n_);
  const auto key = std::make_pair(idx, g);
  {
    std::lock_guard lock(mutex_);
    if (auto it = rmul_cache_.find(key); it != rmul_cache_.end()) return it->second;
  }
  AlgebraElement x = compute_rmul(idx, g);
  std::lock_guard lock(mutex_);
  return rmul_cache_.try_emplace(key, std::move(x)).first->second;
}

AlgebraElement NormalForm::rmul(const AlgebraElement& x, const Letter& g) const {
  if (x.n() != n_) throw std::invalid_argument("element rank does not match the engine");
  AlgebraElement out(n_);
  for (const auto& [idx, c] : x.terms()) {
    AlgebraElement part = rmul(idx, g);
    part *= c;
    out += part;
  }
  return out;
}

AlgebraElement NormalForm::rmul(const AlgebraElement& x, const GeneratorWord& w) const {
  AlgebraElement out = x;
  for (const Letter& g : w) out = rmul(out, g);
  return out;
}

AlgebraElement NormalForm::reduce(const GeneratorWord& w) const {
  validate(w, n_);
  return rmul(AlgebraElement::identity(n_), w);
}

const NormalForm& normal_form(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<NormalForm>> engines;
  std::lock_guard lock(mutex);
  auto& slot = engines[n];
  if (!slot) slot = std::make_unique<NormalForm>(n);
  return *slot;
}

AlgebraElement reduce_word(int n, const GeneratorWord& w) { return normal_form(n).reduce(w); }

AlgebraElement rmul_gen(const AlgebraElement& x, const Letter& g) { return normal_form(x.n()).rmul(x, g); }

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("mul: elements of different rank");
  const NormalForm& nf = normal_form(x.n());
  AlgebraElement out(x.n());
  for (const auto& [idx, c] : y.terms()) {
    AlgebraElement part = nf.rmul(x, basis_word(idx));
    part *= c;
    out += part;
  }
  return out;
}

namespace {

void check_composition(int n, const Composition& mu) {
  int total = 0;
  for (int p : mu) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    total += p;
  }
  if (total > n) throw std::invalid_argument("hat_T: |mu| exceeds n");
}

std::vector<int> cycle_letters(int n, const Composition& mu) {
  int start = n - std::accumulate(mu.begin(), mu.end(), 0);
  std::vector<int> letters;
  for (int part : mu) {
    for (int i = start + 1; i <= start + part - 1; ++i) letters.push_back(i);
    start += part;
  }
  return letters;
}

GeneratorWord shifted(const GeneratorWord& w) {
  GeneratorWord out = w;
  for (Letter& l : out) ++l.index;
  return out;
}

}  // namespace

AlgebraElement hat_T(int n, const Composition& mu) {
  check_composition(n, mu);
  const int j = n - std::accumulate(mu.begin(), mu.end(), 0);
  const Subset a = j == 0 ? 0 : (1u << j) - 1;
  return AlgebraElement::basis({a, a, Perm::from_word(n, cycle_letters(n, mu))});
}

GeneratorWord hat_T_word(int n, const Composition& mu) {
  check_composition(n, mu);
  GeneratorWord w;
  const int j = n - std::accumulate(mu.begin(), mu.end(), 0);
  if (j > 0) w.push_back(Letter::P(j));
  for (int i : cycle_letters(n, mu)) w.push_back(Letter::T(i));
  return w;
}

AlgebraElement iota(const AlgebraElement& x) {
  const NormalForm& nf = normal_form(x.n() + 1);
  AlgebraElement out(x.n() + 1);
  for (const auto& [idx, c] : x.terms()) {
    AlgebraElement part = nf.reduce(shifted(basis_word(idx)));
    part *= c;
    out += part;
  }
  return out;
}

AlgebraElement rho(const AlgebraElement& x) {
  const NormalForm& nf = normal_form(x.n() + 1);
  AlgebraElement out(x.n() + 1);
  for (const auto& [idx, c] : x.terms()) {
    GeneratorWord w{Letter::P(1)};
    for (const Letter& l : shifted(basis_word(idx))) w.push_back(l);
    AlgebraElement part = nf.reduce(w);
    part *= c;
    out += part;
  }
  return out;
}

AlgebraElement star(const AlgebraElement& x) {
  const NormalForm& nf = normal_form(x.n());
  AlgebraElement out(x.n());
  for (const auto& [idx, c] : x.terms()) {
    GeneratorWord w = basis_word(idx);
    std::reverse(w.begin(), w.end());
    AlgebraElement part = nf.reduce(w);
    part *= c;
    out += part;
  }
  return out;
}

AlgebraElement t_zero(int n) {
  const Laurent q = Laurent::q();
  AlgebraElement t = (q - 1) * AlgebraElement::identity(n);
  t -= q * AlgebraElement::basis({1, 1, Perm(n)});
  return t;
}

Report check_relations(int n) {
  Report report;
  const NormalForm& nf = normal_form(n);
  for (const Relation& rel : defining_relations(n)) {
    AlgebraElement x(n);
    for (const auto& [w, c] : rel.difference.terms()) {
      AlgebraElement part = nf.reduce(w);
      part *= c;
      x += part;
    }
    report.add(rel.name, n, std::nullopt, x.is_zero(), to_string(x));
  }
  for (int k = 1; k <= n; ++k) {
    const Subset first = (1u << k) - 1;
    const AlgebraElement x = nf.reduce({Letter::P(k)}) - AlgebraElement::basis({first, first, Perm(n)});
    report.add("P" + std::to_string(k) + " reduces to the basis element A = B = {1.." + std::to_string(k) + "}", n,
               std::nullopt, x.is_zero(), to_string(x));
  }
  return report;
}

}  // namespace mirhecke
