#include "mirhecke/tensorrep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "mirhecke/linear_algebra.hpp"
#include "mirhecke/relations.hpp"

namespace mirhecke {

TensorSpace::TensorSpace(int n, int r) : n_(n), r_(r), size_(1) {
  if (n < 1 || r < 1) throw std::invalid_argument("tensor space needs n >= 1 and r >= 1");
  place_.assign(static_cast<std::size_t>(n + 1), 0);
  for (int i = n; i >= 1; --i) {
    place_[static_cast<std::size_t>(i)] = size_;
    if (size_ > (WordCode{1} << 40) / static_cast<WordCode>(r + 1)) throw std::invalid_argument("tensor space too large");
    size_ *= static_cast<WordCode>(r + 1);
  }
}

WordCode TensorSpace::encode(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != n_) throw std::invalid_argument("word has the wrong length");
  WordCode code = 0;
  for (int k : word) {
    if (k < 1 || k > r_ + 1) throw std::invalid_argument("word letter out of range");
    code = code * static_cast<WordCode>(r_ + 1) + static_cast<WordCode>(k - 1);
  }
  return code;
}

std::vector<int> TensorSpace::decode(WordCode code) const {
  std::vector<int> word(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) word[static_cast<std::size_t>(i - 1)] = letter(code, i);
  return word;
}

int TensorSpace::letter(WordCode code, int i) const {
  return static_cast<int>((code / place_[static_cast<std::size_t>(i)]) % static_cast<WordCode>(r_ + 1)) + 1;
}

WordCode TensorSpace::with_letter(WordCode code, int i, int value) const {
  const WordCode p = place_[static_cast<std::size_t>(i)];
  return code - static_cast<WordCode>(letter(code, i) - 1) * p + static_cast<WordCode>(value - 1) * p;
}

TensorState TensorState::basis(const TensorSpace& space, WordCode w, const Laurent& c) {
  TensorState s(space.n(), space.r());
  s.add(w, c);
  return s;
}

Laurent TensorState::coeff(WordCode w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

void TensorState::add(WordCode w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorState& TensorState::operator+=(const TensorState& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

TensorState& TensorState::operator-=(const TensorState& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

TensorState& TensorState::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

TensorState apply_R(const TensorSpace& space, int i, const TensorState& v) {
  if (i < 1 || i >= space.n()) throw std::invalid_argument("apply_R: position out of range");
  static const Laurent minus_v = -Laurent::v();
  static const Laurent q_minus_1 = Laurent::q() - 1;
  TensorState out(space.n(), space.r());
  for (const auto& [w, c] : v.terms()) {
    const int a = space.letter(w, i);
    const int b = space.letter(w, i + 1);
    if (a == b) {
      out.add(w, -c);
      continue;
    }
    const WordCode swapped = space.with_letter(space.with_letter(w, i, b), i + 1, a);
    out.add(swapped, minus_v * c);
    if (a > b) out.add(w, q_minus_1 * c);
  }
  return out;
}

TensorState apply_Rinv(const TensorSpace& space, int i, const TensorState& v) {
  static const Laurent q_inv = Laurent::q_power(-1);
  static const Laurent shift = Laurent::q_power(-1) - 1;
  TensorState out = apply_R(space, i, v);
  out *= q_inv;
  TensorState rest = v;
  rest *= shift;
  out += rest;
  return out;
}

TensorState apply_e(const TensorSpace& space, int j, const TensorState& v) {
  if (j < 1 || j > space.n()) throw std::invalid_argument("apply_e: position out of range");
  TensorState out(space.n(), space.r());
  for (const auto& [w, c] : v.terms()) {
    bool keep = true;
    for (int i = 1; i <= j && keep; ++i) keep = space.letter(w, i) == space.r() + 1;
    if (keep) out.add(w, c);
  }
  return out;
}

TensorState apply_letter(const TensorSpace& space, const Letter& g, const TensorState& v) {
  switch (g.kind) {
    case Letter::Kind::T:
      return apply_R(space, g.index, v);
    case Letter::Kind::TInv:
      return apply_Rinv(space, g.index, v);
    case Letter::Kind::P:
      return apply_e(space, g.index, v);
  }
  throw std::logic_error("unknown letter");
}

TensorState psi_apply(const TensorSpace& space, const GeneratorWord& word, const TensorState& v) {
  TensorState out = v;
  for (auto it = word.rbegin(); it != word.rend() && !out.is_zero(); ++it) out = apply_letter(space, *it, out);
  return out;
}

TensorState psi_apply(const TensorSpace& space, const AlgebraElement& x, const TensorState& v) {
  if (x.n() != space.n()) throw std::invalid_argument("psi_apply: rank mismatch");
  TensorState out(space.n(), space.r());
  for (const auto& [idx, c] : x.terms()) {
    TensorState part = psi_apply(space, basis_word(idx), v);
    part *= c;
    out += part;
  }
  return out;
}

PsiMatrix::PsiMatrix(const TensorSpace& space)
    : space_(&space), columns_(static_cast<std::size_t>(space.size()), TensorState(space.n(), space.r())) {}

PsiMatrix PsiMatrix::of(const TensorSpace& space, const GeneratorWord& w) {
  PsiMatrix m(space);
  for (WordCode c = 0; c < space.size(); ++c) m.columns_[c] = psi_apply(space, w, TensorState::basis(space, c));
  return m;
}

PsiMatrix PsiMatrix::of(const TensorSpace& space, const AlgebraElement& x) {
  PsiMatrix m(space);
  for (const auto& [idx, c] : x.terms()) {
    PsiMatrix part = of(space, basis_word(idx));
    part *= c;
    m += part;
  }
  return m;
}

PsiMatrix& PsiMatrix::operator+=(const PsiMatrix& o) {
  for (std::size_t i = 0; i < columns_.size(); ++i) columns_[i] += o.columns_[i];
  return *this;
}

PsiMatrix& PsiMatrix::operator*=(const Laurent& c) {
  for (auto& col : columns_) col *= c;
  return *this;
}

TensorState PsiMatrix::apply(const TensorState& v) const {
  TensorState out(space_->n(), space_->r());
  for (const auto& [w, c] : v.terms()) {
    TensorState part = columns_[w];
    part *= c;
    out += part;
  }
  return out;
}

PsiMatrix PsiMatrix::compose(const PsiMatrix& o) const {
  PsiMatrix out(*space_);
  for (std::size_t i = 0; i < columns_.size(); ++i) out.columns_[i] = apply(o.columns_[i]);
  return out;
}

std::vector<int> word_content(const TensorSpace& space, WordCode w) {
  std::vector<int> content(static_cast<std::size_t>(space.r()), 0);
  for (int i = 1; i <= space.n(); ++i) {
    const int k = space.letter(w, i);
    if (k <= space.r()) ++content[static_cast<std::size_t>(k - 1)];
  }
  return content;
}

namespace {

Laurent diagonal(const TensorSpace& space, const std::vector<std::pair<GeneratorWord, Laurent>>& words, WordCode w) {
  Laurent total;
  const TensorState e = TensorState::basis(space, w);
  for (const auto& [word, c] : words) {
    const Laurent d = psi_apply(space, word, e).coeff(w);
    if (!d.is_zero()) total += c * d;
  }
  return total;
}

// Runs f(i) for i in [0, count) on `jobs` threads, results in order.
template <class F>
std::vector<Laurent> parallel_map(std::size_t count, int jobs, F f) {
  std::vector<Laurent> out(count);
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += workers) out[i] = f(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

// Words of content lambda (lambda_a copies of letter a, the rest r+1).
std::vector<WordCode> words_of_content(const TensorSpace& space, const Partition& lambda) {
  std::vector<int> letters;
  for (int a = 0; a < lambda.length(); ++a)
    letters.insert(letters.end(), static_cast<std::size_t>(lambda[static_cast<std::size_t>(a)]), a + 1);
  letters.resize(static_cast<std::size_t>(space.n()), space.r() + 1);
  std::sort(letters.begin(), letters.end());
  std::vector<WordCode> out;
  do {
    out.push_back(space.encode(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace

SymPoly trace_D(const AlgebraElement& x, int r, bool full, int jobs) {
  const TensorSpace space(x.n(), r);
  std::vector<std::pair<GeneratorWord, Laurent>> words;
  for (const auto& [idx, c] : x.terms()) words.emplace_back(basis_word(idx), c);

  SymPoly out(r);
  if (!full) {
    std::vector<std::pair<Partition, WordCode>> cells;
    for (int k = 0; k <= x.n(); ++k)
      for (const Partition& lambda : partitions_of(k, r))
        for (WordCode w : words_of_content(space, lambda)) cells.emplace_back(lambda, w);
    const auto values = parallel_map(cells.size(), jobs, [&](std::size_t i) { return diagonal(space, words, cells[i].second); });
    for (std::size_t i = 0; i < cells.size(); ++i) out.add(cells[i].first, values[i]);
    return out;
  }

  const auto values = parallel_map(static_cast<std::size_t>(space.size()), jobs,
                                   [&](std::size_t i) { return diagonal(space, words, static_cast<WordCode>(i)); });
  std::map<std::vector<int>, Laurent> by_content;
  for (WordCode w = 0; w < space.size(); ++w) by_content[word_content(space, w)] += values[w];
  for (const auto& [content, c] : by_content) {
    if (std::is_sorted(content.begin(), content.end(), std::greater<>()) && !c.is_zero())
      out.add(Partition::sorted_from(content), c);
  }
  for (const auto& [content, c] : by_content)
    if (!(out.coeff(Partition::sorted_from(content)) == c)) throw std::logic_error("weighted trace is not symmetric");
  return out;
}

std::map<Partition, Laurent> char_oracle(const AlgebraElement& x, int r, int jobs) {
  if (r < x.n()) throw std::invalid_argument("char_oracle needs r >= n");
  return schur_expand(trace_D(x, r, false, jobs));
}

Report verify_rep_relations(int n, int r) {
  Report report;
  const TensorSpace space(n, r);
  for (const Relation& rel : defining_relations(n)) {
    std::optional<std::string> witness;
    for (WordCode w = 0; w < space.size() && !witness; ++w) {
      const TensorState e = TensorState::basis(space, w);
      TensorState total(n, r);
      for (const auto& [word, c] : rel.difference.terms()) {
        TensorState part = psi_apply(space, word, e);
        part *= c;
        total += part;
      }
      if (!total.is_zero()) {
        std::string s;
        for (int k : space.decode(w)) s += std::to_string(k) + ' ';
        witness = "basis word " + s;
      }
    }
    report.add(rel.name, n, r, !witness, witness);
  }

  // Every generator preserves the content of a word.
  std::optional<std::string> witness;
  for (WordCode w = 0; w < space.size() && !witness; ++w) {
    const auto content = word_content(space, w);
    const TensorState e = TensorState::basis(space, w);
    std::vector<Letter> letters;
    for (int i = 1; i < n; ++i) letters.push_back(Letter::T(i));
    for (int j = 1; j <= n; ++j) letters.push_back(Letter::P(j));
    for (const Letter& g : letters) {
      const TensorState image = apply_letter(space, g, e);
      for (const auto& [u, c] : image.terms())
        if (word_content(space, u) != content) witness = to_string(g) + " on word code " + std::to_string(w);
    }
  }
  report.add("generators preserve weight spaces", n, r, !witness, witness);
  return report;
}

namespace {

int inversions(const TensorSpace& space, WordCode w) {
  const auto word = space.decode(w);
  int inv = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inv;
  return inv;
}

}  // namespace

std::size_t image_rank(int n, int r, const BigRational& q0, const std::optional<BigRational>& v0) {
  if (q0 == 0) throw std::invalid_argument("image_rank: q0 must be nonzero");
  if (v0 && *v0 * *v0 != q0) throw std::invalid_argument("image_rank: v0^2 must equal q0");
  const TensorSpace space(n, r);
  std::vector<int> inv(static_cast<std::size_t>(space.size()));
  for (WordCode w = 0; w < space.size(); ++w) inv[w] = inversions(space, w);

  std::vector<std::map<std::uint64_t, BigRational>> rows;
  std::set<std::uint64_t> support;
  for (const BasisIndex& idx : standard_basis(n)) {
    const PsiMatrix m = PsiMatrix::of(space, basis_word(idx));
    std::map<std::uint64_t, BigRational> row;
    for (WordCode w = 0; w < space.size(); ++w) {
      for (const auto& [u, c] : m.column(w).terms()) {
        BigRational value = v0 ? specialize_v(c, *v0) : specialize_q(c.shifted(inv[u] - inv[w]), q0);
        if (value == 0) continue;
        const std::uint64_t key = u * space.size() + w;
        row.emplace(key, std::move(value));
        support.insert(key);
      }
    }
    rows.push_back(std::move(row));
  }
  const std::vector<std::uint64_t> cols(support.begin(), support.end());
  Matrix<BigRational> dense(rows.size(), std::vector<BigRational>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [key, value] : rows[i])
      dense[i][static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), key) - cols.begin())] = value;
  return rank(dense);
}

}  // namespace mirhecke
