#include "mirhecke/basis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mirhecke/partition.hpp"

namespace mirhecke {

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

Subset subset_from(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxRank) throw std::invalid_argument("subset element out of range");
    if (s & (1u << (e - 1))) throw std::invalid_argument("repeated subset element");
    s |= 1u << (e - 1);
  }
  return s;
}

int subset_size(Subset s) { return std::popcount(s); }

namespace {

std::strong_ordering compare_subsets(Subset a, Subset b) {
  auto ea = subset_elements(a), eb = subset_elements(b);
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace

std::strong_ordering operator<=>(const BasisIndex& a, const BasisIndex& b) {
  if (auto c = a.k() <=> b.k(); c != 0) return c;
  if (auto c = compare_subsets(a.A, b.A); c != 0) return c;
  if (auto c = compare_subsets(a.B, b.B); c != 0) return c;
  return a.w <=> b.w;
}

void validate(const BasisIndex& idx, int n) {
  if (idx.w.size() != n) throw std::invalid_argument("basis index has the wrong rank");
  const Subset full = n == 32 ? ~0u : (1u << n) - 1;
  if ((idx.A & ~full) || (idx.B & ~full)) throw std::invalid_argument("basis index subset out of range");
  if (subset_size(idx.A) != subset_size(idx.B)) throw std::invalid_argument("basis index needs |A| = |B|");
  for (int i = 1; i <= idx.k(); ++i)
    if (idx.w(i) != i) throw std::invalid_argument("basis index permutation must fix 1..k");
}

std::vector<BasisIndex> standard_basis(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("standard_basis: rank out of range");
  std::vector<BasisIndex> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<Subset> subsets;
    for (Subset s = 0; s < (1u << n); ++s)
      if (subset_size(s) == k) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](Subset a, Subset b) { return compare_subsets(a, b) < 0; });

    std::vector<Perm> perms;
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
      perms.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin() + k, img.end()));

    for (Subset a : subsets)
      for (Subset b : subsets)
        for (const Perm& w : perms) out.push_back({a, b, w});
  }
  return out;
}

BigInt dimension_formula(int n) {
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt c = combinatorics::binomial(n, k);
    total += c * c * combinatorics::factorial(k);
  }
  return total;
}

Perm subset_shuffle(Subset a, int n) {
  std::vector<int> img = subset_elements(a);
  for (int i = 1; i <= n; ++i)
    if (!(a & (1u << (i - 1)))) img.push_back(i);
  return Perm::from_images(img);
}

std::vector<int> subset_word_letters(Subset a) {
  std::vector<int> letters;
  const auto elements = subset_elements(a);
  for (int i = 1; i <= static_cast<int>(elements.size()); ++i)
    for (int j = elements[static_cast<std::size_t>(i - 1)] - 1; j >= i; --j) letters.push_back(j);
  return letters;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  std::stringstream in(s);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed integer list: '" + s + "'");
    out.push_back(std::stoi(token));
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

BasisIndex parse_basis_index(std::string_view text, int n) {
  BasisIndex idx;
  idx.w = Perm(n);
  bool seen_a = false, seen_b = false;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(start, end - start);
    start = end + 1;
    if (field.empty()) continue;
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("malformed basis index field: '" + std::string(field) + "'");
    std::string_view key = field.substr(0, eq);
    std::vector<int> values = parse_int_list(field.substr(eq + 1));
    if (key == "A") {
      idx.A = subset_from(values);
      seen_a = true;
    } else if (key == "B") {
      idx.B = subset_from(values);
      seen_b = true;
    } else if (key == "w") {
      idx.w = Perm::from_images(values);
    } else {
      throw std::invalid_argument("unknown basis index field: '" + std::string(key) + "'");
    }
  }
  if (!seen_a || !seen_b) throw std::invalid_argument("basis index needs both A= and B=");
  validate(idx, n);
  return idx;
}

std::string to_string(const BasisIndex& idx) {
  return "A=" + join(subset_elements(idx.A)) + ";B=" + join(subset_elements(idx.B)) + ";w=" + join(idx.w.images());
}

}  // namespace mirhecke
