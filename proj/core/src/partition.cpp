#include "mirhecke/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mirhecke {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::sorted_from(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; !parts_.empty() && j <= parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& nu) const {
  if (nu.length() > length()) return false;
  for (std::size_t i = 0; i < nu.parts_.size(); ++i)
    if (nu.parts_[i] > parts_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Reverse lexicographic: larger leading parts come first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) out << '.';
    out << p.parts()[static_cast<std::size_t>(i)];
  }
  return out.str();
}

Composition parse_composition(std::string_view text) {
  Composition parts;
  if (text.empty() || text == "0") return parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view token = text.substr(start, dot - start);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed partition string: '" + std::string(text) + "'");
    const int part = std::stoi(std::string(token));
    if (part < 1) throw std::invalid_argument("partition parts must be positive: '" + std::string(text) + "'");
    parts.push_back(part);
    start = dot + 1;
  }
  return parts;
}

Partition parse_partition(std::string_view text) { return Partition(parse_composition(text)); }

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_length, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k, int max_length) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, k, max_length, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int k) { return partitions_of(k, std::max(k, 0)); }

std::vector<Partition> partitions_up_to(int n) {
  if (n < 0) throw std::invalid_argument("partitions_up_to: negative bound");
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto grade = partitions_of(k);
    out.insert(out.end(), grade.begin(), grade.end());
  }
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += a[static_cast<std::size_t>(i)];
    sb += b[static_cast<std::size_t>(i)];
    if (sa < sb) return false;
  }
  return true;
}

namespace combinatorics {

SkewStripData strip_data(const Partition& lambda, const Partition& nu) {
  if (!lambda.contains(nu)) throw std::invalid_argument("strip_data: nu is not contained in lambda");
  // Boxes (row, col), 0-based, in reading order.
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = nu[static_cast<std::size_t>(i)]; j < lambda[static_cast<std::size_t>(i)]; ++j)
      boxes.emplace_back(i, j);

  auto in_skew = [&](int i, int j) {
    return i >= 0 && j >= nu[static_cast<std::size_t>(i)] && j < lambda[static_cast<std::size_t>(i)];
  };

  SkewStripData d;
  d.size = static_cast<int>(boxes.size());
  for (const auto& [i, j] : boxes) {
    if (in_skew(i, j + 1) && in_skew(i + 1, j) && in_skew(i + 1, j + 1)) {
      d.is_strip = false;
      return d;
    }
  }
  d.is_strip = true;

  std::vector<int> parent(boxes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::map<std::pair<int, int>, int> id;
  for (std::size_t k = 0; k < boxes.size(); ++k) id[boxes[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const auto [i, j] = boxes[k];
    for (auto nb : {std::pair{i, j + 1}, std::pair{i + 1, j}}) {
      auto it = id.find(nb);
      if (it != id.end()) parent[static_cast<std::size_t>(find(static_cast<int>(k)))] = find(it->second);
    }
  }

  std::map<int, std::pair<std::vector<int>, std::vector<int>>> groups;  // root -> rows, cols
  std::vector<int> order;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const int root = find(static_cast<int>(k));
    if (!groups.count(root)) order.push_back(root);
    groups[root].first.push_back(boxes[k].first);
    groups[root].second.push_back(boxes[k].second);
  }
  for (int root : order) {
    auto& [rows, cols] = groups[root];
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    d.components.push_back({static_cast<int>(rows.size()), static_cast<int>(cols.size())});
  }
  d.cc = static_cast<int>(d.components.size());
  return d;
}

namespace {

// Removes horizontal strips of size mu.back() from lambda, recursively.
BigInt kostka_rec(const std::vector<int>& lambda, const std::vector<int>& mu,
                  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<int> rest(mu.begin(), mu.end() - 1);
  const int strip = mu.back();
  BigInt total = 0;
  // Choose how many boxes to remove from each row: row i may lose at most
  // lambda[i] - lambda[i+1] boxes (horizontal strip condition).
  std::vector<int> shape = lambda;
  const std::size_t rows = shape.size();
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == rows) {
      if (left != 0) return;
      std::vector<int> inner = shape;
      while (!inner.empty() && inner.back() == 0) inner.pop_back();
      total += kostka_rec(inner, rest, memo);
      return;
    }
    const int below = row + 1 < rows ? lambda[row + 1] : 0;
    const int cap = std::min(left, lambda[row] - below);
    for (int take = 0; take <= cap; ++take) {
      shape[row] = lambda[row] - take;
      self(self, row + 1, left - take);
    }
    shape[row] = lambda[row];
  };
  rec(rec, 0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt kostka(const Partition& lambda, const Composition& mu) {
  int total = 0;
  for (int x : mu) {
    if (x < 0) throw std::invalid_argument("kostka: negative content");
    total += x;
  }
  if (total != lambda.size()) throw std::invalid_argument("kostka: size mismatch between shape and content");
  std::vector<int> content;
  for (int x : mu)
    if (x > 0) content.push_back(x);

  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
  std::lock_guard lock(mutex);
  return kostka_rec(lambda.parts(), content, memo);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(int n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace combinatorics
}  // namespace mirhecke
