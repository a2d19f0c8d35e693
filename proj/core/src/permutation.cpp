#include "mirhecke/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mirhecke {

Perm::Perm(int n) : n_(static_cast<std::uint8_t>(n)) {
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("permutation rank out of range");
  for (int i = 0; i < n; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  Perm p(n);
  std::array<bool, kMaxRank> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("image list is not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::from_word(int n, std::span<const int> word) {
  Perm p(n);
  for (int i : word) p = p.times_simple(i);
  return p;
}

Perm Perm::simple(int n, int i) { return Perm(n).times_simple(i); }

std::vector<int> Perm::images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
  return out;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r(n_);
  for (int i = 0; i < n_; ++i) r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm Perm::times_simple(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("simple reflection index out of range");
  Perm r = *this;
  std::swap(r.img_[static_cast<std::size_t>(i - 1)], r.img_[static_cast<std::size_t>(i)]);
  return r;
}

Perm Perm::simple_times(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("simple reflection index out of range");
  Perm r = *this;
  for (int p = 0; p < n_; ++p) {
    auto& v = r.img_[static_cast<std::size_t>(p)];
    if (v == i - 1)
      v = static_cast<std::uint8_t>(i);
    else if (v == i)
      v = static_cast<std::uint8_t>(i - 1);
  }
  return r;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm cur = *this;
  for (;;) {
    int d = 0;
    for (int i = 1; i < cur.n_; ++i) {
      if (!cur.right_ascent(i)) {
        d = i;
        break;
      }
    }
    if (d == 0) break;
    word.push_back(d);
    cur = cur.times_simple(d);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("composing permutations of different rank");
  Perm r(a.n_);
  for (int i = 0; i < a.n_; ++i) r.img_[static_cast<std::size_t>(i)] = a.img_[b.img_[static_cast<std::size_t>(i)]];
  return r;
}

std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin(),
                                                b.img_.begin() + b.n_);
}

std::size_t Perm::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 31 + img_[static_cast<std::size_t>(i)];
  return h;
}

namespace {

int block_sign(const Perm& y, int k) {
  int inv = 0;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (y(i) > y(j)) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Perm outer_part(const Perm& y, int k) {
  std::vector<int> img(static_cast<std::size_t>(y.size()));
  for (int i = 1; i <= y.size(); ++i) img[static_cast<std::size_t>(i - 1)] = i <= k ? i : y(i);
  return Perm::from_images(img);
}

}  // namespace

ParabolicFactor split_left(const Perm& x, int k) {
  // Sort the values inside each block of positions.
  std::vector<int> img = x.images();
  std::sort(img.begin(), img.begin() + k);
  std::sort(img.begin() + k, img.end());
  Perm d = Perm::from_images(img);
  Perm y = d.inverse() * x;
  return {d, outer_part(y, k), block_sign(y, k)};
}

ParabolicFactor split_right(const Perm& z, int k) {
  const int n = z.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  int low = 1, high = k + 1;
  for (int p = 1; p <= n; ++p) img[static_cast<std::size_t>(p - 1)] = z(p) <= k ? low++ : high++;
  Perm d = Perm::from_images(img);
  Perm y = z * d.inverse();
  return {d, outer_part(y, k), block_sign(y, k)};
}

}  // namespace mirhecke
