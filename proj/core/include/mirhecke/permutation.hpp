#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mirhecke {

inline constexpr int kMaxRank = 12;

/// Permutation of {1..n} stored as its image list. Composition is functional:
/// (a * b)(i) = a(b(i)). The simple reflection s_i swaps i and i+1, and the
/// Hecke element of a reduced word s_{i1}...s_{il} is T_{i1}...T_{il}.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);  // identity
  static Perm from_images(std::span<const int> images);  // 1-based images
  static Perm from_word(int n, std::span<const int> word);
  static Perm simple(int n, int i);

  int size() const { return n_; }
  /// Image of i (1-based).
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }
  std::vector<int> images() const;

  int length() const;
  bool is_identity() const;
  Perm inverse() const;
  /// x * s_i (swap positions i, i+1).
  Perm times_simple(int i) const;
  /// s_i * x (swap values i, i+1).
  Perm simple_times(int i) const;
  /// Length goes up under right multiplication by s_i.
  bool right_ascent(int i) const { return img_[static_cast<std::size_t>(i - 1)] < img_[static_cast<std::size_t>(i)]; }

  /// Canonical reduced word: strip the leftmost right descent first.
  std::vector<int> reduced_word() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b);

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxRank> img_{};
  std::uint8_t n_ = 0;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

/// Split of a permutation with respect to the parabolic subgroup
/// S_k x S'_{n-k} (S_k on 1..k, S'_{n-k} on k+1..n).
struct ParabolicFactor {
  Perm coset;   // distinguished coset representative
  Perm inner;   // the S'_{n-k} component
  int sign = 1; // (-1)^{length of the S_k component}
};

/// x = d * y with d minimal in x (S_k x S'_{n-k}).
ParabolicFactor split_left(const Perm& x, int k);
/// z = y * d with d minimal in (S_k x S'_{n-k}) z.
ParabolicFactor split_right(const Perm& z, int k);

}  // namespace mirhecke
