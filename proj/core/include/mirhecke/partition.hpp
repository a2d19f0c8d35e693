#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mirhecke/laurent.hpp"

namespace mirhecke {

/// Integer partition. The empty partition is the unique partition of 0.
///
/// Ordering is the canonical one used everywhere in output: graded by size,
/// then reverse-lexicographic within a grade, so (2) precedes (1,1).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts the (nonnegative) parts of a composition and drops zeros.
  static Partition sorted_from(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Row i (0-based); zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// nu ⊆ this, row by row.
  bool contains(const Partition& nu) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Order-significant list of nonnegative parts.
using Composition = std::vector<int>;

/// "3.2.1"; the empty partition prints as "0".
std::string to_string(const Partition& p);
/// Accepts "3.2.1", "0" or "" (empty partition). Parts must be weakly decreasing.
Partition parse_partition(std::string_view text);
/// Dot-separated positive parts in any order, "0"/"" for the empty composition.
Composition parse_composition(std::string_view text);

/// Partitions of k in reverse-lexicographic order.
std::vector<Partition> partitions_of(int k);
/// All partitions of every k <= n, in canonical order.
std::vector<Partition> partitions_up_to(int n);

/// Partitions of k that also fit into `max_length` rows.
std::vector<Partition> partitions_of(int k, int max_length);

/// Dominance order on partitions of equal size: a ⊵ b.
bool dominates(const Partition& a, const Partition& b);

namespace combinatorics {

struct StripComponent {
  int rows = 0;     // ro(b)
  int columns = 0;  // co(b)
  friend bool operator==(const StripComponent&, const StripComponent&) = default;
};

struct SkewStripData {
  bool is_strip = false;
  int size = 0;
  /// Connected components; 0 for the empty skew shape.
  int cc = 0;
  /// Components in the row-reading order of their first box.
  std::vector<StripComponent> components;
};

/// Classifies lambda/nu. Throws std::invalid_argument when nu ⊄ lambda.
SkewStripData strip_data(const Partition& lambda, const Partition& nu);

/// Number of semistandard tableaux of shape lambda and content mu
/// (mu any composition with |mu| = |lambda|). Memoized, thread-safe.
BigInt kostka(const Partition& lambda, const Composition& mu);
inline BigInt kostka(const Partition& lambda, const Partition& mu) { return kostka(lambda, mu.parts()); }

BigInt binomial(int n, int k);
BigInt factorial(int n);

}  // namespace combinatorics
}  // namespace mirhecke

template <>
struct std::hash<mirhecke::Partition> {
  std::size_t operator()(const mirhecke::Partition& p) const noexcept {
    std::size_t h = 0;
    for (int x : p.parts()) h = h * 131 + static_cast<std::size_t>(x);
    return h;
  }
};
