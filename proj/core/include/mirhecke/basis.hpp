#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mirhecke/laurent.hpp"
#include "mirhecke/permutation.hpp"

namespace mirhecke {

/// Subset of {1..n} as a bitmask (bit i-1 set when i is a member).
using Subset = std::uint32_t;

std::vector<int> subset_elements(Subset s);
Subset subset_from(const std::vector<int>& elements);
int subset_size(Subset s);

/// Index (A, B, w) of the standard basis element T_A P_k T_w T_B^{-1}, with
/// |A| = |B| = k and w fixing 1..k.
struct BasisIndex {
  Subset A = 0;
  Subset B = 0;
  Perm w;

  int n() const { return w.size(); }
  int k() const { return subset_size(A); }

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  /// Canonical order: k, then A and B lexicographically, then w.
  friend std::strong_ordering operator<=>(const BasisIndex& a, const BasisIndex& b);
};

struct BasisIndexHash {
  std::size_t operator()(const BasisIndex& x) const { return x.w.hash() * 1000003u + x.A * 4099u + x.B; }
};

/// Throws std::invalid_argument unless (A, B, w) is a valid index of rank n.
void validate(const BasisIndex& idx, int n);

/// All of Γ^(n) in canonical order.
std::vector<BasisIndex> standard_basis(int n);

/// sum_k C(n,k)^2 k!
BigInt dimension_formula(int n);

/// The permutation u_A with u_A(i) = a_i for i <= k and the remaining values
/// increasing; T_A = T_{u_A}.
Perm subset_shuffle(Subset a, int n);
/// Letters of T_A = T_{a_1,1} T_{a_2,2} ... with T_{j,i} = T_{j-1} ... T_i.
std::vector<int> subset_word_letters(Subset a);

/// "A=1,2;B=2,3;w=1,2,3" (w may be omitted for the identity).
BasisIndex parse_basis_index(std::string_view text, int n);
std::string to_string(const BasisIndex& idx);

}  // namespace mirhecke
