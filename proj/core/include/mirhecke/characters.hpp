#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mirhecke/basis.hpp"
#include "mirhecke/laurent.hpp"
#include "mirhecke/linear_algebra.hpp"
#include "mirhecke/partition.hpp"
#include "mirhecke/symfun.hpp"

namespace mirhecke {

/// wt_{λ/ν}(q); zero unless λ/ν is a strip, 1 for the empty strip.
Laurent wt(const Partition& lambda, const Partition& nu);
/// wt_{λ/ν}(q^{-1}) from the closed form (-q)^{1-|λ/ν|}(q-1)^{cc-1} prod q^{ro-1}(-1)^{co-1}.
Laurent wtbar(const Partition& lambda, const Partition& nu);

/// f_{t,m}(q)
Laurent f_coeff(int t, int m);
/// Transition coefficient g_{t,m}(q). The oracle variant is (-q)^{m-1} f_{t,m}(q^{-1});
/// the Paper variant is the closed-form case list t=0: (-1)^m q,
/// 0<t<m: (-1)^{m-t+1}(q-1), t=m: 1, which the product expansion rejects.
Laurent g_coeff(int t, int m, GVariant variant = GVariant::Oracle);

/// Which part of μ the recursion strips.
enum class PartRemoval { Last, First };

/// χ^(n)_(λ,|λ|)(T̂^(n)_μ) by the strip recursion. Memoized.
Laurent mn_character(int n, const Partition& lambda, const Partition& mu, GVariant variant = GVariant::Oracle,
                     PartRemoval removal = PartRemoval::Last);

struct CharacterTable {
  int n = 0;
  GVariant variant = GVariant::Oracle;
  /// Row and column labels, partitions of size <= n in canonical order.
  std::vector<Partition> labels;
  /// entries[row λ][column μ]
  Matrix<Laurent> entries;

  std::size_t index_of(const Partition& p) const;
  const Laurent& at(const Partition& lambda, const Partition& mu) const;
};

struct TableOptions {
  GVariant variant = GVariant::Oracle;
  PartRemoval removal = PartRemoval::Last;
  int jobs = 1;
  /// Directory of the persistent cache; no disk access when empty.
  std::optional<std::filesystem::path> cache_dir;
};

/// MIRHECKE_CACHE, or ".mirhecke-cache" when unset.
std::filesystem::path default_cache_dir();

CharacterTable character_table(int n, const TableOptions& options = {});

/// Every entry with |λ| > |μ| is zero.
bool vanishing_check(const CharacterTable& table);

struct ClassPolyVector {
  BasisIndex index;
  /// f^λ, nonzero entries only.
  std::map<Partition, Laurent> coeffs;
};

class ClassPolynomialDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves sum_ν f^ν χ_λ(T̂_ν) = χ_λ(T_(A,B,w)) for all λ, with the right side
/// from the tensor-space trace at r variables (r >= n). Throws
/// ClassPolynomialDefect when a solution entry is not a Laurent polynomial.
ClassPolyVector class_polynomials(const CharacterTable& table, const BasisIndex& idx, int r, int jobs = 1);
ClassPolyVector class_polynomials(int n, const BasisIndex& idx);

/// Header of column labels then one row per λ, entries as q-polynomials.
std::string table_csv(const CharacterTable& table);

}  // namespace mirhecke
