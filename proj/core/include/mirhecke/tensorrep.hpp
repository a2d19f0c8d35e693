#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mirhecke/algebra.hpp"
#include "mirhecke/laurent.hpp"
#include "mirhecke/partition.hpp"
#include "mirhecke/report.hpp"
#include "mirhecke/symfun.hpp"

namespace mirhecke {

/// Words (k_1..k_n) over {1..r+1} packed into an integer, k_1 most significant,
/// so numeric order is lexicographic order.
using WordCode = std::uint64_t;

class TensorSpace {
 public:
  TensorSpace(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  /// (r+1)^n
  WordCode size() const { return size_; }

  WordCode encode(const std::vector<int>& word) const;
  std::vector<int> decode(WordCode code) const;
  /// Letter at position i (1-based).
  int letter(WordCode code, int i) const;
  WordCode with_letter(WordCode code, int i, int value) const;

 private:
  int n_;
  int r_;
  WordCode size_;
  std::vector<WordCode> place_;  // weight of position i
};

/// Sparse vector on V_{r+1}^{⊗n}.
class TensorState {
 public:
  using Terms = std::map<WordCode, Laurent>;

  TensorState(int n, int r) : n_(n), r_(r) {}
  static TensorState basis(const TensorSpace& space, WordCode w, const Laurent& c = 1);

  int n() const { return n_; }
  int r() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(WordCode w) const;

  void add(WordCode w, const Laurent& c);
  TensorState& operator+=(const TensorState& o);
  TensorState& operator-=(const TensorState& o);
  TensorState& operator*=(const Laurent& c);
  friend bool operator==(const TensorState&, const TensorState&) = default;

 private:
  int n_;
  int r_;
  Terms terms_;
};

/// The operator R on factors i, i+1.
TensorState apply_R(const TensorSpace& space, int i, const TensorState& v);
/// q^{-1}(R - (q-1))
TensorState apply_Rinv(const TensorSpace& space, int i, const TensorState& v);
/// Keeps the words whose first j letters all equal r+1.
TensorState apply_e(const TensorSpace& space, int j, const TensorState& v);
TensorState apply_letter(const TensorSpace& space, const Letter& g, const TensorState& v);
/// Applies the word as an operator: the rightmost letter acts first.
TensorState psi_apply(const TensorSpace& space, const GeneratorWord& word, const TensorState& v);
/// Image of an algebra element.
TensorState psi_apply(const TensorSpace& space, const AlgebraElement& x, const TensorState& v);

/// Sparse operator stored column by column (column w = image of basis word w).
class PsiMatrix {
 public:
  explicit PsiMatrix(const TensorSpace& space);
  static PsiMatrix of(const TensorSpace& space, const AlgebraElement& x);
  static PsiMatrix of(const TensorSpace& space, const GeneratorWord& w);

  const TensorState& column(WordCode w) const { return columns_[w]; }
  std::size_t columns() const { return columns_.size(); }

  PsiMatrix& operator+=(const PsiMatrix& o);
  PsiMatrix& operator*=(const Laurent& c);
  /// this ∘ o
  PsiMatrix compose(const PsiMatrix& o) const;
  TensorState apply(const TensorState& v) const;
  friend bool operator==(const PsiMatrix& a, const PsiMatrix& b) { return a.columns_ == b.columns_; }

 private:
  const TensorSpace* space_;
  std::vector<TensorState> columns_;
};

/// Content of a word: counts of letters 1..r.
std::vector<int> word_content(const TensorSpace& space, WordCode w);

/// Weighted trace tr(D Ψ(x)) as a symmetric polynomial in x_1..x_r. The
/// default reads one dominant weight space per monomial; `full` sums over all
/// words and throws if the result is not symmetric.
SymPoly trace_D(const AlgebraElement& x, int r, bool full = false, int jobs = 1);

/// Schur coefficients of tr(D Ψ(x)): the values χ_(λ,|λ|)(x) for all λ.
std::map<Partition, Laurent> char_oracle(const AlgebraElement& x, int r, int jobs = 1);

/// Operator identities of the generator images on every basis vector.
Report verify_rep_relations(int n, int r);

/// Rank over Q of the span of Ψ(T_(A,B,w)) at the point q = q0. Without v0 the
/// operators are conjugated by diag(v^{inv(word)}), which removes odd powers of v.
std::size_t image_rank(int n, int r, const BigRational& q0, const std::optional<BigRational>& v0 = std::nullopt);

}  // namespace mirhecke
