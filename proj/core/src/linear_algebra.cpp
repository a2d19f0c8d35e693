#include "mirhecke/linear_algebra.hpp"

#include <utility>

namespace mirhecke {

std::vector<RationalFunction> solve_linear(const Matrix<Laurent>& m, const std::vector<Laurent>& c) {
  const std::size_t n = m.size();
  if (c.size() != n) throw std::invalid_argument("solve_linear: right-hand side has wrong length");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("solve_linear: matrix is not square");

  Matrix<Laurent> a(n, std::vector<Laurent>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = c[i];
  }

  Laurent prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) throw SingularSystemError();
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Laurent t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divide_exact(t, prev);
        if (!q) throw std::logic_error("Bareiss step produced an inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  std::vector<RationalFunction> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    RationalFunction acc = a[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (!a[ii][j].is_zero()) acc -= RationalFunction(a[ii][j]) * x[j];
    }
    x[ii] = acc / RationalFunction(a[ii][ii]);
  }
  return x;
}

namespace {

// Scales each row to integers; returns the product of the scale factors.
BigInt to_integer_rows(const Matrix<BigRational>& m, Matrix<BigInt>& out) {
  BigInt scale_product = 1;
  out.clear();
  out.reserve(m.size());
  for (const auto& row : m) {
    BigInt l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (const auto& x : row) r.emplace_back(x.get_num() * (l / x.get_den()));
    out.push_back(std::move(r));
    scale_product *= l;
  }
  return scale_product;
}

}  // namespace

std::size_t rank(const Matrix<BigRational>& m) {
  Matrix<BigInt> a;
  to_integer_rows(m, a);
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) {
        // Row still has to be scaled to keep the fraction-free invariant.
        for (std::size_t j = col + 1; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          BigInt t = a[i][j] * a[r][col];
          mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = a[i][j] * a[r][col] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

BigRational determinant(const Matrix<BigRational>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  Matrix<BigInt> a;
  const BigInt scale = to_integer_rows(m, a);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigRational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

}  // namespace mirhecke
