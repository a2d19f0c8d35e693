#include <random>

#include "doctest.h"
#include "mirhecke/linear_algebra.hpp"
#include "mirhecke/rational_function.hpp"
#include "support.hpp"

using namespace mirhecke;
using testing::L;

namespace {

Laurent random_laurent(std::mt19937& rng, bool even = true) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(-3, 3), count(0, 3);
  Laurent a;
  for (int i = count(rng); i > 0; --i) a += Laurent::v_power(even ? 2 * exp(rng) : exp(rng), coeff(rng));
  return a;
}

// Plain Gauss-Jordan over Q, used as an independent rank oracle.
std::size_t naive_rank(Matrix<BigRational> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const BigRational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

BigRational leibniz_det(const Matrix<BigRational>& m) {
  std::vector<int> perm(m.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  BigRational total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    BigRational term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m[i][static_cast<std::size_t>(perm[i])];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  CHECK(L("q-1") + 1 == Laurent::q());
  CHECK(Laurent::v() * Laurent::v() == Laurent::q());
  CHECK(L("q-1") * L("q+1") == L("q^2-1"));
  CHECK((L("q") - L("q")).is_zero());
  CHECK(Laurent::v_power(3).is_unit());
  CHECK(!L("q+1").is_unit());
}

TEST_CASE("canonical form drops zero coefficients") {
  Laurent a = L("q^3+q");
  a -= Laurent::q_power(3);
  CHECK(a == Laurent::q());
  CHECK(a.low() == 2);
  CHECK(a.high() == 2);
}

TEST_CASE("bar involution") {
  CHECK(Laurent::q().bar() == Laurent::q_power(-1));
  CHECK(L("q-1").bar() == L("q^-1-1"));
  CHECK(L("q^2-q").bar().bar() == L("q^2-q"));
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Laurent a = random_laurent(rng, false), b = random_laurent(rng, false);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.bar().bar() == a);
  }
}

TEST_CASE("string round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Laurent a = random_laurent(rng, i % 2 == 0);
    CHECK(parse_laurent(to_string(a)) == a);
  }
  CHECK(to_string(L("q^2-q+1")) == "q^2-q+1");
  CHECK(to_string(Laurent()) == "0");
  CHECK_THROWS_AS(parse_laurent("q^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
}

TEST_CASE("specialization") {
  CHECK(specialize_q(L("q-1"), 3) == 2);
  CHECK(specialize_q(L("q^-1"), 2) == BigRational(1, 2));
  CHECK(specialize_v(Laurent::v_power(2), 2) == 4);
  CHECK_THROWS(specialize_q(L("q"), 0));
  CHECK_THROWS(specialize_q(Laurent::v(), 4));
  CHECK(specialize(Laurent::v(), 4, BigRational(-2)) == -2);
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Laurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK(specialize_q(a * b, BigRational(5, 3)) == specialize_q(a, BigRational(5, 3)) * specialize_q(b, BigRational(5, 3)));
  }
}

TEST_CASE("exact division and gcd") {
  const auto q = divide_exact(L("q^2-1"), L("q-1"));
  REQUIRE(q);
  CHECK(*q == L("q+1"));
  CHECK(!divide_exact(L("q^2+1"), L("q-1")));
  CHECK(gcd(L("q^2-1"), L("q^2-2q+1")) == L("q-1"));
  CHECK(content(L("4q-6")) == 2);
}

TEST_CASE("rational functions normalize") {
  const RationalFunction a(L("q^2-1"), L("q-1"));
  CHECK(a.is_laurent());
  CHECK(a.to_laurent() == L("q+1"));
  const RationalFunction b(L("1"), L("-2q+2"));
  CHECK(b == RationalFunction(L("-1"), L("2q-2")));
  CHECK(b * RationalFunction(L("2q-2")) == RationalFunction(L("-1")));
  CHECK((b - b).is_zero());
  CHECK_THROWS(RationalFunction(L("1"), Laurent()));
}

TEST_CASE("solve_linear examples") {
  auto x = solve_linear({{1, 0}, {0, 1}}, {Laurent::q(), 1});
  CHECK(x[0] == RationalFunction(Laurent::q()));
  CHECK(x[1] == RationalFunction(1));
  x = solve_linear({{1, 1}, {0, 1}}, {Laurent::q(), 1});
  CHECK(x[0] == RationalFunction(L("q-1")));
  CHECK(x[1] == RationalFunction(1));
  CHECK_THROWS_AS(solve_linear({{1, 1}, {1, 1}}, {1, 2}), SingularSystemError);
}

TEST_CASE("solve_linear reproduces the right-hand side") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix<Laurent> m(n, std::vector<Laurent>(n));
    std::vector<Laurent> c(n);
    for (auto& row : m)
      for (auto& e : row) e = random_laurent(rng);
    for (auto& e : c) e = random_laurent(rng);
    std::vector<RationalFunction> x;
    try {
      x = solve_linear(m, c);
    } catch (const SingularSystemError&) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      RationalFunction lhs;
      for (std::size_t j = 0; j < n; ++j) lhs += RationalFunction(m[i][j]) * x[j];
      CHECK(lhs == RationalFunction(c[i]));
    }
  }
}

TEST_CASE("rank and determinant against naive elimination") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> entry(-2, 2), den(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
    Matrix<BigRational> m(rows, std::vector<BigRational>(cols));
    for (auto& row : m)
      for (auto& e : row) {
        e = BigRational(entry(rng) * (trial % 3 == 0 ? 0 : 1) + (trial % 3 == 0 ? entry(rng) % 2 : 0), den(rng));
        e.canonicalize();
      }
    // Duplicate a row now and then to force rank drops.
    if (rows > 1 && trial % 4 == 1) m[rows - 1] = m[0];
    CHECK(rank(m) == naive_rank(m));
    if (rows == cols) CHECK(determinant(m) == leibniz_det(m));
  }
}
