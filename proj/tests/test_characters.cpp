#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mirhecke/algebra.hpp"
#include "mirhecke/characters.hpp"
#include "mirhecke/tensorrep.hpp"
#include "support.hpp"

using namespace mirhecke;
using testing::coeff_map;
using testing::L;

namespace {

Laurent signed_power(int e) { return e % 2 ? Laurent(-1) : Laurent(1); }

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mirhecke-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("strip weights") {
  CHECK(wtbar(Partition{1}, Partition{}) == 1);
  CHECK(wtbar(Partition{2}, Partition{}) == Laurent::q_power(-1));
  CHECK(wtbar(Partition{1, 1}, Partition{}) == -1);
  CHECK(wtbar(Partition{2, 2}, Partition{}) == 0);
  CHECK(wtbar(Partition{2, 1}, Partition{2, 1}) == 1);
  CHECK_THROWS(wtbar(Partition{1}, Partition{2}));
  // The displayed closed form is the parameter inversion of wt.
  for (const auto& lambda : partitions_up_to(7))
    for (const auto& nu : partitions_up_to(lambda.size()))
      if (lambda.contains(nu) && lambda.size() > nu.size()) CHECK(wtbar(lambda, nu) == wt(lambda, nu).bar());
}

TEST_CASE("transition coefficients") {
  CHECK(g_coeff(1, 1) == 1);
  CHECK(g_coeff(2, 2) == -Laurent::q());
  CHECK(g_coeff(0, 2) == -1);
  CHECK_THROWS(g_coeff(3, 2));
  CHECK_THROWS(g_coeff(0, 0));
  for (int m = 1; m <= 6; ++m) {
    CHECK(g_coeff(0, m) == signed_power(m - 1));
    for (int t = 1; t < m; ++t) CHECK(g_coeff(t, m) == signed_power(m) * L("q-1") * Laurent::q_power(t - 1));
    CHECK(g_coeff(m, m) == pow(-Laurent::q(), static_cast<unsigned>(m - 1)));
    // The alternative case list.
    CHECK(g_coeff(0, m, GVariant::Paper) == signed_power(m) * Laurent::q());
    CHECK(g_coeff(m, m, GVariant::Paper) == 1);
  }
}

TEST_CASE("character values at n = 2") {
  const std::vector<Partition> cols{{}, {1}, {2}, {1, 1}};
  auto row = [&](const Partition& lambda) {
    std::vector<Laurent> out;
    for (const auto& mu : cols) out.push_back(mn_character(2, lambda, mu));
    return out;
  };
  CHECK(row(Partition{}) == std::vector<Laurent>{1, 1, -1, 1});
  CHECK(row(Partition{1, 1}) == std::vector<Laurent>{0, 0, Laurent::q(), 1});
  CHECK(row(Partition{1}) == std::vector<Laurent>{0, 1, L("q-1"), 2});
  CHECK_THROWS(mn_character(2, Partition{3}, Partition{}));
}

TEST_CASE("character tables") {
  const auto t1 = character_table(1);
  CHECK(t1.labels == std::vector<Partition>{Partition{}, Partition{1}});
  CHECK(t1.entries == Matrix<Laurent>{{1, 1}, {0, 1}});
  const auto t2 = character_table(2);
  CHECK(t2.entries == Matrix<Laurent>{{1, 1, -1, 1}, {0, 1, L("q-1"), 2}, {0, 0, -1, 1}, {0, 0, Laurent::q(), 1}});
  CHECK(t2.at(Partition{1}, Partition{2}) == L("q-1"));
  CHECK(table_csv(t1) == "lambda,0,1\n0,1,1\n1,0,1\n");
  for (int n = 1; n <= 5; ++n) CHECK(vanishing_check(character_table(n)));
  CHECK(mn_character(1, Partition{1}, Partition{}) == 0);
  CHECK(mn_character(2, Partition{2}, Partition{1}) == 0);
}

TEST_CASE("Frobenius identity") {
  for (int n = 1; n <= 4; ++n) {
    const auto table = character_table(n);
    for (const auto& mu : table.labels) {
      SymPoly rhs(n);
      for (const auto& lambda : table.labels) rhs += table.at(lambda, mu) * schur(lambda, n);
      CHECK(qtilde_mu(mu, n) == rhs);
    }
  }
}

TEST_CASE("recursion does not depend on which part is removed") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_up_to(n))
      for (const auto& mu : partitions_up_to(n))
        CHECK(mn_character(n, lambda, mu, GVariant::Oracle, PartRemoval::First) == mn_character(n, lambda, mu));
}

TEST_CASE("threaded and cached tables agree with the serial one") {
  const auto serial = character_table(4);
  TableOptions threaded;
  threaded.jobs = 4;
  CHECK(character_table(4, threaded).entries == serial.entries);

  TableOptions cached;
  cached.cache_dir = fresh_dir("cache");
  CHECK(character_table(4, cached).entries == serial.entries);
  const auto file = *cached.cache_dir / "characters-n4-oracle.json";
  CHECK(std::filesystem::exists(file));
  CHECK(character_table(4, cached).entries == serial.entries);
  {
    std::ofstream out(file);
    out << "{ not json";
  }
  CHECK(character_table(4, cached).entries == serial.entries);
  std::filesystem::remove_all(*cached.cache_dir);
}

TEST_CASE("table invertibility and dimension count") {
  for (int n = 1; n <= 5; ++n) {
    const auto table = character_table(n);
    for (int q0 : {2, 3}) {
      Matrix<BigRational> m;
      for (const auto& row : table.entries) {
        std::vector<BigRational> r;
        for (const auto& e : row) r.push_back(specialize_q(e, q0));
        m.push_back(std::move(r));
      }
      CHECK(determinant(m) != 0);
    }
    const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    BigInt sum = 0;
    for (const auto& lambda : table.labels) {
      const Laurent& d = table.at(lambda, identity);
      REQUIRE(d.is_constant());
      CHECK(d.coeff(0) > 0);
      sum += d.coeff(0) * d.coeff(0);
    }
    CHECK(sum == dimension_formula(n));
  }
}

TEST_CASE("class polynomial examples") {
  CHECK(class_polynomials(2, parse_basis_index("A=2;B=1", 2)).coeffs == coeff_map({{{1}, "q-1"}, {{}, "-q"}}));
  CHECK(class_polynomials(2, parse_basis_index("A=1;B=2", 2)).coeffs == coeff_map({{{}, "-1"}}));
  CHECK(class_polynomials(2, parse_basis_index("A=2;B=2", 2)).coeffs == coeff_map({{{1}, "1"}}));
  CHECK(class_polynomials(2, parse_basis_index("A=;B=;w=2,1", 2)).coeffs == coeff_map({{{2}, "1"}}));
}

TEST_CASE("class polynomials reconstruct the traces") {
  for (int n = 1; n <= 3; ++n) {
    const auto table = character_table(n);
    for (const auto& idx : standard_basis(n)) {
      const auto f = class_polynomials(table, idx, n);
      const auto element = AlgebraElement::basis(idx);
      // Recompute the traces at a larger r as an independent check.
      const auto traces = char_oracle(element, n + 1);
      for (const auto& lambda : table.labels) {
        Laurent lhs;
        for (const auto& [nu, c] : f.coeffs) lhs += c * table.at(lambda, nu);
        const auto it = traces.find(lambda);
        CHECK(lhs == (it == traces.end() ? Laurent() : it->second));
      }
      if (idx.k() == 0)
        for (const auto& [nu, c] : f.coeffs) CHECK(nu.size() == n);
    }
  }
}
