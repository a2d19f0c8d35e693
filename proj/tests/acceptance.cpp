// Acceptance criteria, one line per criterion. Exits nonzero when any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mirhecke/algebra.hpp"
#include "mirhecke/characters.hpp"
#include "mirhecke/tensorrep.hpp"

using namespace mirhecke;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failing case.
struct Tally {
  Outcome out;
  long checked = 0;
  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
  Outcome done() {
    if (out.ok) out.detail = std::to_string(checked) + " checks";
    return out;
  }
};

Laurent entry(const std::map<Partition, Laurent>& m, const Partition& p) {
  auto it = m.find(p);
  return it == m.end() ? Laurent() : it->second;
}

Matrix<BigRational> specialize_table(const CharacterTable& t, int q0) {
  Matrix<BigRational> m;
  for (const auto& row : t.entries) {
    std::vector<BigRational> r;
    for (const auto& e : row) r.push_back(specialize_q(e, q0));
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<Composition> compositions_up_to(int n) {
  std::vector<Composition> out;
  std::function<void(int, Composition&)> rec = [&](int left, Composition& cur) {
    out.push_back(cur);
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, cur);
      cur.pop_back();
    }
  };
  Composition cur;
  rec(n, cur);
  return out;
}

Outcome relations() {
  Tally t;
  for (int n = 2; n <= 4; ++n)
    for (const auto& r : check_relations(n).results) t.expect(r.passed, r.check + " at n=" + std::to_string(n));
  return t.done();
}

Outcome dimension() {
  Tally t;
  for (int n = 1; n <= 8; ++n) {
    BigInt closed = 0;
    for (int k = 0; k <= n; ++k) {
      const BigInt c = combinatorics::binomial(n, k);
      closed += c * c * combinatorics::factorial(k);
    }
    t.expect(BigInt(standard_basis(n).size()) == closed, "enumeration at n=" + std::to_string(n));
    t.expect(dimension_formula(n) == closed, "closed form at n=" + std::to_string(n));
  }
  t.expect(dimension_formula(5) == 1546, "n=5 gives 1546");
  return t.done();
}

Outcome oracle_equivalence() {
  Tally t;
  auto check_pair = [&](const TensorSpace& s, const std::vector<PsiMatrix>& psi, const std::vector<BasisIndex>& basis,
                        std::size_t i, std::size_t j) {
    const auto prod = mul(AlgebraElement::basis(basis[i]), AlgebraElement::basis(basis[j]));
    t.expect(PsiMatrix::of(s, prod) == psi[i].compose(psi[j]), to_string(basis[i]) + " times " + to_string(basis[j]));
  };
  for (int n = 1; n <= 4; ++n) {
    const TensorSpace s(n, n);
    const auto basis = standard_basis(n);
    std::vector<PsiMatrix> psi;
    for (const auto& idx : basis) psi.push_back(PsiMatrix::of(s, basis_word(idx)));
    if (n <= 3) {
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) check_pair(s, psi, basis, i, j);
    } else {
      std::mt19937 rng(20240611);
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      for (int k = 0; k < 200; ++k) check_pair(s, psi, basis, pick(rng), pick(rng));
    }
  }
  return t.done();
}

Outcome frobenius() {
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    const auto table = character_table(n);
    for (const auto& mu : table.labels) {
      SymPoly rhs(n);
      for (const auto& lambda : table.labels) rhs += table.at(lambda, mu) * schur(lambda, n);
      t.expect(qtilde_mu(mu, n) == rhs, "n=" + std::to_string(n) + " mu=" + to_string(mu));
    }
  }
  const Laurent q = Laurent::q();
  t.expect(character_table(2).entries == Matrix<Laurent>{{1, 1, -1, 1}, {0, 1, q - 1, 2}, {0, 0, -1, 1}, {0, 0, q, 1}},
           "n=2 table");
  return t.done();
}

Outcome mn_vs_oracle() {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    const auto table = character_table(n);
    for (const auto& mu : table.labels) {
      const auto traces = char_oracle(hat_T(n, mu), n);
      for (const auto& lambda : table.labels)
        t.expect(entry(traces, lambda) == table.at(lambda, mu),
                 "n=" + std::to_string(n) + " lambda=" + to_string(lambda) + " mu=" + to_string(mu));
    }
  }
  return t.done();
}

Outcome pieri() {
  Tally t;
  for (int m = 1; m <= 5; ++m)
    for (const auto& nu : partitions_up_to(5 - m))
      t.expect(pieri_qtilde(m, nu, 5) == pieri_bruteforce(m, nu, 5), "m=" + std::to_string(m) + " nu=" + to_string(nu));
  t.expect(pieri_qtilde(2, Partition{}, 5, GVariant::Paper) != pieri_bruteforce(2, Partition{}, 5),
           "alternative coefficients should fail at m=2, empty nu");
  return t.done();
}

Outcome two_symmetric() {
  Tally t;
  for (int m = 1; m <= 6; ++m)
    for (int r = 1; r <= 4; ++r) t.expect(check_two_symmetric(m, r), "m=" + std::to_string(m) + " r=" + std::to_string(r));
  return t.done();
}

Outcome generating() {
  Tally t;
  for (int m = 1; m <= 5; ++m)
    for (int r = 1; r <= 3; ++r) {
      const auto expected = qtilde(m, r);
      const std::string where = "m=" + std::to_string(m) + " r=" + std::to_string(r);
      t.expect(qtilde_generating(m, r) == expected, "generating function at " + where);
      t.expect(qtilde_sequence_sum(m, r) == expected, "sequence sum at " + where);
    }
  return t.done();
}

Outcome class_polys() {
  Tally t;
  const Laurent q = Laurent::q();
  auto f2 = [](const char* idx) { return class_polynomials(2, parse_basis_index(idx, 2)).coeffs; };
  t.expect(f2("A=2;B=1") == std::map<Partition, Laurent>{{Partition{}, -q}, {Partition{1}, q - 1}}, "T1P1");
  t.expect(f2("A=1;B=2") == std::map<Partition, Laurent>{{Partition{}, -1}}, "P1T1^-1");
  t.expect(f2("A=2;B=2") == std::map<Partition, Laurent>{{Partition{1}, 1}}, "T1P1T1^-1");
  for (int n = 1; n <= 3; ++n) {
    const auto table = character_table(n);
    for (const auto& idx : standard_basis(n)) {
      ClassPolyVector f;
      try {
        f = class_polynomials(table, idx, n);
      } catch (const ClassPolynomialDefect& e) {
        t.expect(false, to_string(idx) + ": " + e.what());
        continue;
      }
      const auto traces = char_oracle(AlgebraElement::basis(idx), n);
      for (const auto& lambda : table.labels) {
        Laurent sum;
        for (const auto& [nu, c] : f.coeffs) sum += c * table.at(lambda, nu);
        t.expect(sum == entry(traces, lambda), "reconstruction of " + to_string(idx));
      }
    }
  }
  return t.done();
}

Outcome cocenter() {
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    const auto table = character_table(n);
    for (int q0 : {2, 3})
      t.expect(determinant(specialize_table(table, q0)) != 0,
               "determinant at n=" + std::to_string(n) + " q0=" + std::to_string(q0));
    t.expect(vanishing_check(table), "vanishing at n=" + std::to_string(n));
  }
  return t.done();
}

Outcome composition_invariance() {
  Tally t;
  for (int n = 1; n <= 4; ++n)
    for (const auto& gamma : compositions_up_to(n)) {
      const auto sorted = Partition::sorted_from(gamma);
      std::ostringstream where;
      where << "n=" << n << " gamma=";
      for (int p : gamma) where << p << '.';
      t.expect(char_oracle(hat_T(n, gamma), n) == char_oracle(hat_T(n, sorted), n), where.str());
    }
  return t.done();
}

Outcome image_ranks() {
  Tally t;
  for (int n = 1; n <= 3; ++n)
    for (int q0 : {2, 3}) {
      const auto rank = image_rank(n, n, q0);
      t.expect(BigInt(rank) == dimension_formula(n),
               "n=" + std::to_string(n) + " q0=" + std::to_string(q0) + " rank=" + std::to_string(rank));
    }
  return t.done();
}

Outcome semisimplicity() {
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    const auto table = character_table(n);
    const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    BigInt sum = 0;
    for (const auto& lambda : table.labels) {
      const Laurent& d = table.at(lambda, identity);
      const bool positive = d.is_constant() && d.coeff(0) > 0;
      t.expect(positive, "n=" + std::to_string(n) + " lambda=" + to_string(lambda));
      if (positive) sum += d.coeff(0) * d.coeff(0);
    }
    t.expect(sum == dimension_formula(n), "square sum at n=" + std::to_string(n));
  }
  return t.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"presentation relations hold for n=2,3,4", relations},
      {"basis count equals sum C(n,k)^2 k! for n=1..8", dimension},
      {"Psi(ab) = Psi(a)Psi(b), exhaustive n<=3, 200 pairs at n=4", oracle_equivalence},
      {"Frobenius identity for n<=5 and the n=2 table", frobenius},
      {"MN table equals the Schur-Weyl trace for n<=4", mn_vs_oracle},
      {"Pieri strips formula equals product expansion; alternative list fails", pieri},
      {"q~_m = (-q)^(m-1) g_m(q^-1) for m<=6, r<=4", two_symmetric},
      {"generating function and sequence sum reproduce q~_m", generating},
      {"class polynomials: known n=2 values and reconstruction for n<=3", class_polys},
      {"character table invertible at q0=2,3 and vanishing for n<=5", cocenter},
      {"traces invariant under reordering compositions for n<=4", composition_invariance},
      {"image rank equals dimension for n<=3 at q0=2,3", image_ranks},
      {"sum of squared degrees equals dimension for n<=5", semisimplicity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%2zu] %s (%s, %.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
