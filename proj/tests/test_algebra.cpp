#include <random>
#include <set>

#include "doctest.h"
#include "mirhecke/algebra.hpp"
#include "mirhecke/relations.hpp"
#include "support.hpp"

using namespace mirhecke;
using testing::L;

namespace {

AlgebraElement el(int n, const char* index) { return AlgebraElement::basis(parse_basis_index(index, n)); }

AlgebraElement word(int n, GeneratorWord w) { return reduce_word(n, w); }

// Iwahori-Hecke product on permutation maps, written out from the quadratic
// rule alone. Kept separate from the library's Hecke code on purpose.
using NaiveHecke = std::map<Perm, Laurent>;

NaiveHecke naive_times_s(const NaiveHecke& x, int i) {
  NaiveHecke out;
  for (const auto& [w, c] : x) {
    const Perm ws = w.times_simple(i);
    if (ws.length() > w.length()) {
      out[ws] += c;
    } else {
      out[w] += (Laurent::q() - 1) * c;
      out[ws] += Laurent::q() * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

TEST_CASE("basis words") {
  CHECK(basis_word(parse_basis_index("A=1;B=2", 2)) == GeneratorWord{Letter::P(1), Letter::Tinv(1)});
  CHECK(basis_word(parse_basis_index("A=2;B=1", 2)) == GeneratorWord{Letter::T(1), Letter::P(1)});
  CHECK(basis_word(parse_basis_index("A=1,2;B=1,2", 2)) == GeneratorWord{Letter::P(2)});
  CHECK(to_string(GeneratorWord{Letter::T(1), Letter::P(1)}) == "T1 P1");
  CHECK_THROWS(validate(GeneratorWord{Letter::T(2)}, 2));
  CHECK_THROWS(validate(GeneratorWord{Letter::P(3)}, 2));
}

TEST_CASE("the conjugated word T1 P2 T1^-1 reduces to P2") {
  CHECK(word(2, {Letter::T(1), Letter::P(2), Letter::Tinv(1)}) == el(2, "A=1,2;B=1,2"));
}

TEST_CASE("reducing a basis word returns the basis element") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& idx : standard_basis(n)) CHECK(reduce_word(n, basis_word(idx)) == AlgebraElement::basis(idx));
}

TEST_CASE("rmul_gen examples") {
  const auto p1 = el(2, "A=1;B=1");
  CHECK(rmul_gen(p1, Letter::P(1)) == p1);
  CHECK(rmul_gen(p1, Letter::T(1)) == Laurent::q() * el(2, "A=1;B=2") + L("q-1") * p1);
  const auto p2 = el(2, "A=1,2;B=1,2");
  CHECK(rmul_gen(p2, Letter::T(1)) == L("-1") * p2);
  CHECK(rmul_gen(p2, Letter::Tinv(1)) == L("-1") * p2);
}

TEST_CASE("mul examples") {
  const auto p1 = el(2, "A=1;B=1"), p2 = el(2, "A=1,2;B=1,2");
  const auto t1 = el(2, "A=;B=;w=2,1");
  CHECK(mul(p1, mul(t1, p1)) == L("q-1") * p1 - Laurent::q() * p2);
  CHECK(mul(t1, t1) == L("q-1") * t1 + Laurent::q() * AlgebraElement::identity(2));
  CHECK(mul(p2, p1) == p2);
  CHECK(mul(p1, p2) == p2);
  CHECK_THROWS(mul(p1, el(3, "A=1;B=1")));
}

TEST_CASE("hat_T") {
  CHECK(hat_T(2, Partition{}) == el(2, "A=1,2;B=1,2"));
  CHECK(hat_T(2, Partition{1, 1}) == AlgebraElement::identity(2));
  CHECK(hat_T(2, Partition{2}) == el(2, "A=;B=;w=2,1"));
  CHECK(hat_T(2, Partition{1}) == el(2, "A=1;B=1"));
  CHECK_THROWS(hat_T(2, Partition{3}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : partitions_up_to(n)) CHECK(reduce_word(n, hat_T_word(n, mu.parts())) == hat_T(n, mu));
}

TEST_CASE("iota, rho and star") {
  CHECK(iota(el(1, "A=1;B=1")) == el(2, "A=1,2;B=1,2"));
  // T_w for w = w_(2) in ranks 2 and 3; the idempotent factor is P_0 = 1.
  CHECK(iota(hat_T(2, Composition{2})) == hat_T(3, Composition{1, 2}));
  CHECK(rho(AlgebraElement::identity(2)) == el(3, "A=1;B=1"));
  CHECK(star(el(2, "A=1;B=1")) == el(2, "A=1;B=1"));
  CHECK(star(word(2, {Letter::T(1), Letter::P(1)})) == word(2, {Letter::P(1), Letter::T(1)}));
  const auto t = hat_T(2, Partition{2});
  CHECK(star(star(t)) == t);
  for (int n = 1; n <= 3; ++n)
    for (const auto& idx : standard_basis(n)) CHECK(star(star(AlgebraElement::basis(idx))) == AlgebraElement::basis(idx));
}

TEST_CASE("relations hold in ranks 2 to 4") {
  for (int n = 2; n <= 4; ++n) {
    const Report report = check_relations(n);
    CHECK(report.results.size() > 10);
    for (const auto* f : report.failures()) FAIL_CHECK(f->check << " failed in rank " << n);
  }
  bool found_quadratic = false, found_mixed = false;
  for (const auto& rel : defining_relations(2)) {
    found_quadratic |= rel.name == "T0^2 = (q-2)T0 + (q-1)";
    found_mixed |= rel.name.find("T0T1T0T1") != std::string::npos;
  }
  CHECK(found_quadratic);
  CHECK(found_mixed);
}

TEST_CASE("T0 relations from the spelled-out element") {
  const auto t0 = t_zero(2);
  const auto t1 = el(2, "A=;B=;w=2,1");
  const auto one = AlgebraElement::identity(2);
  CHECK(mul(t0, t0) == L("q-2") * t0 + L("q-1") * one);
  const auto t1t0t1 = mul(mul(t1, t0), t1);
  CHECK(mul(mul(t0, t1), mul(t0, t1)) == L("q-1") * (t1t0t1 + mul(t1, t0)) - mul(mul(t0, t1), t0));
  const auto s1 = el(3, "A=;B=;w=2,1,3"), s2 = el(3, "A=;B=;w=1,3,2");
  CHECK(mul(mul(s1, s2), s1) == mul(mul(s2, s1), s2));
}

TEST_CASE("Hecke subalgebra matches a naive product") {
  const int n = 3;
  std::vector<Perm> perms;
  for (const auto& idx : standard_basis(n))
    if (idx.k() == 0) perms.push_back(idx.w);
  for (const Perm& a : perms) {
    for (const Perm& b : perms) {
      NaiveHecke expected{{a, Laurent(1)}};
      for (int i : b.reduced_word()) expected = naive_times_s(expected, i);
      AlgebraElement want(n);
      for (const auto& [w, c] : expected) want.add(BasisIndex{0, 0, w}, c);
      CHECK(mul(AlgebraElement::basis(BasisIndex{0, 0, a}), AlgebraElement::basis(BasisIndex{0, 0, b})) == want);
    }
  }
}

TEST_CASE("associativity") {
  for (int n = 1; n <= 2; ++n) {
    const auto basis = standard_basis(n);
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& c : basis) {
          const auto x = AlgebraElement::basis(a), y = AlgebraElement::basis(b), z = AlgebraElement::basis(c);
          CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        }
  }
  std::mt19937 rng(2024);
  for (int n = 3; n <= 4; ++n) {
    const auto basis = standard_basis(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < (n == 3 ? 400 : 100); ++trial) {
      const auto x = AlgebraElement::basis(basis[pick(rng)]);
      const auto y = AlgebraElement::basis(basis[pick(rng)]);
      const auto z = AlgebraElement::basis(basis[pick(rng)]);
      CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
  }
}

TEST_CASE("star is anti-multiplicative and products stay even") {
  std::mt19937 rng(99);
  for (int n = 2; n <= 3; ++n) {
    const auto basis = standard_basis(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 150; ++trial) {
      const auto x = AlgebraElement::basis(basis[pick(rng)]);
      const auto y = AlgebraElement::basis(basis[pick(rng)]);
      const auto xy = mul(x, y);
      CHECK(star(xy) == mul(star(y), star(x)));
      CHECK(xy.is_even());
    }
  }
}

TEST_CASE("rho is multiplicative and sends basis to basis") {
  for (int n = 2; n <= 3; ++n) {
    std::set<BasisIndex> images;
    const auto basis = standard_basis(n - 1);
    for (const auto& idx : basis) {
      const auto image = rho(AlgebraElement::basis(idx));
      REQUIRE(image.terms().size() == 1);
      CHECK(image.terms().begin()->second == Laurent(1));
      images.insert(image.terms().begin()->first);
    }
    CHECK(images.size() == basis.size());
    for (const auto& a : basis)
      for (const auto& b : basis) {
        const auto x = AlgebraElement::basis(a), y = AlgebraElement::basis(b);
        CHECK(rho(mul(x, y)) == mul(rho(x), rho(y)));
      }
  }
}

TEST_CASE("element printing") {
  CHECK(to_string(el(2, "A=1;B=1")) == "(1)*[A=1;B=1;w=1,2]");
  CHECK(to_string(AlgebraElement(2)) == "0");
}
