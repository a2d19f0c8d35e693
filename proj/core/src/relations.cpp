#include "mirhecke/relations.hpp"

namespace mirhecke {

WordCombination::WordCombination(GeneratorWord w, const Laurent& c) { add(w, c); }

void WordCombination::add(const GeneratorWord& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WordCombination& WordCombination::operator+=(const WordCombination& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordCombination& WordCombination::operator-=(const WordCombination& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordCombination operator*(const Laurent& c, const WordCombination& a) {
  WordCombination out;
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

WordCombination operator*(const WordCombination& a, const WordCombination& b) {
  WordCombination out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      GeneratorWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

WordCombination product(std::initializer_list<WordCombination> factors) {
  WordCombination acc = WordCombination::one();
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

std::vector<Relation> defining_relations(int n) {
  std::vector<Relation> out;
  const Laurent q = Laurent::q();
  const WordCombination one = WordCombination::one();
  const WordCombination t0 = (q - 1) * one - q * WordCombination::letter(Letter::P(1));
  auto T = [&](int i) { return i == 0 ? t0 : WordCombination::letter(Letter::T(i)); };
  auto Tinv = [&](int i) { return WordCombination::letter(Letter::Tinv(i)); };
  auto P = [&](int j) { return WordCombination::letter(Letter::P(j)); };
  auto s = [](int i) { return std::to_string(i); };

  out.push_back({"T0^2 = (q-2)T0 + (q-1)", product({t0, t0}) - (q - 2) * t0 - (q - 1) * one});
  for (int i = 1; i < n; ++i) {
    out.push_back({"T" + s(i) + "^2 = (q-1)T" + s(i) + " + q", product({T(i), T(i)}) - (q - 1) * T(i) - q * one});
    out.push_back({"T" + s(i) + " T" + s(i) + "^-1 = 1", product({T(i), Tinv(i)}) - one});
    out.push_back({"T" + s(i) + "^-1 T" + s(i) + " = 1", product({Tinv(i), T(i)}) - one});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      out.push_back({"T" + s(i) + " T" + s(j) + " = T" + s(j) + " T" + s(i), product({T(i), T(j)}) - product({T(j), T(i)})});
  for (int i = 1; i + 1 < n; ++i)
    out.push_back({"braid T" + s(i) + " T" + s(i + 1),
                   product({T(i), T(i + 1), T(i)}) - product({T(i + 1), T(i), T(i + 1)})});
  if (n >= 2) {
    const auto t1 = T(1);
    const auto t0t1t0 = product({t0, t1, t0});
    const auto t1t0t1 = product({t1, t0, t1});
    out.push_back({"T0T1T0T1 = (q-1)(T1T0T1 + T1T0) - T0T1T0",
                   product({t0, t1, t0, t1}) - (q - 1) * (t1t0t1 + product({t1, t0})) + t0t1t0});
    out.push_back({"T1T0T1T0 = (q-1)(T1T0T1 + T0T1) - T0T1T0",
                   product({t1, t0, t1, t0}) - (q - 1) * (t1t0t1 + product({t0, t1})) + t0t1t0});
  }
  for (int i = 1; i <= n; ++i) {
    out.push_back({"P" + s(i) + "^2 = P" + s(i), product({P(i), P(i)}) - P(i)});
    for (int j = 1; j < i; ++j) {
      out.push_back({"P" + s(i) + " P" + s(j) + " = P" + s(i), product({P(i), P(j)}) - P(i)});
      out.push_back({"P" + s(j) + " P" + s(i) + " = P" + s(i), product({P(j), P(i)}) - P(i)});
    }
    for (int j = 1; j < n; ++j) {
      if (i < j) {
        out.push_back({"P" + s(i) + " T" + s(j) + " = T" + s(j) + " P" + s(i),
                       product({P(i), T(j)}) - product({T(j), P(i)})});
      } else if (j < i) {
        out.push_back({"P" + s(i) + " T" + s(j) + " = -P" + s(i), product({P(i), T(j)}) + P(i)});
        out.push_back({"T" + s(j) + " P" + s(i) + " = -P" + s(i), product({T(j), P(i)}) + P(i)});
      }
    }
    if (i >= 2) {
      out.push_back({"P" + s(i) + " = -P" + s(i - 1) + " T" + s(i - 1) + "^-1 P" + s(i - 1),
                     P(i) + product({P(i - 1), Tinv(i - 1), P(i - 1)})});
      out.push_back({"P" + s(i - 1) + " T" + s(i - 1) + " P" + s(i - 1) + " = (q-1)P" + s(i - 1) + "^2 - qP" + s(i),
                     product({P(i - 1), T(i - 1), P(i - 1)}) - (q - 1) * product({P(i - 1), P(i - 1)}) + q * P(i)});
    }
  }
  return out;
}

}  // namespace mirhecke
