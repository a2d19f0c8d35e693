#include "mirhecke/serialize.hpp"

#include <stdexcept>
#include <string>

namespace mirhecke {

json to_json(const Laurent& a) {
  const bool in_q = a.is_even();
  json coeffs = json::object();
  for (const auto& [e, c] : a.terms()) coeffs[std::to_string(in_q ? e / 2 : e)] = c.get_str();
  return {{"var", in_q ? "q" : "v"}, {"coeffs", std::move(coeffs)}};
}

Laurent laurent_from_json(const json& j) {
  const std::string var = j.at("var").get<std::string>();
  if (var != "q" && var != "v") throw std::invalid_argument("Laurent JSON: var must be q or v");
  const int scale = var == "q" ? 2 : 1;
  std::map<int, BigInt> terms;
  for (const auto& [e, c] : j.at("coeffs").items()) {
    BigInt value;
    if (value.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("Laurent JSON: bad coefficient");
    terms[std::stoi(e) * scale] += value;
  }
  return Laurent::from_terms(terms);
}

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const BasisIndex& idx) {
  return {{"A", subset_elements(idx.A)}, {"B", subset_elements(idx.B)}, {"w", idx.w.images()}};
}

BasisIndex basis_index_from_json(const json& j) {
  const auto w = j.at("w").get<std::vector<int>>();
  BasisIndex idx{subset_from(j.at("A").get<std::vector<int>>()), subset_from(j.at("B").get<std::vector<int>>()),
                 Perm::from_images(w)};
  validate(idx, static_cast<int>(w.size()));
  return idx;
}

json to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [idx, c] : x.terms()) terms.push_back({{"index", to_json(idx)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"terms", std::move(terms)}};
}

AlgebraElement algebra_element_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  AlgebraElement x(n);
  for (const auto& t : j.at("terms")) {
    const BasisIndex idx = basis_index_from_json(t.at("index"));
    if (idx.n() != n) throw std::invalid_argument("AlgebraElement JSON: index rank mismatch");
    x.add(idx, laurent_from_json(t.at("coeff")));
  }
  return x;
}

namespace {

template <class Terms>
json terms_json(const Terms& terms) {
  json out = json::array();
  for (const auto& [p, c] : terms) out.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
  return out;
}

}  // namespace

json to_json(const SymPoly& p) { return {{"r", p.r()}, {"basis", "m"}, {"terms", terms_json(p.terms())}}; }

json schur_to_json(const std::map<Partition, Laurent>& coeffs, int r) {
  return {{"r", r}, {"basis", "s"}, {"terms", terms_json(coeffs)}};
}

SymPoly sym_poly_from_json(const json& j) {
  const int r = j.at("r").get<int>();
  const std::string basis = j.at("basis").get<std::string>();
  std::map<Partition, Laurent> coeffs;
  for (const auto& t : j.at("terms")) coeffs[partition_from_json(t.at("partition"))] += laurent_from_json(t.at("coeff"));
  if (basis == "s") return from_schur(coeffs, r);
  if (basis != "m") throw std::invalid_argument("SymPoly JSON: basis must be m or s");
  SymPoly p(r);
  for (const auto& [mu, c] : coeffs) p.add(mu, c);
  return p;
}

json to_json(const CharacterTable& t) {
  json labels = json::array();
  for (const auto& p : t.labels) labels.push_back(to_json(p));
  json rows = json::array();
  for (const auto& row : t.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(std::move(r));
  }
  return {{"n", t.n},
          {"variant", t.variant == GVariant::Oracle ? "oracle" : "paper"},
          {"labels", std::move(labels)},
          {"entries", std::move(rows)}};
}

json to_json(const ClassPolyVector& f) {
  json coeffs = json::object();
  for (const auto& [p, c] : f.coeffs) coeffs[to_string(p)] = to_json(c);
  return {{"index", to_json(f.index)}, {"f", std::move(coeffs)}};
}

}  // namespace mirhecke
