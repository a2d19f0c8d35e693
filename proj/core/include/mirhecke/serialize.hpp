#pragma once

#include <map>

#include <nlohmann/json.hpp>

#include "mirhecke/algebra.hpp"
#include "mirhecke/characters.hpp"
#include "mirhecke/symfun.hpp"

namespace mirhecke {

using json = nlohmann::json;

/// {"var": "q"|"v", "coeffs": {"exponent": "integer"}}; q is used whenever
/// every v-exponent is even.
json to_json(const Laurent& a);
Laurent laurent_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const BasisIndex& idx);
BasisIndex basis_index_from_json(const json& j);

json to_json(const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const json& j);

json to_json(const SymPoly& p);
/// Schur coefficient map with its variable count.
json schur_to_json(const std::map<Partition, Laurent>& coeffs, int r);
SymPoly sym_poly_from_json(const json& j);

json to_json(const CharacterTable& t);
json to_json(const ClassPolyVector& f);

}  // namespace mirhecke
