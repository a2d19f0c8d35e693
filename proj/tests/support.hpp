#pragma once

#include <map>
#include <string>

#include "mirhecke/laurent.hpp"
#include "mirhecke/partition.hpp"

namespace testing {

inline mirhecke::Laurent L(const char* text) { return mirhecke::parse_laurent(text); }

inline std::map<mirhecke::Partition, mirhecke::Laurent> coeff_map(
    std::initializer_list<std::pair<mirhecke::Partition, const char*>> entries) {
  std::map<mirhecke::Partition, mirhecke::Laurent> out;
  for (const auto& [p, c] : entries) {
    auto value = L(c);
    if (!value.is_zero()) out[p] = value;
  }
  return out;
}

}  // namespace testing
