#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mirhecke {

struct CheckResult {
  std::string check;
  int n = 0;
  std::optional<int> r;
  bool passed = false;
  std::optional<std::string> witness;
};

struct Report {
  std::vector<CheckResult> results;

  void add(CheckResult c) { results.push_back(std::move(c)); }
  void add(std::string check, int n, std::optional<int> r, bool passed, std::optional<std::string> witness = {}) {
    results.push_back({std::move(check), n, r, passed, passed ? std::nullopt : std::move(witness)});
  }
  void append(const Report& o) { results.insert(results.end(), o.results.begin(), o.results.end()); }
  bool passed() const;
  std::vector<const CheckResult*> failures() const;
};

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const Report& r);

}  // namespace mirhecke
