#include "mirhecke/report.hpp"

#include <algorithm>

namespace mirhecke {

bool Report::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<const CheckResult*> Report::failures() const {
  std::vector<const CheckResult*> out;
  for (const auto& c : results)
    if (!c.passed) out.push_back(&c);
  return out;
}

nlohmann::json to_json(const CheckResult& c) {
  nlohmann::json j;
  j["check"] = c.check;
  j["n"] = c.n;
  j["r"] = c.r ? nlohmann::json(*c.r) : nlohmann::json(nullptr);
  j["status"] = c.passed ? "pass" : "fail";
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : r.results) arr.push_back(to_json(c));
  return arr;
}

}  // namespace mirhecke
