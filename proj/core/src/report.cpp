/* Copyright 2026 The Witt Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "witt/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace witt {

namespace {

nlohmann::ordered_json to_json(const Claim& c) {
  nlohmann::ordered_json j;
  j["claim_id"] = c.claim_id;
  j["paper_ref"] = c.paper_ref;
  j["universe_size"] = std::to_string(c.universe_size);
  j["passed"] = c.passed();
  j["failure_count"] = std::to_string(c.failure_count);
  j["failures"] = c.failures;
  return j;
}

}  // namespace

void Claim::check(bool ok, const std::string& witness) {
  ++universe_size;
  if (ok) return;
  ++failure_count;
  if (failures.size() < kMaxWitnesses) failures.push_back(witness);
}

bool all_passed(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const Claim& c) { return c.passed(); });
}

std::string report_json(Report r, int indent) {
  std::stable_sort(r.begin(), r.end(), [](const Claim& a, const Claim& b) { return a.claim_id < b.claim_id; });
  nlohmann::ordered_json j;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r) j["claims"].push_back(to_json(c));
  return j.dump(indent);
}

std::string claim_json(const Claim& c, int indent) { return to_json(c).dump(indent); }

}  // namespace witt
