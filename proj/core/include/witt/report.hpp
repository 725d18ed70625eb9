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

#ifndef WITT_REPORT_HPP
#define WITT_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace witt {

// One checked assertion: how many cases were examined and which failed.
struct Claim {
  Claim() = default;
  Claim(std::string id, std::string ref) : claim_id(std::move(id)), paper_ref(std::move(ref)) {}

  std::string claim_id;
  std::string paper_ref;
  std::uint64_t universe_size = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // at most kMaxWitnesses witnesses

  static constexpr std::size_t kMaxWitnesses = 8;

  bool passed() const { return failure_count == 0; }
  void check(bool ok, const std::string& witness);
  void fail(const std::string& witness) { check(false, witness); }
};

using Report = std::vector<Claim>;

bool all_passed(const Report& r);
// {"claims": [...]}, claims sorted by id, numbers as decimal strings.
std::string report_json(Report r, int indent = 2);
std::string claim_json(const Claim& c, int indent = 2);

}  // namespace witt

#endif  // WITT_REPORT_HPP
