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

#ifndef WITT_TESTS_HELPERS_HPP
#define WITT_TESTS_HELPERS_HPP

#include <doctest.h>

#include <string>

#include "witt/error.hpp"
#include "witt/parse.hpp"
#include "witt/rings.hpp"

namespace testing {

inline witt::Value el(const witt::RingPtr& r, const std::string& s) { return witt::parse_element(r, s).value(); }

// Runs f and returns the error code it throws; fails the test if none.
template <class F>
witt::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const witt::Error& e) {
    return e.code();
  }
  FAIL("expected a witt::Error");
  return witt::ErrorCode::Unsupported;
}

}  // namespace testing

#endif  // WITT_TESTS_HELPERS_HPP
