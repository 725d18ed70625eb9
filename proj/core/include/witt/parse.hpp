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

#ifndef WITT_PARSE_HPP
#define WITT_PARSE_HPP

#include <string_view>

#include "witt/ring.hpp"

namespace witt {

// Parses the canonical element syntax: decimal integers, generator names,
// + - * ^ and parentheses, e.g. "3*t^2 + 1". Juxtaposition multiplies ("2t").
// Throws ParseError naming the offending column.
RingElement parse_element(const RingPtr& ring, std::string_view text);

}  // namespace witt

#endif  // WITT_PARSE_HPP
