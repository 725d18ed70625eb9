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

#ifndef WITT_TOOLS_CLI_HPP
#define WITT_TOOLS_CLI_HPP

#include <string>
#include <vector>

#include "witt/error.hpp"

namespace witt::cli {

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit statuses: 0 success, 1 failed checks or other errors, 2 parse errors,
// 3 context errors, 4 arithmetic errors.
int exit_code_for(ErrorCode code);

// Runs the command line; `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace witt::cli

#endif  // WITT_TOOLS_CLI_HPP
