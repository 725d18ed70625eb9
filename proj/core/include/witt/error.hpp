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

#ifndef WITT_ERROR_HPP
#define WITT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace witt {

enum class ErrorCode {
  DivisionInexact,
  NotPrimeElement,
  CongruenceViolation,
  InternalIntegrityError,
  ContextMismatch,
  LengthZero,
  IndexOutOfRange,
  NotAUnit,
  TorsionNotSupported,
  NotDivisorClosed,
  NotRectangular,
  UnsupportedPresentation,
  LiftViolation,
  NotSurjective,
  InvalidRing,
  ParseError,
  ResourceLimit,
  Unsupported,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this type; `code()` says which.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace witt

#endif  // WITT_ERROR_HPP
