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

#include "witt/parse.hpp"

#include <cctype>
#include <string>

namespace witt {

namespace {

class ElementParser {
 public:
  ElementParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  RingElement parse() {
    RingElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError,
         msg + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  RingElement expr() {
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    RingElement acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RingElement term() {
    RingElement acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_atom()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  RingElement factor() {
    RingElement base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      std::uint64_t e = std::stoull(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(e);
    }
    return base;
  }

  RingElement atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RingElement v = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer n(std::string(text_.substr(start, pos_ - start)));
      return {ring_, ring_->from_integer(n)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto g = ring_->generator(name);
      if (!g) {
        pos_ = start;
        error("unknown generator '" + name + "' for " + ring_->name());
      }
      return {ring_, std::move(*g)};
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_element(const RingPtr& ring, std::string_view text) {
  return ElementParser(ring, text).parse();
}

}  // namespace witt
