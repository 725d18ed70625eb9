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

#include "expr.hpp"

#include <cctype>

#include "witt/parse.hpp"

namespace witt::cli {

namespace {

bool opener(char c) { return c == '(' || c == '[' || c == '<'; }
bool closer(char c) { return c == ')' || c == ']' || c == '>'; }

class Parser {
 public:
  Parser(std::string_view s, const WittContext& ctx, const AlgebraPtr& alg, EvalPath path)
      : s_(s), ctx_(ctx), alg_(alg), path_(path) {}

  ExprValue top() {
    ExprValue r;
    skip();
    std::optional<std::size_t> index;
    bool reduced = false;
    if (keyword("rgh_")) {
      reduced = true;
      index = number();
    } else if (keyword("gh_")) {
      index = number();
    } else if (keyword("gh")) {
      r.kind = ExprValue::Kind::Ghost;
      r.ghost = ghost(sum());
      finish();
      return r;
    }
    const WittVector w = sum();
    finish();
    if (index) {
      r.kind = ExprValue::Kind::Element;
      r.element = ghost_component(w, *index, reduced);
    } else {
      r.vector = w;
    }
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what, std::size_t at) const {
    fail(ErrorCode::ParseError, what + " at column " + std::to_string(at + 1) + " of \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool keyword(std::string_view k) {
    skip();
    if (s_.substr(pos_, k.size()) != k) return false;
    const std::size_t end = pos_ + k.size();
    // "gh" must not swallow an identifier such as "ghx"; "gh_" is followed by digits.
    if (k.back() != '_' && end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number", start);
    if (pos_ - start > 9) error("number too large", start);
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'", pos_);
  }

  // Position of the bracket closing the one at `open`.
  std::size_t matching(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < s_.size(); ++i) {
      if (opener(s_[i])) ++depth;
      if (closer(s_[i]) && --depth == 0) return i;
    }
    error(std::string("unbalanced '") + s_[open] + "'", open);
  }

  bool has_top_level_comma(std::size_t open, std::size_t close) const {
    int depth = 0;
    for (std::size_t i = open + 1; i < close; ++i) {
      if (opener(s_[i])) ++depth;
      if (closer(s_[i])) --depth;
      if (depth == 0 && s_[i] == ',') return true;
    }
    return false;
  }

  std::vector<Value> elements(std::size_t open, std::size_t close, bool allow_trailing) {
    std::vector<Value> out;
    std::size_t start = open + 1;
    const auto parts = split_top_level(s_.substr(open + 1, close - open - 1));
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const std::string& part = parts[k];
      const bool blank = part.find_first_not_of(" \t") == std::string::npos;
      if (blank && allow_trailing && k + 1 == parts.size() && k > 0) break;
      if (blank) error("empty component", start);
      try {
        out.push_back(parse_element(alg_->target(), part).value());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        error(std::string(e.what()) + " (component starting", start);
      }
      start += part.size() + 1;
    }
    return out;
  }

  WittVector sum() {
    WittVector acc = product();
    while (true) {
      if (accept('+')) {
        acc = add(acc, product(), path_);
      } else if (accept('-')) {
        acc = sub(acc, product(), path_);
      } else {
        return acc;
      }
    }
  }

  WittVector product() {
    WittVector acc = unary();
    while (accept('*')) acc = mul(acc, unary(), path_);
    return acc;
  }

  WittVector unary() {
    if (accept('-')) return negate(unary(), path_);
    WittVector a = atom();
    if (accept('^')) a = pow(a, number(), path_);
    return a;
  }

  std::size_t repeat() { return accept('^') ? number() : 1; }

  WittVector atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of expression", pos_);
    const std::size_t at = pos_;
    const char c = s_[pos_];
    if (c == '(') {
      const std::size_t close = matching(at);
      if (has_top_level_comma(at, close)) {
        auto comps = elements(at, close, true);
        pos_ = close + 1;
        const auto ctx = ctx_.with_length(comps.size() - 1);
        return WittVector(ctx, alg_, std::move(comps));
      }
      ++pos_;
      WittVector inner = sum();
      if (!accept(')')) error("expected ')'", pos_);
      return inner;
    }
    if (c == '<') {
      const std::size_t close = matching(at);
      auto entries = elements(at, close, false);
      pos_ = close + 1;
      const auto ctx = ctx_.with_length(entries.size() - 1);
      return unghost(GhostVector(ctx, alg_, std::move(entries)));
    }
    if (c == '[') {
      const std::size_t close = matching(at);
      auto a = elements(at, close, false);
      if (a.size() != 1) error("a Teichmueller vector takes one element", at);
      pos_ = close + 1;
      return teichmuller(a[0], ctx_, alg_);
    }
    if (c == 'V') {
      ++pos_;
      const std::size_t j = repeat();
      return verschiebung(atom(), j);
    }
    if (c == 'F') {
      ++pos_;
      std::size_t j = repeat();
      WittVector w = atom();
      while (j-- > 0) w = frobenius(w, path_);
      return w;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t k = number();
      return scalar(ctx_.base()->from_integer(Integer(static_cast<unsigned long>(k))), ctx_, alg_);
    }
    error(std::string("unexpected '") + c + "'", at);
  }

  std::string_view s_;
  const WittContext& ctx_;
  const AlgebraPtr& alg_;
  EvalPath path_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : text) {
    if (opener(c)) ++depth;
    if (closer(c)) --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

ExprValue evaluate_expression(std::string_view text, const WittContext& ctx, const AlgebraPtr& alg, EvalPath path) {
  return Parser(text, ctx, alg, path).top();
}

}  // namespace witt::cli
