// Copyright 2026 The mtrv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mtrv/errors.hpp"

namespace mtrv::detail {

// Character cursor with line/column tracking for the hand-written parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  // Skips blanks and `#` comments. Newlines are skipped too unless
  // `stop_at_newline` is set.
  void skip_space(bool stop_at_newline = false) {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '\n') {
        if (stop_at_newline) return;
        advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        return;
      }
    }
  }

  bool consume(char c) {
    if (peek() != c || at_end()) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'" + found());
  }

  // Reads `[A-Za-z_][A-Za-z0-9_]*`; empty when none is present.
  std::string_view identifier() {
    std::size_t start = pos_;
    auto alpha = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    if (at_end() || !alpha(peek())) return {};
    while (!at_end() && (alpha(peek()) || (peek() >= '0' && peek() <= '9'))) {
      advance();
    }
    return text_.substr(start, pos_ - start);
  }

  std::string_view expect_identifier(const char* what) {
    std::string_view id = identifier();
    if (id.empty()) fail(std::string("expected ") + what + found());
    return id;
  }

  std::string found() const {
    if (at_end()) return ", found end of input";
    if (peek() == '\n') return ", found end of line";
    return std::string(", found '") + peek() + "'";
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace mtrv::detail
