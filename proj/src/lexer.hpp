// Copyright 2026 The reachpipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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
#include <vector>

namespace reachpipe::detail {

struct Token {
  enum class Kind { kNumber, kIdent, kSymbol, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;  // symbol spelling or identifier
  double number = 0.0;
  std::size_t offset = 0;

  bool is(std::string_view sym) const { return kind == Kind::kSymbol && text == sym; }
};

/// Splits expression and constraint text. Symbols: + - * / ( ) & ' and the
/// comparison operators <= >= == != < > =. Offsets include `base_offset`.
std::vector<Token> tokenize(std::string_view text, std::size_t base_offset = 0);

bool is_identifier(std::string_view s);

/// Strict full-match decimal literal parse (optional sign).
bool parse_number(std::string_view s, double& out);

/// Shortest text that reads back as the same double.
std::string format_number(double v);

std::string_view trim(std::string_view s);

/// Splits on `sep` at top level (outside parentheses) and trims each piece.
std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view text, char sep,
                                                                 std::size_t base_offset = 0);

}  // namespace reachpipe::detail
