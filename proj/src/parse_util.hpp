// Copyright 2026 The Authors.
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

#ifndef RSM_PARSE_UTIL_HPP
#define RSM_PARSE_UTIL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rsm/types.hpp"

namespace rsm::detail {

struct Line {
  int number = 0;  // 1-based
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens per line; drops blank lines and
// lines whose first non-space character is '#'.
inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = eol == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    ++number;
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' ||
                                raw[i] == '\r')) {
        ++i;
      }
      if (i >= raw.size()) {
        break;
      }
      if (line.tokens.empty() && raw[i] == '#') {
        i = raw.size();
        break;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r') {
        ++i;
      }
      line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    if (eol == std::string_view::npos) {
      break;
    }
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] inline void parse_fail(int line, const std::string& what) {
  fail(errc::parse, "line " + std::to_string(line) + ": " + what);
}

inline void require_cap(const Universe& u, int cap, const char* op) {
  if (u.size() > cap) {
    fail(errc::cap_exceeded,
         std::string(op) + " enumerates all subsets and requires |U| <= " +
             std::to_string(cap) + "; universe has " +
             std::to_string(u.size()) + " elements");
  }
}

}  // namespace rsm::detail

#endif  // RSM_PARSE_UTIL_HPP
