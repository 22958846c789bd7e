// Copyright 2026 The ISSP Toolkit Authors
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

// Plain-text instance files:
//
//   # comment lines start with '#'
//   n T
//   lo_1 hi_1
//   ...
//   lo_n hi_n
//
// All tokens are base-10 integers.

#ifndef ISSP_IO_HPP_
#define ISSP_IO_HPP_

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "issp/core.hpp"

namespace issp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline Int token_int(std::string_view tok, std::size_t line) {
  auto v = parse_int(tok);
  if (!v) throw ParseError(line, "not an integer: '" + std::string(tok) + "'");
  return *v;
}

}  // namespace detail

/// Parses an instance file. Syntax problems raise ParseError; semantic ones
/// (bad endpoints, target) raise Error from validate.
inline Instance parse_instance(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    auto toks = detail::split_tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    rows.emplace_back(line_no, std::move(toks));
  }
  if (rows.empty()) throw ParseError(line_no, "missing header 'n T'");
  const auto& [head_line, head] = rows.front();
  if (head.size() != 2) throw ParseError(head_line, "header must be 'n T'");
  const Int n = detail::token_int(head[0], head_line);
  const Int target = detail::token_int(head[1], head_line);
  if (n < 0) throw ParseError(head_line, "negative interval count");
  if (static_cast<Int>(rows.size() - 1) != n) {
    throw ParseError(rows.back().first,
                     "expected " + to_string(n) + " interval lines, found " +
                         std::to_string(rows.size() - 1));
  }
  std::vector<std::pair<Int, Int>> items;
  items.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [ln, toks] = rows[r];
    if (toks.size() != 2) throw ParseError(ln, "expected 'lo hi'");
    items.emplace_back(detail::token_int(toks[0], ln),
                       detail::token_int(toks[1], ln));
  }
  return validate(items, target);
}

/// Canonical form: single spaces, no comments, trailing newline.
inline std::string serialize_instance(const Instance& inst) {
  std::string out = std::to_string(inst.size()) + " " +
                    to_string(inst.target) + "\n";
  for (const auto& iv : inst.intervals) {
    out += to_string(iv.lo);
    out += ' ';
    out += to_string(iv.hi);
    out += '\n';
  }
  return out;
}

}  // namespace issp

#endif  // ISSP_IO_HPP_
